#!/usr/bin/env python3
"""Generate the bundled two-site election fixture corpus.

Site "Harbor Ledger" leans on fear/anger vocabulary, "Summit Daily" on
joy/trust vocabulary. Most topical articles are published on the event day
(2016-11-09). Off-topic articles share the window but never mention the
query terms. Output is deterministic.
"""
import csv
import random
import sys
from datetime import date, timedelta
from pathlib import Path

OUT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data/fixtures/election"
EVENT = date(2016, 11, 9)

TOPIC = ["election", "trump", "vote", "campaign", "president", "ballot", "results", "voters"]
ENTITIES = ["Donald Trump", "Hillary Clinton", "Washington", "Ohio", "Pennsylvania", "FBI", "Republican Party",
            "Democratic Party", "Mike Pence"]
FEAR = ["assault", "war", "military", "revolution", "threat", "danger", "crisis", "panic", "terror", "afraid",
        "violence", "attack", "chaos"]
JOY = ["victory", "friend", "god", "celebrate", "happy", "triumph", "cheer", "proud", "glory", "hope",
       "blessing", "love"]
FILLER = ["report", "people", "week", "city", "statement", "officials", "crowd", "night", "country", "street",
          "leaders", "office", "morning", "news", "supporters", "speech", "state", "counties"]
OFFTOPIC = ["weather", "rain", "forecast", "football", "season", "coach", "recipe", "garden", "market", "stocks",
            "traffic", "bridge", "museum", "concert"]

LEXICON = {
    "assault": {"anger", "fear"}, "war": {"anger", "fear", "sadness"}, "military": {"fear"},
    "revolution": {"anger", "anticipation", "fear"}, "threat": {"anger", "fear"}, "danger": {"fear", "sadness"},
    "crisis": {"fear"}, "panic": {"fear"}, "terror": {"fear"}, "afraid": {"fear"},
    "violence": {"anger", "fear", "sadness"}, "attack": {"anger", "fear"}, "chaos": {"anger", "fear", "sadness"},
    "victory": {"anticipation", "joy", "trust"}, "friend": {"joy", "trust"},
    "god": {"anticipation", "fear", "joy", "trust"}, "celebrate": {"anticipation", "joy"},
    "happy": {"anticipation", "joy", "trust"}, "triumph": {"anticipation", "joy"},
    "cheer": {"anticipation", "joy", "surprise", "trust"}, "proud": {"anticipation", "joy", "trust"},
    "glory": {"anticipation", "joy"}, "hope": {"anticipation", "joy", "surprise", "trust"},
    "blessing": {"anticipation", "joy", "trust"}, "love": {"joy"},
    "rain": {"sadness"}, "concert": {"joy"}, "garden": {"joy"},
}
CATEGORIES = ["anger", "anticipation", "disgust", "fear", "joy", "negative", "positive", "sadness", "surprise", "trust"]
POSITIVE = {w for w, e in LEXICON.items() if "joy" in e}
NEGATIVE = {w for w, e in LEXICON.items() if "fear" in e and "joy" not in e}


def sentence(rng, words):
    s = " ".join(words)
    return s[0].upper() + s[1:] + rng.choice([".", ".", "!", ";"])


def topical_body(rng, emotional):
    words = []
    for _ in range(6):
        chunk = rng.sample(TOPIC, 2) + rng.sample(FILLER, 2) + rng.sample(emotional, 1)
        if rng.random() < 0.6:
            chunk.append(rng.choice(ENTITIES))
        rng.shuffle(chunk)
        words.append(sentence(rng, chunk))
    return " ".join(words)


def offtopic_body(rng):
    return " ".join(sentence(rng, rng.sample(OFFTOPIC, 3) + rng.sample(FILLER, 2)) for _ in range(5))


def main():
    rng = random.Random(2016)
    OUT.mkdir(parents=True, exist_ok=True)
    rows = []
    sites = [("Harbor Ledger", FEAR), ("Summit Daily", JOY)]
    counter = 0
    for site, emotional in sites:
        for i in range(24):
            offset = 0 if i < 16 else rng.choice([-3, -2, -1, 1, 2, 3])
            counter += 1
            rows.append({"id": f"e{counter:03d}", "title": f"{site} election coverage {i + 1}", "publication": site,
                         "author": f"{site.split()[0]} Staff", "date": (EVENT + timedelta(days=offset)).isoformat(),
                         "url": f"https://example.org/{site.split()[0].lower()}/{i + 1}",
                         "content": topical_body(rng, emotional)})
        for i in range(8):
            counter += 1
            rows.append({"id": f"e{counter:03d}", "title": f"{site} local news {i + 1}", "publication": site,
                         "author": "", "date": (EVENT + timedelta(days=rng.randint(-3, 3))).isoformat(),
                         "url": "", "content": offtopic_body(rng)})
    rng.shuffle(rows)
    with open(OUT / "corpus.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.DictWriter(f, fieldnames=["id", "title", "publication", "author", "date", "content", "url"])
        w.writeheader()
        w.writerows(rows)
    with open(OUT / "lexicon.tsv", "w", encoding="utf-8") as f:
        for word in sorted(LEXICON):
            for cat in CATEGORIES:
                if cat == "positive":
                    flag = word in POSITIVE
                elif cat == "negative":
                    flag = word in NEGATIVE
                else:
                    flag = cat in LEXICON[word]
                f.write(f"{word}\t{cat}\t{int(flag)}\n")
    (OUT / "persons.txt").write_text("Donald Trump\nHillary Clinton\nMike Pence\nTrump\nClinton\n")
    (OUT / "locations.txt").write_text("Washington\nOhio\nPennsylvania\n")
    (OUT / "organizations.txt").write_text("FBI\nRepublican Party\nDemocratic Party\n")


if __name__ == "__main__":
    main()
