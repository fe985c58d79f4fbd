#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace newsscope::testing {

std::filesystem::path data_dir() { return NEWSSCOPE_DATA_DIR; }

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("newsscope_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

StopwordSet small_stopwords() {
    return StopwordSet({"a", "an", "and", "in", "of", "on", "the", "to", "was", "with"});
}

EmotionLexicon small_lexicon() {
    std::istringstream in(
        "victory\tjoy\t1\n"
        "joy\tjoy\t1\n"
        "hope\tanticipation\t1\n"
        "fear\tfear\t1\n"
        "war\tanger\t1\n"
        "war\tfear\t1\n"
        "war\tpositive\t0\n"
        "war\tnegative\t1\n"
        "friend\tjoy\t1\n"
        "friend\ttrust\t1\n"
        "grief\tsadness\t1\n"
        "shock\tsurprise\t1\n"
        "rotten\tdisgust\t1\n");
    return EmotionLexicon::parse(in);
}

Gazetteer small_gazetteer() {
    Gazetteer g;
    g.add(EntityType::person, "Donald Trump");
    g.add(EntityType::person, "Hillary Clinton");
    g.add(EntityType::person, "Trump");
    g.add(EntityType::location, "Phoenix");
    g.add(EntityType::location, "Ohio");
    g.add(EntityType::location, "New York");
    g.add(EntityType::location, "New York City");
    g.add(EntityType::location, "Washington");
    g.add(EntityType::organization, "FBI");
    return g;
}

IngestOptions fixture_options(std::size_t keyword_count) {
    IngestOptions o;
    o.corpus_name = "fixture";
    o.resources.stopwords = small_stopwords();
    o.resources.lexicon = small_lexicon();
    o.resources.gazetteer = small_gazetteer();
    o.resources.keyword_count = keyword_count;
    return o;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += '"';
    return out;
}

std::string make_csv(const std::vector<CsvArticle>& rows, bool with_id) {
    std::string out = with_id ? "id,title,publication,author,date,content,url\n"
                              : "title,publication,author,date,content,url\n";
    for (const auto& r : rows) {
        if (with_id) out += csv_field(r.id) + ",";
        out += csv_field(r.title) + "," + csv_field(r.site) + "," + csv_field(r.author) + "," +
               csv_field(r.date) + "," + csv_field(r.body) + "," + csv_field(r.url) + "\n";
    }
    return out;
}

CorpusStore store_from_csv(const std::string& csv, const IngestOptions& options) {
    std::istringstream in(csv);
    return CorpusStore::ingest(in, options).store;
}

CorpusStore store_from_rows(const std::vector<CsvArticle>& rows, const IngestOptions& options) {
    return store_from_csv(make_csv(rows), options);
}

const std::vector<std::string>& synthetic_vocabulary() {
    static const std::vector<std::string> vocab = {
        "election", "vote", "ballot", "senate", "budget", "economy", "market", "storm", "flood", "rescue",
        "court", "ruling", "trade", "tariff", "strike", "union", "school", "teacher", "hospital", "nurse",
        "victory", "joy", "hope", "fear", "war", "friend", "grief", "shock", "rotten", "city",
        "county", "report", "mayor", "council", "police", "fire", "bridge", "road", "river", "farm",
        "trump", "ohio", "phoenix", "fbi", "washington"};
    return vocab;
}

std::vector<CsvArticle> synthetic_articles(std::size_t n, std::uint64_t seed, const std::vector<std::string>& sites,
                                           int days, std::size_t words_per_article) {
    std::mt19937_64 rng(seed);
    const auto& vocab = synthetic_vocabulary();
    const auto base = *Date::parse("2020-03-01");
    std::vector<CsvArticle> rows;
    for (std::size_t i = 0; i < n; ++i) {
        CsvArticle a;
        a.id = "s" + std::to_string(i);
        a.title = "article " + std::to_string(i);
        a.site = sites[rng() % sites.size()];
        a.date = (base + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(days))).to_string();
        // skewed word choice so tf and df vary
        const std::size_t len = words_per_article / 2 + rng() % words_per_article;
        for (std::size_t w = 0; w < len; ++w) {
            const auto r = rng() % (vocab.size() * vocab.size());
            const auto idx = static_cast<std::size_t>(std::sqrt(static_cast<double>(r)));
            if (!a.body.empty()) a.body += ' ';
            a.body += vocab[std::min(idx, vocab.size() - 1)];
        }
        rows.push_back(std::move(a));
    }
    return rows;
}

CorpusStore election_store() {
    const auto dir = data_dir() / "fixtures" / "election";
    const auto options = IngestConfig::load(dir / "ingest.ini").load_options();
    std::ifstream in(dir / "corpus.csv", std::ios::binary);
    return CorpusStore::ingest(in, options).store;
}

}  // namespace newsscope::testing
