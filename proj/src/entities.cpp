#include "newsscope/entities.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "newsscope/error.hpp"

namespace newsscope {

namespace {

constexpr std::array<std::string_view, kEntityTypeCount> kTypeNames = {"person", "location",
                                                                       "organization"};

struct Candidate {
    std::size_t first;  // position in whatever unit the caller resolves over
    std::size_t last;   // exclusive
    EntityMention mention;
};

// Greedy longest-first, then leftmost, then by type. Output sorted by position.
std::vector<EntityMention> resolve(std::vector<Candidate> candidates) {
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        const auto la = a.last - a.first, lb = b.last - b.first;
        if (la != lb) return la > lb;
        if (a.first != b.first) return a.first < b.first;
        return a.mention.type < b.mention.type;
    });
    std::vector<Candidate> accepted;
    for (auto& c : candidates) {
        const bool overlaps = std::any_of(accepted.begin(), accepted.end(), [&](const Candidate& o) {
            return c.first < o.last && o.first < c.last;
        });
        if (!overlaps) accepted.push_back(std::move(c));
    }
    std::sort(accepted.begin(), accepted.end(),
              [](const Candidate& a, const Candidate& b) { return a.first < b.first; });
    std::vector<EntityMention> out;
    out.reserve(accepted.size());
    for (auto& c : accepted) out.push_back(std::move(c.mention));
    return out;
}

}  // namespace

std::string_view entity_type_name(EntityType t) noexcept {
    return kTypeNames[static_cast<std::size_t>(t)];
}

std::optional<EntityType> parse_entity_type(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kTypeNames.size(); ++i)
        if (kTypeNames[i] == name) return static_cast<EntityType>(i);
    return std::nullopt;
}

EntitySets entity_sets(const std::vector<EntityMention>& mentions) {
    EntitySets sets;
    for (const auto& m : mentions) sets[static_cast<std::size_t>(m.type)].insert(m.entity);
    return sets;
}

std::string canonical_phrase(std::string_view phrase) {
    static const StopwordSet kNone;
    const auto tokens = tokenize(phrase, kNone);
    std::string out;
    for (const auto& t : tokens.spans) {
        if (!out.empty()) out.push_back(' ');
        out += t.text;
    }
    return out;
}

void Gazetteer::add(EntityType type, std::string_view phrase) {
    static const StopwordSet kNone;
    auto tokens = tokenize(phrase, kNone);
    if (tokens.spans.empty()) return;
    Phrase p{{}, type};
    for (auto& t : tokens.spans) p.tokens.push_back(std::move(t.text));
    auto& bucket = by_first_token_[p.tokens.front()];
    const bool dup = std::any_of(bucket.begin(), bucket.end(), [&](const Phrase& q) {
        return q.type == p.type && q.tokens == p.tokens;
    });
    if (dup) return;
    bucket.push_back(std::move(p));
    ++size_;
}

void Gazetteer::load(EntityType type, std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        add(type, line);
    }
}

void Gazetteer::load(EntityType type, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw validation_error("cannot open gazetteer " + path.string(),
                               "gazetteer_" + std::string(entity_type_name(type)));
    load(type, in);
}

std::vector<std::string> Gazetteer::phrases(EntityType type) const {
    std::vector<std::string> out;
    for (const auto& [_, bucket] : by_first_token_) {
        for (const auto& p : bucket) {
            if (p.type != type) continue;
            std::string joined;
            for (const auto& t : p.tokens) {
                if (!joined.empty()) joined.push_back(' ');
                joined += t;
            }
            out.push_back(std::move(joined));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EntityMention> Gazetteer::match(const TokenizedText& text,
                                            const StopwordSet& stopwords) const {
    std::vector<Candidate> candidates;
    const auto& spans = text.spans;
    for (std::size_t i = 0; i < spans.size(); ++i) {
        const auto it = by_first_token_.find(spans[i].text);
        if (it == by_first_token_.end()) continue;
        for (const auto& phrase : it->second) {
            const auto n = phrase.tokens.size();
            if (i + n > spans.size()) continue;
            bool ok = true;
            for (std::size_t j = 1; j < n && ok; ++j) ok = spans[i + j].text == phrase.tokens[j];
            if (!ok) continue;
            std::string canonical;
            for (const auto& t : phrase.tokens) {
                if (!canonical.empty()) canonical.push_back(' ');
                canonical += t;
            }
            if (stopwords.contains(canonical)) continue;
            candidates.push_back(Candidate{
                i, i + n,
                EntityMention{phrase.type, std::move(canonical), spans[i].begin, spans[i + n - 1].end}});
        }
    }
    return resolve(std::move(candidates));
}

EntityAnnotations EntityAnnotations::parse(std::istream& in) {
    EntityAnnotations result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto where = "entity sidecar line " + std::to_string(line_no) + ": ";
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw validation_error(where + e.what(), "entity_sidecar");
        }
        try {
            const auto type = parse_entity_type(j.at("type").get<std::string>());
            if (!type) throw validation_error(where + "unknown entity type", "entity_sidecar");
            Raw raw{*type, j.at("surface").get<std::string>(), j.at("start").get<std::size_t>(),
                    j.at("end").get<std::size_t>()};
            if (raw.start >= raw.end)
                throw validation_error(where + "start must be < end", "entity_sidecar");
            result.by_article_[j.at("article_id").get<std::string>()].push_back(std::move(raw));
        } catch (const nlohmann::json::exception& e) {
            throw validation_error(where + e.what(), "entity_sidecar");
        }
    }
    return result;
}

EntityAnnotations EntityAnnotations::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open entity sidecar " + path.string(), "entity_sidecar");
    return parse(in);
}

std::optional<std::vector<EntityMention>> EntityAnnotations::for_article(
    std::string_view id, std::string_view body, const StopwordSet& stopwords) const {
    const auto it = by_article_.find(id);
    if (it == by_article_.end()) return std::nullopt;
    std::vector<Candidate> candidates;
    for (const auto& raw : it->second) {
        if (raw.end > body.size())
            throw validation_error("entity sidecar span for article " + std::string(id) +
                                       " exceeds body length",
                                   "entity_sidecar");
        auto canonical = canonical_phrase(raw.surface);
        if (canonical.empty() || stopwords.contains(canonical)) continue;
        candidates.push_back(
            Candidate{raw.start, raw.end, EntityMention{raw.type, std::move(canonical), raw.start, raw.end}});
    }
    return resolve(std::move(candidates));
}

}  // namespace newsscope
