#include "newsscope/serialize.hpp"

#include "newsscope/error.hpp"

namespace newsscope {

using nlohmann::json;

void to_json(json& j, const Date& d) { j = d.to_string(); }

void from_json(const json& j, Date& d) {
    const auto parsed = Date::parse(j.get<std::string>());
    if (!parsed) throw validation_error("invalid date '" + j.get<std::string>() + "'");
    d = *parsed;
}

void to_json(json& j, const Article& a) {
    j = json{{"id", a.id},     {"title", a.title},   {"site", a.site},
             {"author", a.author}, {"published_at", a.published_at},
             {"url", a.url},   {"body", a.body}};
}

void from_json(const json& j, Article& a) {
    j.at("id").get_to(a.id);
    j.at("title").get_to(a.title);
    j.at("site").get_to(a.site);
    j.at("author").get_to(a.author);
    j.at("published_at").get_to(a.published_at);
    j.at("url").get_to(a.url);
    j.at("body").get_to(a.body);
}

void to_json(json& j, const EntityMention& m) {
    j = json{{"type", entity_type_name(m.type)},
             {"entity", m.entity},
             {"start", m.begin},
             {"end", m.end}};
}

void from_json(const json& j, EntityMention& m) {
    const auto type = parse_entity_type(j.at("type").get<std::string>());
    if (!type) throw validation_error("unknown entity type", "type");
    m.type = *type;
    j.at("entity").get_to(m.entity);
    j.at("start").get_to(m.begin);
    j.at("end").get_to(m.end);
}

json emotion_to_json(const EmotionVector& v) {
    json out = json::object();
    for (std::size_t i = 0; i < kEmotionCount; ++i) out[std::string(emotion_name(emotion_at(i)))] = v[i];
    return out;
}

void to_json(json& j, const FeatureSet& f) {
    json keywords = json::array();
    for (const auto& k : f.keywords) keywords.push_back(json::array({k.term, k.score}));
    json emotion = json::array();
    for (double e : f.emotion) emotion.push_back(e);
    json counts = json::object();
    for (const auto& [term, n] : f.term_counts) counts[term] = n;
    j = json{{"article_id", f.article_id},
             {"keywords", std::move(keywords)},
             {"mentions", f.mentions},
             {"emotion", std::move(emotion)},
             {"emotion_degenerate", f.emotion_degenerate},
             {"token_count", f.token_count},
             {"term_counts", std::move(counts)}};
}

void from_json(const json& j, FeatureSet& f) {
    j.at("article_id").get_to(f.article_id);
    f.keywords.clear();
    for (const auto& k : j.at("keywords"))
        f.keywords.push_back(Keyword{k.at(0).get<std::string>(), k.at(1).get<double>()});
    f.mentions = j.at("mentions").get<std::vector<EntityMention>>();
    f.entities = entity_sets(f.mentions);
    const auto& emotion = j.at("emotion");
    if (emotion.size() != kEmotionCount) throw validation_error("emotion vector must have 8 components");
    for (std::size_t i = 0; i < kEmotionCount; ++i) f.emotion[i] = emotion[i].get<double>();
    j.at("emotion_degenerate").get_to(f.emotion_degenerate);
    j.at("token_count").get_to(f.token_count);
    f.term_counts.clear();
    for (const auto& [term, n] : j.at("term_counts").items()) f.term_counts[term] = n.get<std::size_t>();
}

void to_json(json& j, const SiteCount& s) { j = json{{"site", s.site}, {"count", s.count}}; }

void from_json(const json& j, SiteCount& s) {
    j.at("site").get_to(s.site);
    j.at("count").get_to(s.count);
}

void to_json(json& j, const StoreManifest& m) {
    json range = nullptr;
    if (m.date_min && m.date_max) range = json{{"min", *m.date_min}, {"max", *m.date_max}};
    j = json{{"schema_version", 1},
             {"corpus_name", m.corpus_name},
             {"article_count", m.article_count},
             {"sites", m.sites},
             {"date_range", std::move(range)},
             {"ingest_config_digest", m.ingest_config_digest},
             {"keyword_count", m.keyword_count}};
}

void from_json(const json& j, StoreManifest& m) {
    j.at("corpus_name").get_to(m.corpus_name);
    j.at("article_count").get_to(m.article_count);
    m.sites = j.at("sites").get<std::vector<SiteCount>>();
    const auto& range = j.at("date_range");
    if (range.is_null()) {
        m.date_min.reset();
        m.date_max.reset();
    } else {
        m.date_min = range.at("min").get<Date>();
        m.date_max = range.at("max").get<Date>();
    }
    j.at("ingest_config_digest").get_to(m.ingest_config_digest);
    j.at("keyword_count").get_to(m.keyword_count);
}

void to_json(json& j, const IngestReport& r) {
    j = json{{"total_rows", r.total_rows},
             {"accepted", r.accepted},
             {"rejected", r.rejected},
             {"rejections", r.rejections}};
}

}  // namespace newsscope
