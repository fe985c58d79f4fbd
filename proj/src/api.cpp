#include "newsscope/api.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "newsscope/clustering.hpp"
#include "newsscope/digest.hpp"
#include "newsscope/ordination.hpp"
#include "newsscope/overview.hpp"
#include "newsscope/retrieval.hpp"
#include "newsscope/serialize.hpp"
#include "newsscope/similarity.hpp"

namespace newsscope {

using nlohmann::json;

namespace {

json envelope(json body) {
    body["schema_version"] = kSchemaVersion;
    return body;
}

void require_object(const json& req) {
    if (!req.is_object()) throw validation_error("request body must be a JSON object", "body");
}

const json* optional_field(const json& req, const char* name) {
    const auto it = req.find(name);
    if (it == req.end() || it->is_null()) return nullptr;
    return &*it;
}

const json& required_field(const json& req, const char* name) {
    const auto* f = optional_field(req, name);
    if (!f) throw validation_error(std::string("missing field '") + name + "'", name);
    return *f;
}

std::string get_string(const json& v, const char* name) {
    if (!v.is_string()) throw validation_error(std::string("'") + name + "' must be a string", name);
    return v.get<std::string>();
}

std::vector<std::string> get_string_list(const json& v, const char* name) {
    if (!v.is_array()) throw validation_error(std::string("'") + name + "' must be an array of strings", name);
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(get_string(e, name));
    return out;
}

std::uint64_t get_unsigned(const json& v, const char* name) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw validation_error(std::string("'") + name + "' must be a non-negative integer", name);
    return v.get<std::uint64_t>();
}

double get_number(const json& v, const char* name) {
    if (!v.is_number()) throw validation_error(std::string("'") + name + "' must be a number", name);
    return v.get<double>();
}

bool get_bool(const json& v, const char* name) {
    if (!v.is_boolean()) throw validation_error(std::string("'") + name + "' must be a boolean", name);
    return v.get<bool>();
}

Date get_date(const json& v, const char* name) {
    const auto d = Date::parse(get_string(v, name));
    if (!d) throw validation_error(std::string("'") + name + "' must be a YYYY-MM-DD date", name);
    return *d;
}

std::vector<std::string> article_ids(const CorpusStore& store, const json& req, std::size_t minimum) {
    auto ids = get_string_list(required_field(req, "article_ids"), "article_ids");
    if (ids.size() < minimum)
        throw validation_error("at least " + std::to_string(minimum) + " article ids are required", "article_ids");
    std::set<std::string> seen;
    for (const auto& id : ids) {
        if (!seen.insert(id).second) throw validation_error("duplicate article id '" + id + "'", "article_ids");
        if (!store.contains(id)) throw not_found("unknown article id '" + id + "'", "article_ids");
    }
    return ids;
}

DistanceWeights get_weights(const json& req) {
    DistanceWeights w;
    if (const auto* f = optional_field(req, "weights")) {
        if (!f->is_object()) throw validation_error("'weights' must be an object", "weights");
        if (const auto* v = optional_field(*f, "keyword")) w.keyword = get_number(*v, "weights.keyword");
        if (const auto* v = optional_field(*f, "entity")) w.entity = get_number(*v, "weights.entity");
        if (const auto* v = optional_field(*f, "temporal")) w.temporal = get_number(*v, "weights.temporal");
    }
    w.validate();
    return w;
}

std::int32_t get_window(const CorpusStore& store, const json& req, const std::vector<std::string>& ids) {
    const auto span = date_span(store, ids);
    const auto* f = optional_field(req, "R");
    if (!f) return span;
    const auto r = get_unsigned(*f, "R");
    if (r < static_cast<std::uint64_t>(span) || r > 1'000'000)
        throw validation_error("'R' must cover the articles' date span (" + std::to_string(span) + " days)", "R");
    return static_cast<std::int32_t>(r);
}

std::string get_space(const json& req) {
    const auto* f = optional_field(req, "cluster_space");
    if (!f) return "aggregate";
    auto s = get_string(*f, "cluster_space");
    if (s != "aggregate" && s != "xy")
        throw validation_error("'cluster_space' must be \"aggregate\" or \"xy\"", "cluster_space");
    return s;
}

std::uint64_t get_seed(const json& req, std::uint64_t fallback) {
    const auto* f = optional_field(req, "seed");
    return f ? get_unsigned(*f, "seed") : fallback;
}

EntityTypeSet get_types(const json& req) {
    const auto* f = optional_field(req, "types");
    if (!f) return kAllTypes;
    EntityTypeSet types;
    for (const auto& name : get_string_list(*f, "types")) {
        const auto t = parse_entity_type(name);
        if (!t) throw validation_error("unknown entity type '" + name + "'", "types");
        types.set(static_cast<std::size_t>(*t));
    }
    if (types.none()) throw validation_error("at least one entity type is required", "types");
    return types;
}

json types_json(EntityTypeSet types) {
    json out = json::array();
    for (auto t : kAllEntityTypes)
        if (types.test(static_cast<std::size_t>(t))) out.push_back(entity_type_name(t));
    return out;
}

std::vector<Point> cluster_points(const DistanceMatrix& m, const Layout& layout, const std::string& space) {
    if (space == "xy") {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < layout.x.size(); ++i) pts.push_back({layout.x[i], layout.y[i]});
        return pts;
    }
    return classical_mds(m.aggregate, std::min<std::size_t>(8, m.ids.size() - 1));
}

json matrix_json(const SquareMatrix& m) { return m.lower_triangle(); }

json term_list(const std::vector<TermFrequency>& list) {
    json out = json::array();
    for (const auto& t : list) out.push_back(json{{"term", t.term}, {"count", t.count}});
    return out;
}

json emotion_values(const std::vector<EmotionValue>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(json{{"emotion", emotion_name(v.emotion)}, {"value", v.value}});
    return out;
}

std::vector<std::pair<std::string, std::string>> parse_ini_pairs(const std::filesystem::path& path) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::read_ini(path.string(), tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw validation_error(std::string("cannot read server config: ") + e.what(), "config");
    }
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [key, node] : tree) out.emplace_back(key, node.get_value<std::string>());
    return out;
}

}  // namespace

void ServerConfig::validate() const {
    if (port < 0 || port > 65535) throw validation_error("port must be in [0, 65535]", "port");
    if (silhouette_low < 2 || silhouette_high < silhouette_low)
        throw validation_error("silhouette bounds must satisfy 2 <= low <= high", "silhouette_low");
    if (default_k < 1) throw validation_error("default_k must be at least 1", "default_k");
    if (!(site_edge_threshold >= 0.0 && site_edge_threshold <= 1.0))
        throw validation_error("site_edge_threshold must be in [0, 1]", "site_edge_threshold");
    if (top_keywords < 1) throw validation_error("top_keywords must be at least 1", "top_keywords");
}

ServerConfig ServerConfig::load(const std::filesystem::path& path) {
    ServerConfig c;
    for (const auto& [key, value] : parse_ini_pairs(path)) {
        try {
            if (key == "store") {
                std::filesystem::path p(value);
                c.store = p.is_absolute() ? p : path.parent_path() / p;
            } else if (key == "host") {
                c.host = value;
            } else if (key == "port") {
                c.port = std::stoi(value);
            } else if (key == "default_seed") {
                c.default_seed = std::stoull(value);
            } else if (key == "default_k") {
                c.default_k = std::stoul(value);
            } else if (key == "silhouette_low") {
                c.silhouette_low = std::stoul(value);
            } else if (key == "silhouette_high") {
                c.silhouette_high = std::stoul(value);
            } else if (key == "site_edge_threshold") {
                c.site_edge_threshold = std::stod(value);
            } else if (key == "top_keywords") {
                c.top_keywords = std::stoul(value);
            } else if (key == "cors_allow") {
                std::vector<std::string> parts;
                boost::split(parts, value, boost::is_any_of(","));
                for (auto& p : parts) {
                    boost::trim(p);
                    if (!p.empty()) c.cors_allow.push_back(p);
                }
            } else {
                throw validation_error("unknown server config key '" + key + "'", key);
            }
        } catch (const std::logic_error&) {
            throw validation_error("invalid value for '" + key + "'", key);
        }
    }
    c.validate();
    return c;
}

json error_body(ErrorCode code, const std::string& message, const std::string& field) {
    json err{{"code", to_string(code)}, {"message", message}};
    if (!field.empty()) err["field"] = field;
    return envelope(json{{"error", std::move(err)}});
}

int http_status(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::validation_error: return 400;
        case ErrorCode::not_found: return 404;
        case ErrorCode::internal: return 500;
    }
    return 500;
}

ApiService::ApiService(std::shared_ptr<const CorpusStore> store, ServerConfig config)
    : store_(std::move(store)), config_(std::move(config)) {
    config_.validate();
}

ApiResponse ApiService::handle(const std::string& method, const std::string& path, const std::string& body,
                               const std::multimap<std::string, std::string>& query) const {
    ApiResponse response;
    json out;
    try {
        auto parse_body = [&] {
            try {
                return json::parse(body);
            } catch (const json::parse_error&) {
                throw validation_error("request body is not valid JSON", "body");
            }
        };
        static const std::string kArticlePrefix = "/api/article/";
        if (method == "GET" && path == "/api/health") {
            out = health();
        } else if (method == "GET" && path == "/api/sites") {
            out = sites();
        } else if (method == "GET" && path.rfind(kArticlePrefix, 0) == 0 && path.size() > kArticlePrefix.size()) {
            bool annotate = false;
            if (const auto it = query.find("annotate"); it != query.end()) {
                if (it->second != "true" && it->second != "false")
                    throw validation_error("annotate must be true or false", "annotate");
                annotate = it->second == "true";
            }
            out = article(path.substr(kArticlePrefix.size()), annotate);
        } else if (method == "POST" && path == "/api/search") {
            out = search(parse_body());
        } else if (method == "POST" && path == "/api/layout") {
            out = layout(parse_body());
        } else if (method == "POST" && path == "/api/silhouette") {
            out = silhouette(parse_body());
        } else if (method == "POST" && path == "/api/emotion-clusters") {
            out = emotion_clusters(parse_body());
        } else if (method == "POST" && path == "/api/entity-matrix") {
            out = entity_matrix(parse_body());
        } else if (method == "POST" && path == "/api/site-overview") {
            out = site_overview(parse_body());
        } else if (method == "POST" && path == "/api/cluster-labels") {
            out = cluster_labels(parse_body());
        } else {
            throw not_found("no route for " + method + " " + path, "path");
        }
    } catch (const Error& e) {
        response.status = http_status(e.code());
        out = error_body(e.code(), e.what(), e.field());
    } catch (const json::exception& e) {
        response.status = 400;
        out = error_body(ErrorCode::validation_error, std::string("malformed request: ") + e.what());
    } catch (const std::exception&) {
        response.status = 500;
        out = error_body(ErrorCode::internal, "internal error");
    }
    response.body = out.dump();
    response.etag = "\"" + sha256_hex(response.body).substr(0, 32) + "\"";
    return response;
}

json ApiService::health() const {
    const auto& m = store_->manifest();
    return envelope(json{{"status", "ok"}, {"corpus_name", m.corpus_name}, {"article_count", m.article_count}});
}

json ApiService::sites() const { return envelope(json{{"sites", store_->list_sites()}}); }

json ApiService::search(const json& req) const {
    require_object(req);
    QuerySpec q;
    q.keywords = get_string_list(required_field(req, "keywords"), "keywords");
    if (q.keywords.empty()) throw validation_error("at least one keyword is required", "keywords");
    if (query_terms(q.keywords, store_->stopwords()).empty())
        throw validation_error("keywords contain no searchable terms", "keywords");
    if (const auto* f = optional_field(req, "date_from")) q.date_from = get_date(*f, "date_from");
    if (const auto* f = optional_field(req, "date_to")) q.date_to = get_date(*f, "date_to");
    if (const auto* f = optional_field(req, "sites_include"))
        for (auto& s : get_string_list(*f, "sites_include")) q.sites_include.insert(std::move(s));
    if (const auto* f = optional_field(req, "sites_exclude"))
        for (auto& s : get_string_list(*f, "sites_exclude")) q.sites_exclude.insert(std::move(s));
    if (const auto* f = optional_field(req, "limit")) {
        q.limit = get_unsigned(*f, "limit");
        if (q.limit < 1) throw validation_error("limit must be at least 1", "limit");
    }
    if (const auto* f = optional_field(req, "balanced")) q.balanced = get_bool(*f, "balanced");
    const auto result = newsscope::search(*store_, q);

    json results = json::array();
    for (const auto& r : result.results) {
        const auto& a = store_->get_article(r.id);
        results.push_back(json{{"id", r.id},
                               {"score", r.score},
                               {"site", a.site},
                               {"title", a.title},
                               {"published_at", a.published_at}});
    }
    json histogram = json::array();
    for (const auto& b : result.histogram) histogram.push_back(json{{"date", b.day}, {"count", b.count}});
    return envelope(json{{"results", std::move(results)},
                         {"histogram", std::move(histogram)},
                         {"R", result.window_days},
                         {"date_from", result.date_from},
                         {"date_to", result.date_to},
                         {"balanced", q.balanced}});
}

json ApiService::layout(const json& req) const {
    require_object(req);
    const auto ids = article_ids(*store_, req, 2);
    const auto weights = get_weights(req);
    const auto window = get_window(*store_, req, ids);
    const auto space = get_space(req);
    const auto seed = get_seed(req, config_.default_seed);
    std::size_t k = std::min(config_.default_k, ids.size());
    if (const auto* f = optional_field(req, "k")) {
        k = get_unsigned(*f, "k");
        if (k < 1 || k > ids.size()) throw validation_error("k must be between 1 and the article count", "k");
    }
    bool components = false;
    if (const auto* f = optional_field(req, "include_components")) components = get_bool(*f, "include_components");

    const auto matrix = aggregate_matrix(*store_, ids, window, weights);
    const auto lay = mds_layout(matrix);
    const auto model = kmeans(cluster_points(matrix, lay, space), k, seed);

    json coords = json::array();
    for (std::size_t i = 0; i < ids.size(); ++i) coords.push_back(json{{"id", ids[i]}, {"x", lay.x[i]}, {"y", lay.y[i]}});
    json out{{"ids", ids},
             {"coords", std::move(coords)},
             {"stress", lay.stress},
             {"scale", lay.scale},
             {"assignments", model.assignments},
             {"k", k},
             {"seed", seed},
             {"cluster_space", space},
             {"R", window},
             {"weights", json{{"keyword", weights.keyword}, {"entity", weights.entity}, {"temporal", weights.temporal}}}};
    if (components)
        out["component_matrices"] = json{{"layout", "lower_triangle_row_major"},
                                         {"keyword", matrix_json(matrix.keyword)},
                                         {"entity", matrix_json(matrix.entity)},
                                         {"temporal", matrix_json(matrix.temporal)},
                                         {"aggregate", matrix_json(matrix.aggregate)}};
    return envelope(std::move(out));
}

json ApiService::silhouette(const json& req) const {
    require_object(req);
    const auto ids = article_ids(*store_, req, 3);
    const auto weights = get_weights(req);
    const auto window = get_window(*store_, req, ids);
    const auto space = get_space(req);
    const auto seed = get_seed(req, config_.default_seed);
    const auto matrix = aggregate_matrix(*store_, ids, window, weights);
    const auto lay = mds_layout(matrix);
    const auto table =
        silhouette_sweep(cluster_points(matrix, lay, space), seed, config_.silhouette_low, config_.silhouette_high);
    json scores = json::array();
    for (const auto& [k, s] : table) scores.push_back(json{{"k", k}, {"score", s}});
    return envelope(json{{"scores", std::move(scores)},
                         {"best_k", best_k(table)},
                         {"seed", seed},
                         {"cluster_space", space}});
}

json ApiService::emotion_clusters(const json& req) const {
    require_object(req);
    const auto ids = article_ids(*store_, req, 1);
    const auto seed = get_seed(req, config_.default_seed);
    std::size_t k = std::min(config_.default_k, ids.size());
    if (const auto* f = optional_field(req, "k")) {
        k = get_unsigned(*f, "k");
        if (k < 1) throw validation_error("k must be at least 1", "k");
        if (k > ids.size()) throw validation_error("k exceeds the number of articles", "k");
    }
    const auto summary = newsscope::emotion_clusters(*store_, ids, k, seed);
    json clusters = json::array();
    for (const auto& c : summary.clusters) {
        json members = json::array();
        for (const auto& m : c.members)
            members.push_back(json{{"id", m.id},
                                   {"site", m.site},
                                   {"published_at", m.published_at},
                                   {"emotion", emotion_to_json(m.emotion)}});
        json dominant = json::array();
        for (std::size_t d = 0; d < c.dominant.size(); ++d)
            dominant.push_back(json{{"emotion", emotion_name(c.dominant[d].emotion)},
                                    {"value", c.dominant[d].value},
                                    {"words", term_list(c.contributing_words[d])}});
        clusters.push_back(json{{"index", c.index},
                                {"members", std::move(members)},
                                {"mean", emotion_to_json(c.mean)},
                                {"dominant", std::move(dominant)}});
    }
    return envelope(json{{"k", summary.k}, {"seed", summary.seed}, {"clusters", std::move(clusters)}});
}

json ApiService::entity_matrix(const json& req) const {
    require_object(req);
    const auto ids = article_ids(*store_, req, 2);
    const auto types = get_types(req);
    const auto view = newsscope::entity_matrix(*store_, ids, types);
    json matrix = json::array();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < ids.size(); ++j) row.push_back(view.similarity(i, j));
        matrix.push_back(std::move(row));
    }
    json cloud = json::array();
    for (const auto& e : view.word_cloud)
        cloud.push_back(json{{"entity", e.entity}, {"type", entity_type_name(e.type)}, {"frequency", e.frequency}});
    json shared = json::array();
    for (const auto& s : view.shared) {
        json ents = json::array();
        for (const auto& [type, e] : s.entities) ents.push_back(json{{"type", entity_type_name(type)}, {"entity", e}});
        shared.push_back(json{{"i", s.i}, {"j", s.j}, {"entities", std::move(ents)}});
    }
    return envelope(json{{"ids", ids},
                         {"types", types_json(types)},
                         {"matrix", std::move(matrix)},
                         {"word_cloud", std::move(cloud)},
                         {"shared", std::move(shared)}});
}

json ApiService::site_overview(const json& req) const {
    require_object(req);
    const auto ids = article_ids(*store_, req, 1);
    SiteOverviewOptions options{config_.site_edge_threshold, config_.top_keywords};
    if (const auto* f = optional_field(req, "threshold")) {
        options.edge_threshold = get_number(*f, "threshold");
        if (!(options.edge_threshold >= 0.0 && options.edge_threshold <= 1.0))
            throw validation_error("threshold must be in [0, 1]", "threshold");
    }
    const auto ov = newsscope::site_overview(*store_, ids, options);
    json nodes = json::array();
    for (const auto& n : ov.nodes) {
        json entities = json::object();
        for (auto t : kAllEntityTypes)
            entities[std::string(entity_type_name(t))] = term_list(n.top_entities[static_cast<std::size_t>(t)]);
        nodes.push_back(json{{"site", n.site},
                             {"article_count", n.article_count},
                             {"top_emotions", emotion_values(n.top_emotions)},
                             {"top_keywords", term_list(n.top_keywords)},
                             {"top_entities", std::move(entities)}});
    }
    json edges = json::array();
    for (const auto& e : ov.edges)
        edges.push_back(json{{"site_a", e.site_a},
                             {"site_b", e.site_b},
                             {"similarity", e.similarity},
                             {"keyword_similarity", e.keyword_similarity},
                             {"entity_similarity", e.entity_similarity}});
    return envelope(json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}, {"threshold", options.edge_threshold}});
}

json ApiService::cluster_labels(const json& req) const {
    require_object(req);
    const auto ids = article_ids(*store_, req, 1);
    const auto& raw = required_field(req, "assignments");
    if (!raw.is_array()) throw validation_error("'assignments' must be an array", "assignments");
    std::vector<std::size_t> assignments;
    for (const auto& a : raw) assignments.push_back(get_unsigned(a, "assignments"));
    std::size_t top_n = config_.top_keywords;
    if (const auto* f = optional_field(req, "top_n")) {
        top_n = get_unsigned(*f, "top_n");
        if (top_n < 1) throw validation_error("top_n must be at least 1", "top_n");
    }
    const auto map = cluster_label_heatmap(*store_, ids, assignments, top_n);
    json clusters = json::array();
    for (std::size_t c = 0; c < map.cluster_sizes.size(); ++c)
        clusters.push_back(json{{"index", c}, {"size", map.cluster_sizes[c]}});
    return envelope(json{{"keywords", map.keywords}, {"clusters", std::move(clusters)}, {"cells", map.cells}, {"top_n", top_n}});
}

json ApiService::article(const std::string& id, bool annotate) const {
    const auto& a = store_->get_article(id);
    json out{{"article", a}};
    if (annotate) {
        const auto& f = store_->features_of(id);
        json spans = json::array();
        for (const auto& s : article_annotations(*store_, id))
            spans.push_back(json{{"start", s.begin}, {"end", s.end}, {"kind", highlight_kind_name(s.kind)}, {"term", s.term}});
        json keywords = json::array();
        for (const auto& k : f.keywords) keywords.push_back(json{{"term", k.term}, {"score", k.score}});
        json entities = json::object();
        for (auto t : kAllEntityTypes)
            entities[std::string(entity_type_name(t))] = f.entities[static_cast<std::size_t>(t)];
        out["spans"] = std::move(spans);
        out["keywords"] = std::move(keywords);
        out["entities"] = std::move(entities);
        out["emotion"] = emotion_to_json(f.emotion);
        out["offsets"] = "utf8_bytes";
    }
    return envelope(std::move(out));
}

}  // namespace newsscope
