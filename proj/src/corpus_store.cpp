#include "newsscope/corpus_store.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "newsscope/csv.hpp"
#include "newsscope/digest.hpp"
#include "newsscope/error.hpp"
#include "newsscope/serialize.hpp"

namespace newsscope {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::string read_file(const fs::path& path, std::string_view field) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open " + path.string(), std::string(field));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string resources_digest(const IngestOptions& options) {
    std::ostringstream ss;
    const auto& r = options.resources;
    ss << "stopwords\n";
    for (const auto& w : r.stopwords.words()) ss << w << '\n';
    ss << "lexicon\n";
    r.lexicon.write(ss);
    for (auto type : kAllEntityTypes) {
        ss << "gazetteer " << entity_type_name(type) << '\n';
        for (const auto& p : r.gazetteer.phrases(type)) ss << p << '\n';
    }
    const auto& c = options.columns;
    ss << "keyword_count " << r.keyword_count << '\n'
       << "columns " << c.id << '|' << c.title << '|' << c.site << '|' << c.author << '|' << c.date
       << '|' << c.body << '|' << c.url << '\n'
       << "extra\n"
       << options.extra_digest_input;
    return sha256_hex(ss.str());
}

struct ColumnIndex {
    std::optional<std::size_t> id, title, site, author, date, body, url;
};

std::optional<std::size_t> find_column(const std::vector<std::string>& header, const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    return std::nullopt;
}

std::size_t require_column(const std::vector<std::string>& header, const std::string& name) {
    const auto idx = find_column(header, name);
    if (!idx) throw validation_error("missing required column '" + name + "'", name);
    return *idx;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::internal, "cannot write " + path.string());
    out << text;
    if (!out) throw Error(ErrorCode::internal, "write failed for " + path.string());
}

}  // namespace

std::string site_key(std::string_view site) {
    std::string out;
    bool space = false;
    for (char ch : trim(site)) {
        if (ch == ' ' || ch == '\t') {
            space = true;
            continue;
        }
        if (space) out.push_back(' ');
        space = false;
        out.push_back(ch);
    }
    return fold_case(out);
}

IngestConfig IngestConfig::load(const fs::path& path) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::read_ini(path.string(), tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw validation_error(std::string("cannot read ingest config: ") + e.what(), "config");
    }
    const auto base = path.parent_path();
    auto resolve = [&](const char* key, bool required) -> fs::path {
        const auto value = tree.get_optional<std::string>(key);
        if (!value || value->empty()) {
            if (required) throw validation_error(std::string("ingest config missing '") + key + "'", key);
            return {};
        }
        fs::path p(*value);
        return p.is_absolute() ? p : base / p;
    };
    IngestConfig config;
    config.corpus_name = tree.get<std::string>("corpus_name", path.stem().string());
    config.stopwords = resolve("stopwords", true);
    config.lexicon = resolve("lexicon", true);
    config.gazetteer_persons = resolve("gazetteer_persons", false);
    config.gazetteer_locations = resolve("gazetteer_locations", false);
    config.gazetteer_organizations = resolve("gazetteer_organizations", false);
    config.entity_sidecar = resolve("entity_sidecar", false);
    try {
        config.keyword_count = tree.get<std::size_t>("keyword_count", 20);
    } catch (const boost::property_tree::ptree_bad_data&) {
        throw validation_error("keyword_count must be a positive integer", "keyword_count");
    }
    if (config.keyword_count == 0)
        throw validation_error("keyword_count must be a positive integer", "keyword_count");
    auto& cols = config.columns;
    cols.id = tree.get<std::string>("columns.id", cols.id);
    cols.title = tree.get<std::string>("columns.title", cols.title);
    cols.site = tree.get<std::string>("columns.publication", cols.site);
    cols.author = tree.get<std::string>("columns.author", cols.author);
    cols.date = tree.get<std::string>("columns.date", cols.date);
    cols.body = tree.get<std::string>("columns.content", cols.body);
    cols.url = tree.get<std::string>("columns.url", cols.url);
    return config;
}

IngestOptions IngestConfig::load_options() const {
    IngestOptions options;
    options.corpus_name = corpus_name;
    options.columns = columns;
    auto& r = options.resources;
    r.keyword_count = keyword_count;
    r.stopwords = StopwordSet::load(stopwords);
    r.lexicon = EmotionLexicon::load(lexicon);
    const std::array<std::pair<EntityType, const fs::path*>, kEntityTypeCount> gazetteers = {{
        {EntityType::person, &gazetteer_persons},
        {EntityType::location, &gazetteer_locations},
        {EntityType::organization, &gazetteer_organizations},
    }};
    for (const auto& [type, path] : gazetteers)
        if (!path->empty()) r.gazetteer.load(type, *path);
    if (!entity_sidecar.empty()) {
        options.extra_digest_input = "sidecar " + sha256_hex(read_file(entity_sidecar, "entity_sidecar"));
        r.annotations = EntityAnnotations::load(entity_sidecar);
    }
    return options;
}

IngestResult CorpusStore::ingest(std::istream& csv, const IngestOptions& options) {
    CsvReader reader(csv);
    auto header = reader.next();
    if (!header) throw validation_error("corpus is empty: header row required", "corpus");
    if (!header->empty() && header->front().rfind("\xEF\xBB\xBF", 0) == 0)
        header->front().erase(0, 3);
    for (auto& h : *header) h = trim(h);

    const auto& cols = options.columns;
    ColumnIndex ix;
    ix.title = require_column(*header, cols.title);
    ix.site = require_column(*header, cols.site);
    ix.date = require_column(*header, cols.date);
    ix.body = require_column(*header, cols.body);
    ix.id = find_column(*header, cols.id);
    ix.author = find_column(*header, cols.author);
    ix.url = find_column(*header, cols.url);

    IngestResult result;
    auto& report = result.report;
    auto& store = result.store;
    std::map<std::string, std::string> site_names;  // key -> first spelling
    std::unordered_map<std::string, std::size_t> seen_ids;

    auto reject = [&](const char* reason) {
        ++report.rejected;
        ++report.rejections[reason];
    };
    auto cell = [](const std::vector<std::string>& row, std::optional<std::size_t> i) {
        return i ? row[*i] : std::string();
    };

    std::size_t row_number = 0;
    while (auto row = reader.next()) {
        if (row->size() == 1 && trim(row->front()).empty()) continue;  // blank line
        ++row_number;
        ++report.total_rows;
        if (row->size() != header->size()) {
            reject("malformed_row");
            continue;
        }
        Article a;
        if (ix.id) {
            a.id = trim(cell(*row, ix.id));
            if (a.id.empty()) {
                reject("missing_id");
                continue;
            }
            if (!seen_ids.emplace(a.id, row_number).second)
                throw validation_error("duplicate article id '" + a.id + "'", "id");
        } else {
            a.id = "a" + std::to_string(row_number);
        }
        const auto date = Date::parse(cell(*row, ix.date));
        if (!date) {
            reject("bad_date");
            continue;
        }
        a.body = cell(*row, ix.body);
        if (trim(a.body).empty()) {
            reject("empty_content");
            continue;
        }
        const auto key = site_key(cell(*row, ix.site));
        if (key.empty()) {
            reject("missing_site");
            continue;
        }
        a.published_at = *date;
        a.title = trim(cell(*row, ix.title));
        a.author = trim(cell(*row, ix.author));
        a.url = trim(cell(*row, ix.url));
        a.site = site_names.emplace(key, trim(cell(*row, ix.site))).first->second;
        store.articles_.push_back(std::move(a));
        ++report.accepted;
    }

    const auto& resources = options.resources;
    store.features_.reserve(store.articles_.size());
    CorpusStats stats;
    for (const auto& a : store.articles_) {
        store.features_.push_back(analyze_article(a.id, a.body, resources));
        stats.add_document(store.features_.back().term_counts);
    }
    for (auto& f : store.features_) assign_keywords(f, stats, resources.keyword_count);

    auto& m = store.manifest_;
    m.corpus_name = options.corpus_name;
    m.article_count = store.articles_.size();
    m.keyword_count = resources.keyword_count;
    std::map<std::string, std::size_t> counts;
    for (const auto& a : store.articles_) {
        ++counts[a.site];
        if (!m.date_min || a.published_at < *m.date_min) m.date_min = a.published_at;
        if (!m.date_max || a.published_at > *m.date_max) m.date_max = a.published_at;
    }
    for (const auto& [site, n] : counts) m.sites.push_back(SiteCount{site, n});
    m.ingest_config_digest = resources_digest(options);

    store.stopwords_ = resources.stopwords;
    store.lexicon_ = resources.lexicon;
    store.index();
    return result;
}

void CorpusStore::index() {
    by_id_.clear();
    for (std::size_t i = 0; i < articles_.size(); ++i) by_id_.emplace(articles_[i].id, i);
    vocabulary_ = EntityVocabulary::build(features_);
}

std::string CorpusStore::manifest_digest() const { return sha256_hex(json(manifest_).dump()); }

void CorpusStore::save(const fs::path& dir) const {
    fs::create_directories(dir);
    write_text(dir / "manifest.json", json(manifest_).dump(2) + "\n");
    std::string articles, features;
    for (const auto& a : articles_) articles += json(a).dump() + "\n";
    for (const auto& f : features_) features += json(f).dump() + "\n";
    write_text(dir / "articles.jsonl", articles);
    write_text(dir / "features.jsonl", features);
    std::string stop;
    for (const auto& w : stopwords_.words()) stop += w + "\n";
    write_text(dir / "stopwords.txt", stop);
    std::ostringstream lex;
    lexicon_.write(lex);
    write_text(dir / "lexicon.tsv", lex.str());
}

CorpusStore CorpusStore::open(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw validation_error("store directory not found: " + dir.string(), "store");
    CorpusStore store;
    try {
        store.manifest_ = json::parse(read_file(dir / "manifest.json", "store")).get<StoreManifest>();
        auto read_lines = [&](const char* name, auto& out) {
            std::istringstream in(read_file(dir / name, "store"));
            std::string line;
            while (std::getline(in, line))
                if (!line.empty())
                    out.push_back(json::parse(line).get<typename std::decay_t<decltype(out)>::value_type>());
        };
        read_lines("articles.jsonl", store.articles_);
        read_lines("features.jsonl", store.features_);
    } catch (const json::exception& e) {
        throw validation_error(std::string("corrupt store: ") + e.what(), "store");
    }
    if (store.articles_.size() != store.features_.size() ||
        store.articles_.size() != store.manifest_.article_count)
        throw validation_error("corrupt store: article/feature/manifest counts disagree", "store");
    for (std::size_t i = 0; i < store.articles_.size(); ++i)
        if (store.articles_[i].id != store.features_[i].article_id)
            throw validation_error("corrupt store: feature rows out of order", "store");
    store.stopwords_ = StopwordSet::load(dir / "stopwords.txt");
    store.lexicon_ = EmotionLexicon::load(dir / "lexicon.tsv");
    store.index();
    return store;
}

const Article& CorpusStore::get_article(std::string_view id) const {
    return articles_[index_of(id)];
}

const FeatureSet& CorpusStore::features_of(std::string_view id) const {
    return features_[index_of(id)];
}

std::size_t CorpusStore::index_of(std::string_view id) const {
    const auto it = by_id_.find(std::string(id));
    if (it == by_id_.end()) throw not_found("unknown article id '" + std::string(id) + "'", "id");
    return it->second;
}

bool CorpusStore::contains(std::string_view id) const {
    return by_id_.find(std::string(id)) != by_id_.end();
}

}  // namespace newsscope
