#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "newsscope/date.hpp"
#include "newsscope/features.hpp"

namespace newsscope {

struct Article {
    std::string id;
    std::string title;
    std::string site;
    std::string author;
    Date published_at;
    std::string url;
    std::string body;

    bool operator==(const Article&) const = default;
};

struct SiteCount {
    std::string site;
    std::size_t count = 0;

    bool operator==(const SiteCount&) const = default;
};

struct StoreManifest {
    std::string corpus_name;
    std::size_t article_count = 0;
    std::vector<SiteCount> sites;
    std::optional<Date> date_min;
    std::optional<Date> date_max;
    std::string ingest_config_digest;
    std::size_t keyword_count = 20;
};

/// CSV header names for each article field. Defaults follow the All the News layout.
struct ColumnMap {
    std::string id = "id";
    std::string title = "title";
    std::string site = "publication";
    std::string author = "author";
    std::string date = "date";
    std::string body = "content";
    std::string url = "url";
};

/// Fully loaded ingest inputs.
struct IngestOptions {
    std::string corpus_name = "corpus";
    ColumnMap columns;
    ExtractionResources resources;
    /// Extra bytes folded into the manifest digest (e.g. raw sidecar contents).
    std::string extra_digest_input;
};

/// INI-style key/value file naming the ingest inputs. Relative paths resolve
/// against the config file's directory.
///
///     corpus_name = election-2016
///     stopwords = stopwords_en.txt
///     lexicon = lexicon.tsv
///     gazetteer_persons = persons.txt
///     gazetteer_locations = locations.txt
///     gazetteer_organizations = organizations.txt
///     entity_sidecar = entities.jsonl      ; optional
///     keyword_count = 20
///     [columns]
///     date = published
struct IngestConfig {
    std::string corpus_name = "corpus";
    std::filesystem::path stopwords;
    std::filesystem::path lexicon;
    std::filesystem::path gazetteer_persons;
    std::filesystem::path gazetteer_locations;
    std::filesystem::path gazetteer_organizations;
    std::filesystem::path entity_sidecar;
    std::size_t keyword_count = 20;
    ColumnMap columns;

    static IngestConfig load(const std::filesystem::path& path);
    IngestOptions load_options() const;
};

struct IngestReport {
    std::size_t total_rows = 0;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::map<std::string, std::size_t> rejections;  // reason -> count
};

class CorpusStore;

struct IngestResult;

/// Immutable article store with derived features. Safe for concurrent readers.
class CorpusStore {
public:
    CorpusStore() = default;

    /// Parses, validates and featurizes a CSV corpus in memory.
    static IngestResult ingest(std::istream& csv, const IngestOptions& options);

    /// Writes the store directory (created if missing, files overwritten).
    void save(const std::filesystem::path& dir) const;
    static CorpusStore open(const std::filesystem::path& dir);

    const StoreManifest& manifest() const { return manifest_; }
    /// SHA-256 of the serialized manifest.
    std::string manifest_digest() const;

    std::size_t size() const { return articles_.size(); }
    const std::vector<Article>& articles() const { return articles_; }
    const std::vector<FeatureSet>& features() const { return features_; }

    /// Throws not_found for unknown ids.
    const Article& get_article(std::string_view id) const;
    const FeatureSet& features_of(std::string_view id) const;
    std::size_t index_of(std::string_view id) const;
    bool contains(std::string_view id) const;

    std::vector<SiteCount> list_sites() const { return manifest_.sites; }

    const StopwordSet& stopwords() const { return stopwords_; }
    const EmotionLexicon& lexicon() const { return lexicon_; }
    const EntityVocabulary& entity_vocabulary() const { return vocabulary_; }

private:
    void index();

    StoreManifest manifest_;
    std::vector<Article> articles_;
    std::vector<FeatureSet> features_;
    std::unordered_map<std::string, std::size_t> by_id_;
    StopwordSet stopwords_;
    EmotionLexicon lexicon_;
    EntityVocabulary vocabulary_;
};

struct IngestResult {
    CorpusStore store;
    IngestReport report;
};

/// Case- and whitespace-insensitive key used to merge site spellings.
std::string site_key(std::string_view site);

}  // namespace newsscope
