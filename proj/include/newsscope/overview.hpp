#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "newsscope/clustering.hpp"
#include "newsscope/corpus_store.hpp"
#include "newsscope/retrieval.hpp"
#include "newsscope/similarity.hpp"

namespace newsscope {

/// One bucket per day in [from, to], zero-filled. Dates outside the window are ignored.
std::vector<DayCount> temporal_histogram(const std::vector<Date>& dates, Date from, Date to);
std::vector<DayCount> temporal_histogram(const CorpusStore& store, const ResultSet& result);

struct EmotionValue {
    Emotion emotion;
    double value = 0.0;
};

struct TermFrequency {
    std::string term;
    std::size_t count = 0;
};

struct SiteNode {
    std::string site;
    std::size_t article_count = 0;
    std::vector<EmotionValue> top_emotions;  // four, descending
    std::vector<TermFrequency> top_keywords;
    std::array<std::vector<TermFrequency>, kEntityTypeCount> top_entities;
};

struct SiteEdge {
    std::string site_a;
    std::string site_b;
    double keyword_similarity = 0.0;
    double entity_similarity = 0.0;
    double similarity = 0.0;
};

struct SiteOverview {
    std::vector<SiteNode> nodes;  // sorted by site
    std::vector<SiteEdge> edges;  // site_a < site_b
};

struct SiteOverviewOptions {
    double edge_threshold = 0.2;
    std::size_t top_n = 10;
};

/// Site-pair similarity is the mean of keyword and entity Jaccard similarity over site-level unions.
SiteOverview site_overview(const CorpusStore& store, const std::vector<std::string>& ids,
                           const SiteOverviewOptions& options = {});

struct ClusterLabelHeatmap {
    std::vector<std::string> keywords;       // rows
    std::vector<std::size_t> cluster_sizes;  // columns, by cluster index
    std::vector<std::vector<double>> cells;  // [row][cluster], fraction of the cluster's articles
};

/// `assignments` is parallel to `ids`; the cluster count is max(assignment) + 1.
ClusterLabelHeatmap cluster_label_heatmap(const CorpusStore& store, const std::vector<std::string>& ids,
                                          const std::vector<std::size_t>& assignments, std::size_t top_n);

struct EmotionMember {
    std::string id;
    std::string site;
    Date published_at;
    EmotionVector emotion{};
};

struct EmotionCluster {
    std::size_t index = 0;
    std::vector<EmotionMember> members;  // by (published_at, id)
    EmotionVector mean{};
    std::vector<EmotionValue> dominant;  // four, descending
    /// Parallel to `dominant`: up to five most frequent lexicon words per emotion.
    std::vector<std::vector<TermFrequency>> contributing_words;
};

struct EmotionClusterSummary {
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::vector<EmotionCluster> clusters;
};

EmotionClusterSummary emotion_clusters(const CorpusStore& store, const std::vector<std::string>& ids,
                                       std::size_t k, std::uint64_t seed,
                                       const KMeansOptions& options = {});

struct CloudEntry {
    EntityType type;
    std::string entity;
    std::size_t frequency = 0;
};

struct SharedEntities {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<std::pair<EntityType, std::string>> entities;
};

struct EntityMatrixView {
    std::vector<std::string> ids;
    SquareMatrix similarity;               // 1 - d_e over the selected types
    std::vector<CloudEntry> word_cloud;    // frequency desc, then type, then entity
    std::vector<SharedEntities> shared;    // pairs i < j with a non-empty intersection
};

EntityMatrixView entity_matrix(const CorpusStore& store, const std::vector<std::string>& ids,
                               EntityTypeSet types = kAllTypes);

enum class HighlightKind { keyword, person, location, organization };

std::string_view highlight_kind_name(HighlightKind k) noexcept;

struct HighlightSpan {
    std::size_t begin = 0;  // UTF-8 byte offsets into the body
    std::size_t end = 0;
    HighlightKind kind = HighlightKind::keyword;
    std::string term;       // keyword term or canonical entity
};

/// Keyword and entity occurrences, sorted and non-overlapping; entities win over keywords.
std::vector<HighlightSpan> article_annotations(const CorpusStore& store, std::string_view id);

}  // namespace newsscope
