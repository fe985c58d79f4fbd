#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "newsscope/emotion.hpp"
#include "newsscope/entities.hpp"
#include "newsscope/text.hpp"

namespace newsscope {

using TermCounts = std::map<std::string, std::size_t, std::less<>>;

struct Keyword {
    std::string term;
    double score = 0.0;

    bool operator==(const Keyword&) const = default;
};

/// Document frequencies over a corpus, frozen after the first ingest pass.
class CorpusStats {
public:
    CorpusStats() = default;
    CorpusStats(std::size_t doc_count, TermCounts df) : doc_count_(doc_count), df_(std::move(df)) {}

    void add_document(const TermCounts& counts);

    std::size_t doc_count() const { return doc_count_; }
    std::size_t df(std::string_view term) const;
    /// ln(N / df), or 0 when the term is unseen.
    double idf(std::string_view term) const;
    const TermCounts& document_frequencies() const { return df_; }

private:
    std::size_t doc_count_ = 0;
    TermCounts df_;
};

TermCounts count_terms(std::span<const std::string> terms);

/// Top-K terms by tf * idf, ties broken lexicographically; scores are non-increasing.
std::vector<Keyword> extract_keywords(const TermCounts& counts, const CorpusStats& stats,
                                      std::size_t k);

/// Everything derived from one article's text.
struct FeatureSet {
    std::string article_id;
    std::vector<Keyword> keywords;
    std::vector<EntityMention> mentions;
    EntitySets entities;
    EmotionVector emotion{};
    bool emotion_degenerate = false;
    /// N: token count after stopword removal.
    std::size_t token_count = 0;
    TermCounts term_counts;

    std::set<std::string> keyword_terms() const;
};

/// Sorted canonical entity strings per type across a corpus.
struct EntityVocabulary {
    std::array<std::vector<std::string>, kEntityTypeCount> entries;

    static EntityVocabulary build(std::span<const FeatureSet> features);
    /// Binary presence vector of `features` over this vocabulary for one type.
    std::vector<std::uint8_t> presence(const FeatureSet& features, EntityType type) const;
};

struct ExtractionResources {
    StopwordSet stopwords;
    EmotionLexicon lexicon;
    Gazetteer gazetteer;
    EntityAnnotations annotations;
    std::size_t keyword_count = 20;
};

/// First pass: tokens, entities and emotions. Keywords are left empty until
/// `assign_keywords` runs with corpus-level statistics.
FeatureSet analyze_article(std::string_view article_id, std::string_view body,
                           const ExtractionResources& resources);

void assign_keywords(FeatureSet& features, const CorpusStats& stats, std::size_t k);

}  // namespace newsscope
