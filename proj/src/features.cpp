#include "newsscope/features.hpp"

#include <algorithm>
#include <cmath>

namespace newsscope {

void CorpusStats::add_document(const TermCounts& counts) {
    ++doc_count_;
    for (const auto& [term, _] : counts) ++df_[term];
}

std::size_t CorpusStats::df(std::string_view term) const {
    const auto it = df_.find(term);
    return it == df_.end() ? 0 : it->second;
}

double CorpusStats::idf(std::string_view term) const {
    const auto d = df(term);
    if (d == 0 || doc_count_ == 0) return 0.0;
    return std::log(static_cast<double>(doc_count_) / static_cast<double>(d));
}

TermCounts count_terms(std::span<const std::string> terms) {
    TermCounts counts;
    for (const auto& t : terms) ++counts[t];
    return counts;
}

std::vector<Keyword> extract_keywords(const TermCounts& counts, const CorpusStats& stats,
                                      std::size_t k) {
    std::vector<Keyword> all;
    all.reserve(counts.size());
    for (const auto& [term, tf] : counts)
        all.push_back(Keyword{term, static_cast<double>(tf) * stats.idf(term)});
    // counts is ordered by term, so a stable sort on score keeps lexicographic tie order
    std::stable_sort(all.begin(), all.end(),
                     [](const Keyword& a, const Keyword& b) { return a.score > b.score; });
    if (all.size() > k) all.resize(k);
    return all;
}

std::set<std::string> FeatureSet::keyword_terms() const {
    std::set<std::string> out;
    for (const auto& kw : keywords) out.insert(kw.term);
    return out;
}

EntityVocabulary EntityVocabulary::build(std::span<const FeatureSet> features) {
    std::array<std::set<std::string>, kEntityTypeCount> sets;
    for (const auto& f : features)
        for (std::size_t t = 0; t < kEntityTypeCount; ++t)
            sets[t].insert(f.entities[t].begin(), f.entities[t].end());
    EntityVocabulary vocab;
    for (std::size_t t = 0; t < kEntityTypeCount; ++t)
        vocab.entries[t].assign(sets[t].begin(), sets[t].end());
    return vocab;
}

std::vector<std::uint8_t> EntityVocabulary::presence(const FeatureSet& features,
                                                     EntityType type) const {
    const auto t = static_cast<std::size_t>(type);
    const auto& vocab = entries[t];
    std::vector<std::uint8_t> out(vocab.size(), 0);
    for (const auto& e : features.entities[t]) {
        const auto it = std::lower_bound(vocab.begin(), vocab.end(), e);
        if (it != vocab.end() && *it == e) out[static_cast<std::size_t>(it - vocab.begin())] = 1;
    }
    return out;
}

FeatureSet analyze_article(std::string_view article_id, std::string_view body,
                           const ExtractionResources& resources) {
    FeatureSet f;
    f.article_id = std::string(article_id);
    const auto tokens = tokenize(body, resources.stopwords);
    f.token_count = tokens.terms.size();
    f.term_counts = count_terms(tokens.terms);
    const auto score = emotion_vector(tokens.terms, resources.lexicon);
    f.emotion = score.vector;
    f.emotion_degenerate = score.degenerate;
    if (auto annotated = resources.annotations.for_article(article_id, body, resources.stopwords))
        f.mentions = std::move(*annotated);
    else
        f.mentions = resources.gazetteer.match(tokens, resources.stopwords);
    f.entities = entity_sets(f.mentions);
    return f;
}

void assign_keywords(FeatureSet& features, const CorpusStats& stats, std::size_t k) {
    features.keywords = extract_keywords(features.term_counts, stats, k);
}

}  // namespace newsscope
