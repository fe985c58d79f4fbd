#include "newsscope/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "newsscope/error.hpp"

namespace newsscope {

std::vector<double> SquareMatrix::lower_triangle() const {
    std::vector<double> out;
    out.reserve(n_ * (n_ > 0 ? n_ - 1 : 0) / 2);
    for (std::size_t i = 1; i < n_; ++i)
        for (std::size_t j = 0; j < i; ++j) out.push_back((*this)(i, j));
    return out;
}

void DistanceWeights::validate() const {
    const std::array<std::pair<double, const char*>, 3> ws = {
        {{keyword, "weights.keyword"}, {entity, "weights.entity"}, {temporal, "weights.temporal"}}};
    for (const auto& [w, name] : ws)
        if (!std::isfinite(w) || w < 0.0) throw validation_error("weights must be finite and >= 0", name);
    if (keyword == 0.0 && entity == 0.0 && temporal == 0.0)
        throw validation_error("at least one weight must be positive", "weights");
}

double jaccard_distance(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() && b.empty()) return 0.0;
    if (a.empty() || b.empty()) return 1.0;
    std::size_t common = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++common;
            ++ia;
            ++ib;
        }
    }
    const auto unioned = a.size() + b.size() - common;
    return 1.0 - static_cast<double>(common) / static_cast<double>(unioned);
}

double keyword_distance(const FeatureSet& a, const FeatureSet& b) {
    return jaccard_distance(a.keyword_terms(), b.keyword_terms());
}

std::set<std::string> tagged_entities(const FeatureSet& f, EntityTypeSet types) {
    std::set<std::string> out;
    for (auto type : kAllEntityTypes) {
        const auto t = static_cast<std::size_t>(type);
        if (!types.test(t)) continue;
        const std::string prefix = std::string(entity_type_name(type)) + ":";
        for (const auto& e : f.entities[t]) out.insert(prefix + e);
    }
    return out;
}

double entity_distance(const FeatureSet& a, const FeatureSet& b, EntityTypeSet types) {
    if (types.none()) throw validation_error("at least one entity type is required", "types");
    return jaccard_distance(tagged_entities(a, types), tagged_entities(b, types));
}

double temporal_distance(Date a, Date b, std::int32_t window_days) {
    if (window_days < 1) throw validation_error("window length must be at least one day", "R");
    return static_cast<double>(std::abs(a - b)) / static_cast<double>(window_days);
}

double emotion_distance(const EmotionVector& a, const EmotionVector& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < kEmotionCount; ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

DistanceMatrix aggregate_matrix(std::span<const DistanceItem> items, std::int32_t window_days,
                                const DistanceWeights& weights) {
    if (items.size() < 2) throw validation_error("at least two articles are required", "article_ids");
    weights.validate();
    if (window_days < 1) throw validation_error("window length must be at least one day", "R");
    const auto n = items.size();
    DistanceMatrix m;
    m.weights = weights;
    m.aggregate = m.keyword = m.entity = m.temporal = SquareMatrix(n);
    std::vector<std::set<std::string>> keywords(n), entities(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.ids.push_back(items[i].id);
        keywords[i] = items[i].features->keyword_terms();
        entities[i] = tagged_entities(*items[i].features, kAllTypes);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dk = jaccard_distance(keywords[i], keywords[j]);
            const double de = jaccard_distance(entities[i], entities[j]);
            const double dt = temporal_distance(items[i].published_at, items[j].published_at, window_days);
            const double agg = weights.keyword * dk + weights.entity * de + weights.temporal * dt;
            m.keyword(i, j) = m.keyword(j, i) = dk;
            m.entity(i, j) = m.entity(j, i) = de;
            m.temporal(i, j) = m.temporal(j, i) = dt;
            m.aggregate(i, j) = m.aggregate(j, i) = agg;
        }
    }
    return m;
}

DistanceMatrix aggregate_matrix(const CorpusStore& store, const std::vector<std::string>& ids,
                                std::int32_t window_days, const DistanceWeights& weights) {
    std::vector<DistanceItem> items;
    items.reserve(ids.size());
    for (const auto& id : ids) {
        const auto i = store.index_of(id);
        items.push_back(DistanceItem{id, &store.features()[i], store.articles()[i].published_at});
    }
    return aggregate_matrix(items, window_days, weights);
}

std::int32_t date_span(const CorpusStore& store, const std::vector<std::string>& ids) {
    if (ids.empty()) return 1;
    Date lo = store.get_article(ids.front()).published_at, hi = lo;
    for (const auto& id : ids) {
        const auto d = store.get_article(id).published_at;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return hi - lo + 1;
}

}  // namespace newsscope
