#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "newsscope/corpus_store.hpp"
#include "newsscope/emotion.hpp"
#include "newsscope/entities.hpp"
#include "newsscope/features.hpp"

namespace newsscope {

/// Dense symmetric n x n matrix, row-major.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

    std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const SquareMatrix&) const = default;

    /// Strictly-lower triangle in row-major order: (1,0), (2,0), (2,1), (3,0), ...
    std::vector<double> lower_triangle() const;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

struct DistanceWeights {
    double keyword = 1.0;
    double entity = 1.0;
    double temporal = 1.0;

    /// Non-negative, finite, at least one positive.
    void validate() const;
};

/// Subset of entity types; bit i corresponds to EntityType(i).
using EntityTypeSet = std::bitset<kEntityTypeCount>;
inline const EntityTypeSet kAllTypes{0b111};

/// Jaccard dissimilarity. Two empty sets are identical (0); one empty set is maximally distant (1).
double jaccard_distance(const std::set<std::string>& a, const std::set<std::string>& b);

double keyword_distance(const FeatureSet& a, const FeatureSet& b);

/// Union of the selected typed sets, each entry tagged "type:entity".
std::set<std::string> tagged_entities(const FeatureSet& f, EntityTypeSet types);

/// Jaccard dissimilarity over the type-tagged union. Throws on an empty type set.
double entity_distance(const FeatureSet& a, const FeatureSet& b, EntityTypeSet types = kAllTypes);

/// |date(a) - date(b)| / R.
double temporal_distance(Date a, Date b, std::int32_t window_days);

double emotion_distance(const EmotionVector& a, const EmotionVector& b);

struct DistanceItem {
    std::string id;
    const FeatureSet* features = nullptr;
    Date published_at;
};

struct DistanceMatrix {
    std::vector<std::string> ids;
    SquareMatrix aggregate;
    SquareMatrix keyword;
    SquareMatrix entity;
    SquareMatrix temporal;
    DistanceWeights weights;
};

/// dist = w_k * d_k + w_e * d_e + w_t * d_t for every pair. Needs at least two items.
DistanceMatrix aggregate_matrix(std::span<const DistanceItem> items, std::int32_t window_days,
                                const DistanceWeights& weights);

/// Same, resolving ids against a store. Unknown ids throw not_found.
DistanceMatrix aggregate_matrix(const CorpusStore& store, const std::vector<std::string>& ids,
                                std::int32_t window_days, const DistanceWeights& weights);

/// Span of publication days covered by `ids`, max - min + 1.
std::int32_t date_span(const CorpusStore& store, const std::vector<std::string>& ids);

}  // namespace newsscope
