#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace newsscope {

using Point = std::vector<double>;

struct KMeansOptions {
    std::size_t max_iterations = 300;
    /// Independent k-means++ starts derived from the seed; the lowest-SSE run wins.
    std::size_t restarts = 10;
};

struct ClusterModel {
    std::size_t k = 0;
    /// Cluster index per input point, canonicalized so labels appear in first-occurrence order.
    std::vector<std::size_t> assignments;
    std::vector<Point> centroids;
    std::uint64_t seed = 0;
    std::size_t iterations_run = 0;
    bool converged = false;
    /// Within-cluster sum of squared distances of the returned partition.
    double inertia = 0.0;
    /// SSE after every assignment step of the winning run; non-increasing.
    std::vector<double> objective_trace;

    std::vector<std::vector<std::size_t>> members() const;
};

/// Lloyd's algorithm with k-means++ seeding. Deterministic for fixed (points, k, seed, options).
/// Empty clusters are repaired by moving in the point farthest from its centroid.
ClusterModel kmeans(std::span<const Point> points, std::size_t k, std::uint64_t seed,
                    const KMeansOptions& options = {});

double squared_distance(const Point& a, const Point& b);

/// Within-cluster sum of squares for an arbitrary labelling.
double within_cluster_sse(std::span<const Point> points, std::span<const std::size_t> assignments,
                          std::size_t k);

/// Mean silhouette over all points; singleton clusters score 0, as does a = b = 0.
double silhouette(std::span<const Point> points, std::span<const std::size_t> assignments, std::size_t k);
double silhouette(std::span<const Point> points, const ClusterModel& model);

using SilhouetteTable = std::map<std::size_t, double>;

/// kmeans + silhouette for every k in [low, min(high, n - 1)], all with the same seed.
SilhouetteTable silhouette_sweep(std::span<const Point> points, std::uint64_t seed,
                                 std::size_t low = 2, std::size_t high = 10,
                                 const KMeansOptions& options = {});

/// Largest score, smallest k on ties.
std::size_t best_k(const SilhouetteTable& table);

}  // namespace newsscope
