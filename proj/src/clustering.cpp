#include "newsscope/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "newsscope/error.hpp"

namespace newsscope {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Portable uniform double in [0, 1); std::uniform_real_distribution is implementation-defined.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t nearest(const Point& p, const std::vector<Point>& centroids) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centroids.size(); ++c) {
        const double d = squared_distance(p, centroids[c]);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

std::vector<Point> plus_plus_init(std::span<const Point> points, std::size_t k, std::mt19937_64& rng) {
    const auto n = points.size();
    std::vector<Point> centroids;
    std::vector<bool> chosen(n, false);
    auto first = std::min(static_cast<std::size_t>(unit(rng) * static_cast<double>(n)), n - 1);
    centroids.push_back(points[first]);
    chosen[first] = true;
    std::vector<double> d2(n);
    for (std::size_t i = 0; i < n; ++i) d2[i] = squared_distance(points[i], centroids[0]);
    while (centroids.size() < k) {
        double total = 0.0;
        for (double d : d2) total += d;
        std::size_t pick = n;
        if (total > 0.0) {
            const double target = unit(rng) * total;
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (d2[i] <= 0.0) continue;
                acc += d2[i];
                pick = i;
                if (acc > target) break;
            }
        } else {
            for (std::size_t i = 0; i < n && pick == n; ++i)
                if (!chosen[i]) pick = i;
        }
        chosen[pick] = true;
        centroids.push_back(points[pick]);
        for (std::size_t i = 0; i < n; ++i)
            d2[i] = std::min(d2[i], squared_distance(points[i], centroids.back()));
    }
    return centroids;
}

void update_centroids(std::span<const Point> points, const std::vector<std::size_t>& assign,
                      std::vector<Point>& centroids) {
    const auto dim = points[0].size();
    std::vector<std::size_t> counts(centroids.size(), 0);
    for (auto& c : centroids) std::fill(c.begin(), c.end(), 0.0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        ++counts[assign[i]];
        for (std::size_t d = 0; d < dim; ++d) centroids[assign[i]][d] += points[i][d];
    }
    for (std::size_t c = 0; c < centroids.size(); ++c)
        if (counts[c] > 0)
            for (auto& v : centroids[c]) v /= static_cast<double>(counts[c]);
}

// Returns true if any cluster was empty.
bool repair_empty(std::span<const Point> points, std::vector<std::size_t>& assign,
                  std::vector<Point>& centroids) {
    bool repaired = false;
    for (std::size_t c = 0; c < centroids.size(); ++c) {
        std::vector<std::size_t> counts(centroids.size(), 0);
        for (auto a : assign) ++counts[a];
        if (counts[c] > 0) continue;
        std::size_t far = points.size();
        double far_d = -1.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (counts[assign[i]] < 2) continue;
            const double d = squared_distance(points[i], centroids[assign[i]]);
            if (d > far_d) {
                far_d = d;
                far = i;
            }
        }
        assign[far] = c;
        update_centroids(points, assign, centroids);
        repaired = true;
    }
    return repaired;
}

struct Run {
    std::vector<std::size_t> assign;
    std::vector<Point> centroids;
    std::vector<double> trace;
    std::size_t iterations = 0;
    bool converged = false;
};

Run lloyd(std::span<const Point> points, std::size_t k, std::uint64_t seed, std::size_t max_iterations) {
    std::mt19937_64 rng(seed);
    Run run;
    run.centroids = plus_plus_init(points, k, rng);
    run.assign.resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) run.assign[i] = nearest(points[i], run.centroids);
    run.trace.push_back(within_cluster_sse(points, run.assign, k));
    for (std::size_t it = 0; it < max_iterations; ++it) {
        update_centroids(points, run.assign, run.centroids);
        repair_empty(points, run.assign, run.centroids);
        bool changed = false;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto c = nearest(points[i], run.centroids);
            // keep the current label on exact ties so the fixpoint is reachable
            if (c != run.assign[i] &&
                squared_distance(points[i], run.centroids[c]) <
                    squared_distance(points[i], run.centroids[run.assign[i]])) {
                run.assign[i] = c;
                changed = true;
            }
        }
        ++run.iterations;
        run.trace.push_back(within_cluster_sse(points, run.assign, k));
        if (!changed) {
            run.converged = true;
            break;
        }
    }
    update_centroids(points, run.assign, run.centroids);
    if (repair_empty(points, run.assign, run.centroids)) run.trace.push_back(within_cluster_sse(points, run.assign, k));
    return run;
}

}  // namespace

std::vector<std::vector<std::size_t>> ClusterModel::members() const {
    std::vector<std::vector<std::size_t>> out(k);
    for (std::size_t i = 0; i < assignments.size(); ++i) out[assignments[i]].push_back(i);
    return out;
}

double squared_distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double x = a[d] - b[d];
        s += x * x;
    }
    return s;
}

double within_cluster_sse(std::span<const Point> points, std::span<const std::size_t> assignments,
                          std::size_t k) {
    if (points.empty()) return 0.0;
    std::vector<Point> centroids(k, Point(points[0].size(), 0.0));
    std::vector<std::size_t> assign(assignments.begin(), assignments.end());
    update_centroids(points, assign, centroids);
    double sse = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) sse += squared_distance(points[i], centroids[assign[i]]);
    return sse;
}

ClusterModel kmeans(std::span<const Point> points, std::size_t k, std::uint64_t seed,
                    const KMeansOptions& options) {
    if (k < 1) throw validation_error("k must be at least 1", "k");
    if (k > points.size())
        throw validation_error("k (" + std::to_string(k) + ") exceeds the number of points (" +
                                   std::to_string(points.size()) + ")",
                               "k");
    const auto dim = points[0].size();
    for (const auto& p : points) {
        if (p.size() != dim) throw validation_error("points must share one dimensionality", "points");
        for (double v : p)
            if (!std::isfinite(v)) throw validation_error("points must be finite", "points");
    }

    Run best;
    double best_sse = std::numeric_limits<double>::infinity();
    const auto restarts = std::max<std::size_t>(1, options.restarts);
    for (std::size_t r = 0; r < restarts; ++r) {
        auto run = lloyd(points, k, splitmix64(seed + r), options.max_iterations);
        const double sse = run.trace.back();
        if (sse < best_sse) {
            best_sse = sse;
            best = std::move(run);
        }
    }

    // relabel by first occurrence
    std::vector<std::size_t> relabel(k, k);
    std::size_t next = 0;
    for (auto a : best.assign)
        if (relabel[a] == k) relabel[a] = next++;
    ClusterModel model;
    model.k = k;
    model.seed = seed;
    model.iterations_run = best.iterations;
    model.converged = best.converged;
    model.inertia = best_sse;
    model.objective_trace = std::move(best.trace);
    model.centroids.resize(k);
    for (std::size_t c = 0; c < k; ++c) model.centroids[relabel[c]] = std::move(best.centroids[c]);
    model.assignments.reserve(points.size());
    for (auto a : best.assign) model.assignments.push_back(relabel[a]);
    return model;
}

double silhouette(std::span<const Point> points, std::span<const std::size_t> assignments, std::size_t k) {
    if (k < 2) throw validation_error("silhouette needs k >= 2", "k");
    const auto n = points.size();
    if (assignments.size() != n) throw validation_error("assignment count must match point count", "assignments");
    if (n == 0) return 0.0;
    std::vector<std::size_t> sizes(k, 0);
    for (auto a : assignments) {
        if (a >= k) throw validation_error("assignment out of range", "assignments");
        ++sizes[a];
    }
    double total = 0.0;
    std::vector<double> sums(k);
    for (std::size_t i = 0; i < n; ++i) {
        const auto own = assignments[i];
        if (sizes[own] <= 1) continue;  // singleton: s = 0
        std::fill(sums.begin(), sums.end(), 0.0);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) sums[assignments[j]] += std::sqrt(squared_distance(points[i], points[j]));
        const double a = sums[own] / static_cast<double>(sizes[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < k; ++c)
            if (c != own && sizes[c] > 0) b = std::min(b, sums[c] / static_cast<double>(sizes[c]));
        if (!std::isfinite(b)) continue;
        const double denom = std::max(a, b);
        if (denom > 0.0) total += (b - a) / denom;
    }
    return total / static_cast<double>(n);
}

double silhouette(std::span<const Point> points, const ClusterModel& model) {
    return silhouette(points, model.assignments, model.k);
}

SilhouetteTable silhouette_sweep(std::span<const Point> points, std::uint64_t seed, std::size_t low,
                                 std::size_t high, const KMeansOptions& options) {
    if (points.size() < 3) throw validation_error("silhouette sweep needs at least 3 points", "article_ids");
    if (low < 2 || high < low) throw validation_error("silhouette bounds must satisfy 2 <= low <= high", "k");
    SilhouetteTable table;
    const auto top = std::min(high, points.size() - 1);
    for (std::size_t k = low; k <= top; ++k) table[k] = silhouette(points, kmeans(points, k, seed, options));
    return table;
}

std::size_t best_k(const SilhouetteTable& table) {
    std::size_t k = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [kk, s] : table)
        if (s > best) {
            best = s;
            k = kk;
        }
    return k;
}

}  // namespace newsscope
