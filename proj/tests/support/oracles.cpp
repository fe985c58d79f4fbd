#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace newsscope::testing::oracle {

std::vector<std::string> split_words(const std::string& body) {
    std::istringstream in(body);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::vector<Ranked> search(const std::vector<CsvArticle>& corpus, const std::set<std::string>& stopwords,
                           const std::set<std::string>& terms, const std::string& date_from,
                           const std::string& date_to, const std::set<std::string>& sites_include) {
    // ISO dates compare correctly as strings
    std::vector<const CsvArticle*> pool;
    for (const auto& a : corpus) {
        if (a.date < date_from || a.date > date_to) continue;
        if (!sites_include.empty() && !sites_include.count(a.site)) continue;
        pool.push_back(&a);
    }
    std::vector<std::map<std::string, int>> tf(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (const auto& w : split_words(pool[i]->body))
            if (!stopwords.count(w)) tf[i][w]++;

    std::map<std::string, double> idf;
    for (const auto& t : terms) {
        int df = 0;
        for (const auto& m : tf) df += m.count(t) ? 1 : 0;
        idf[t] = df == 0 ? 0.0 : std::log(double(pool.size()) / double(df));
    }

    std::vector<std::pair<const CsvArticle*, double>> scored;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        double s = 0.0;
        for (const auto& t : terms) {
            auto it = tf[i].find(t);
            if (it != tf[i].end()) s += it->second * idf[t];
        }
        if (s > 0.0) scored.emplace_back(pool[i], s);
    }
    // simple insertion sort: score desc, date asc, id asc
    for (std::size_t i = 1; i < scored.size(); ++i) {
        for (std::size_t j = i; j > 0; --j) {
            const auto& a = scored[j - 1];
            const auto& b = scored[j];
            bool swap = false;
            if (a.second != b.second) swap = b.second > a.second;
            else if (a.first->date != b.first->date) swap = b.first->date < a.first->date;
            else swap = b.first->id < a.first->id;
            if (!swap) break;
            std::swap(scored[j - 1], scored[j]);
        }
    }
    std::vector<Ranked> out;
    for (const auto& [a, s] : scored) out.push_back({a->id, s});
    return out;
}

EmotionCount emotion_count(const std::string& body, const std::set<std::string>& stopwords,
                           const std::map<std::string, std::set<std::string>>& lexicon) {
    static const char* names[8] = {"anger", "anticipation", "disgust", "fear",
                                   "joy",   "sadness",      "surprise", "trust"};
    EmotionCount c;
    for (const auto& w : split_words(body)) {
        if (stopwords.count(w)) continue;
        c.tokens++;
        auto it = lexicon.find(w);
        if (it == lexicon.end()) continue;
        for (int e = 0; e < 8; ++e)
            if (it->second.count(names[e])) c.hits[e]++;
    }
    return c;
}

double jaccard_distance(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() && b.empty()) return 0.0;
    std::size_t inter = 0;
    for (const auto& x : a) inter += b.count(x);
    const std::size_t uni = a.size() + b.size() - inter;
    return 1.0 - double(inter) / double(uni);
}

double sse(const Points& points, const std::vector<std::size_t>& labels, std::size_t k) {
    const std::size_t dim = points.empty() ? 0 : points[0].size();
    double total = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<double> mean(dim, 0.0);
        std::size_t n = 0;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (labels[i] == c) {
                for (std::size_t d = 0; d < dim; ++d) mean[d] += points[i][d];
                ++n;
            }
        if (n == 0) continue;
        for (auto& m : mean) m /= double(n);
        for (std::size_t i = 0; i < points.size(); ++i)
            if (labels[i] == c)
                for (std::size_t d = 0; d < dim; ++d) total += (points[i][d] - mean[d]) * (points[i][d] - mean[d]);
    }
    return total;
}

namespace {

// Restricted growth strings enumerate each set partition exactly once.
void enumerate(const Points& points, std::size_t k, std::vector<std::size_t>& labels, std::size_t pos,
               std::size_t used, Partition& best) {
    const std::size_t n = points.size();
    if (n - pos < k - used) return;
    if (pos == n) {
        if (used != k) return;
        const double s = sse(points, labels, k);
        if (s < best.sse) best = Partition{labels, s};
        return;
    }
    for (std::size_t c = 0; c <= used && c < k; ++c) {
        labels[pos] = c;
        enumerate(points, k, labels, pos + 1, std::max(used, c + 1), best);
    }
}

}  // namespace

Partition best_partition(const Points& points, std::size_t k) {
    Partition best{{}, std::numeric_limits<double>::infinity()};
    std::vector<std::size_t> labels(points.size(), 0);
    enumerate(points, k, labels, 0, 0, best);
    return best;
}

double silhouette(const Points& points, const std::vector<std::size_t>& labels) {
    auto dist = [&](std::size_t i, std::size_t j) {
        double s = 0.0;
        for (std::size_t d = 0; d < points[i].size(); ++d) s += (points[i][d] - points[j][d]) * (points[i][d] - points[j][d]);
        return std::sqrt(s);
    };
    std::set<std::size_t> clusters(labels.begin(), labels.end());
    double total = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::size_t own = 0;
        double own_sum = 0.0;
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i && labels[j] == labels[i]) {
                own++;
                own_sum += dist(i, j);
            }
        if (own == 0) continue;  // singleton scores 0
        const double a = own_sum / double(own);
        double b = std::numeric_limits<double>::infinity();
        for (auto c : clusters) {
            if (c == labels[i]) continue;
            double s = 0.0;
            std::size_t m = 0;
            for (std::size_t j = 0; j < points.size(); ++j)
                if (labels[j] == c) {
                    s += dist(i, j);
                    ++m;
                }
            if (m) b = std::min(b, s / double(m));
        }
        const double denom = std::max(a, b);
        if (denom > 0.0) total += (b - a) / denom;
    }
    return total / double(points.size());
}

std::vector<std::size_t> canonical(const std::vector<std::size_t>& labels) {
    std::map<std::size_t, std::size_t> remap;
    std::vector<std::size_t> out;
    for (auto l : labels) {
        auto it = remap.find(l);
        if (it == remap.end()) it = remap.emplace(l, remap.size()).first;
        out.push_back(it->second);
    }
    return out;
}

}  // namespace newsscope::testing::oracle
