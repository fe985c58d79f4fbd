#include "newsscope/ordination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "newsscope/error.hpp"

namespace newsscope {

namespace {

Eigen::MatrixXd to_eigen(const std::vector<Point>& coords, std::size_t dims) {
    Eigen::MatrixXd x(static_cast<Eigen::Index>(coords.size()), static_cast<Eigen::Index>(dims));
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t d = 0; d < dims; ++d) x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d)) = coords[i][d];
    return x;
}

double raw_stress(const SquareMatrix& delta, const Eigen::MatrixXd& x, double denom) {
    const auto n = delta.size();
    double num = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = (x.row(static_cast<Eigen::Index>(i)) - x.row(static_cast<Eigen::Index>(j))).norm();
            const double e = d - delta(i, j);
            num += e * e;
        }
    if (denom == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::sqrt(num / denom);
}

// One Guttman transform with unit weights: X' = B(X) X / n.
Eigen::MatrixXd guttman(const SquareMatrix& delta, const Eigen::MatrixXd& x) {
    const auto n = static_cast<Eigen::Index>(delta.size());
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double diag = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            const double d = (x.row(i) - x.row(j)).norm();
            const double v = d > 0.0 ? -delta(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) / d : 0.0;
            b(i, j) = v;
            diag -= v;
        }
        b(i, i) = diag;
    }
    return (b * x) / static_cast<double>(n);
}

}  // namespace

std::vector<Point> Layout::embedding() const {
    std::vector<Point> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back({x[i] * scale, y[i] * scale});
    return out;
}

void validate_dissimilarities(const SquareMatrix& d) {
    const auto n = d.size();
    if (n < 2) throw validation_error("at least two articles are required", "article_ids");
    for (std::size_t i = 0; i < n; ++i) {
        if (d(i, i) != 0.0) throw validation_error("distance matrix diagonal must be zero", "matrix");
        for (std::size_t j = 0; j < n; ++j) {
            const double v = d(i, j);
            if (!std::isfinite(v) || v < 0.0)
                throw validation_error("distances must be finite and non-negative", "matrix");
            if (std::abs(v - d(j, i)) > 1e-12 * std::max(1.0, std::abs(v)))
                throw validation_error("distance matrix must be symmetric", "matrix");
        }
    }
}

std::vector<Point> classical_mds(const SquareMatrix& d, std::size_t dims) {
    validate_dissimilarities(d);
    const auto n = static_cast<Eigen::Index>(d.size());
    Eigen::MatrixXd sq(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const double v = d(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            sq(i, j) = v * v;
        }
    // double centering: B = -1/2 J D^2 J
    const Eigen::VectorXd row_mean = sq.rowwise().mean();
    const Eigen::VectorXd col_mean = sq.colwise().mean();
    const double grand = sq.mean();
    Eigen::MatrixXd b(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) b(i, j) = -0.5 * (sq(i, j) - row_mean(i) - col_mean(j) + grand);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
    if (solver.info() != Eigen::Success) throw Error(ErrorCode::internal, "eigendecomposition failed");
    const auto& values = solver.eigenvalues();   // ascending
    const auto& vectors = solver.eigenvectors();

    std::vector<Point> coords(d.size(), Point(dims, 0.0));
    for (std::size_t k = 0; k < dims && static_cast<Eigen::Index>(k) < n; ++k) {
        const Eigen::Index col = n - 1 - static_cast<Eigen::Index>(k);
        const double lambda = std::max(0.0, values(col));
        if (lambda == 0.0) continue;
        Eigen::VectorXd v = vectors.col(col);
        Eigen::Index arg = 0;
        for (Eigen::Index i = 1; i < n; ++i)
            if (std::abs(v(i)) > std::abs(v(arg))) arg = i;
        if (v(arg) < 0.0) v = -v;
        const double s = std::sqrt(lambda);
        for (Eigen::Index i = 0; i < n; ++i) coords[static_cast<std::size_t>(i)][k] = v(i) * s;
    }
    return coords;
}

Layout mds_layout(const SquareMatrix& d, std::vector<std::string> ids, const MdsOptions& options) {
    validate_dissimilarities(d);
    if (ids.size() != d.size()) throw validation_error("id count must match matrix size", "article_ids");
    const auto n = d.size();
    double denom = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) denom += d(i, j) * d(i, j);

    Eigen::MatrixXd x = to_eigen(classical_mds(d, 2), 2);
    Layout layout;
    double current = raw_stress(d, x, denom);
    layout.stress_trace.push_back(current);
    for (std::size_t it = 0; it < options.max_iterations && current > 0.0; ++it) {
        Eigen::MatrixXd next = guttman(d, x);
        const double s = raw_stress(d, next, denom);
        // majorization cannot increase stress; a larger value is rounding noise at the fixpoint
        if (!(s <= current)) break;
        const double gain = current - s;
        x = std::move(next);
        current = s;
        layout.stress_trace.push_back(current);
        if (gain <= options.tolerance * current) break;
    }
    layout.stress = current;

    const double min_x = x.col(0).minCoeff(), max_x = x.col(0).maxCoeff();
    const double min_y = x.col(1).minCoeff(), max_y = x.col(1).maxCoeff();
    const double extent = std::max(max_x - min_x, max_y - min_y);
    layout.ids = std::move(ids);
    layout.scale = extent;
    layout.x.resize(n);
    layout.y.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = static_cast<Eigen::Index>(i);
        layout.x[i] = extent > 0.0 ? (x(r, 0) - min_x) / extent : 0.5;
        layout.y[i] = extent > 0.0 ? (x(r, 1) - min_y) / extent : 0.5;
    }
    return layout;
}

Layout mds_layout(const DistanceMatrix& m, const MdsOptions& options) {
    return mds_layout(m.aggregate, m.ids, options);
}

double stress(const SquareMatrix& d, const std::vector<Point>& coords) {
    if (coords.size() != d.size()) throw validation_error("layout must cover every matrix row", "layout");
    double denom = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) denom += d(i, j) * d(i, j);
    if (coords.empty()) return 0.0;
    return raw_stress(d, to_eigen(coords, coords[0].size()), denom);
}

double stress(const SquareMatrix& d, const Layout& layout) { return stress(d, layout.embedding()); }

}  // namespace newsscope
