#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "newsscope/clustering.hpp"
#include "newsscope/similarity.hpp"

namespace newsscope {

struct Layout {
    std::vector<std::string> ids;
    /// Normalized to [0,1]^2: the larger axis spans exactly [0,1], aspect ratio kept.
    std::vector<double> x;
    std::vector<double> y;
    /// Kruskal stress-1 of the un-normalized embedding.
    double stress = 0.0;
    /// Multiply normalized distances by this to recover embedding distances.
    double scale = 0.0;
    /// Stress after the classical start and after each accepted SMACOF step.
    std::vector<double> stress_trace;

    /// Un-normalized coordinates as 2-D points.
    std::vector<Point> embedding() const;
};

struct MdsOptions {
    std::size_t max_iterations = 200;
    /// Stop when the relative stress improvement falls below this.
    double tolerance = 1e-10;
};

/// Throws validation_error unless `d` is square, symmetric, finite, non-negative with a zero diagonal.
void validate_dissimilarities(const SquareMatrix& d);

/// Torgerson classical MDS into `dims` dimensions; negative eigenvalues are clamped to zero.
/// Each eigenvector's largest-magnitude component is made positive.
std::vector<Point> classical_mds(const SquareMatrix& d, std::size_t dims);

/// Classical start refined by SMACOF stress majorization, then normalized.
Layout mds_layout(const SquareMatrix& d, std::vector<std::string> ids, const MdsOptions& options = {});
Layout mds_layout(const DistanceMatrix& m, const MdsOptions& options = {});

/// sqrt(sum (d_ij - delta_ij)^2 / sum delta_ij^2) over i < j.
double stress(const SquareMatrix& d, const std::vector<Point>& coords);
double stress(const SquareMatrix& d, const Layout& layout);

}  // namespace newsscope
