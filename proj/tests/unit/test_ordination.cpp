#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "newsscope/error.hpp"
#include "newsscope/ordination.hpp"

using namespace newsscope;

namespace {

SquareMatrix distances_of(const std::vector<Point>& pts) {
    SquareMatrix d(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) d(i, j) = std::sqrt(squared_distance(pts[i], pts[j]));
    return d;
}

std::vector<std::string> ids_for(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
    return ids;
}

std::vector<Point> random_points(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
    return pts;
}

double layout_distance(const Layout& l, std::size_t i, std::size_t j) {
    return std::hypot(l.x[i] - l.x[j], l.y[i] - l.y[j]) * l.scale;
}

}  // namespace

TEST(Mds, EquilateralTriangle) {
    SquareMatrix d(3, 1.0);
    for (std::size_t i = 0; i < 3; ++i) d(i, i) = 0.0;
    const auto l = mds_layout(d, ids_for(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < i; ++j) EXPECT_NEAR(layout_distance(l, i, j), 1.0, 1e-6);
}

TEST(Mds, TwoPoints) {
    SquareMatrix d(2);
    d(0, 1) = d(1, 0) = 2.5;
    const auto l = mds_layout(d, ids_for(2));
    EXPECT_NEAR(layout_distance(l, 0, 1), 2.5, 1e-9);
}

TEST(Mds, PlantAndRecover) {
    const auto pts = random_points(60, 3);
    const auto l = mds_layout(distances_of(pts), ids_for(60));
    EXPECT_LT(l.stress, 0.01);
    EXPECT_NEAR(stress(distances_of(pts), l), l.stress, 1e-9);
}

TEST(Mds, NormalizedToUnitSquare) {
    const auto l = mds_layout(distances_of(random_points(30, 5)), ids_for(30));
    double xmin = 1, xmax = 0, ymin = 1, ymax = 0;
    for (std::size_t i = 0; i < 30; ++i) {
        xmin = std::min(xmin, l.x[i]);
        xmax = std::max(xmax, l.x[i]);
        ymin = std::min(ymin, l.y[i]);
        ymax = std::max(ymax, l.y[i]);
    }
    EXPECT_GE(xmin, 0.0);
    EXPECT_GE(ymin, 0.0);
    EXPECT_LE(xmax, 1.0);
    EXPECT_LE(ymax, 1.0);
    EXPECT_NEAR(std::max(xmax - xmin, ymax - ymin), 1.0, 1e-12);
}

TEST(Mds, StressTraceNonIncreasing) {
    // Non-Euclidean input so SMACOF has work to do.
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    SquareMatrix d(25);
    for (std::size_t i = 0; i < 25; ++i)
        for (std::size_t j = 0; j < i; ++j) d(i, j) = d(j, i) = u(rng);
    const auto l = mds_layout(d, ids_for(25));
    ASSERT_GE(l.stress_trace.size(), 2u);
    for (std::size_t i = 1; i < l.stress_trace.size(); ++i) EXPECT_LE(l.stress_trace[i], l.stress_trace[i - 1]);
    EXPECT_EQ(l.stress, l.stress_trace.back());
}

TEST(Mds, DeterministicBitForBit) {
    const auto d = distances_of(random_points(40, 12));
    const auto a = mds_layout(d, ids_for(40));
    const auto b = mds_layout(d, ids_for(40));
    EXPECT_EQ(a.x, b.x);
    EXPECT_EQ(a.y, b.y);
    EXPECT_EQ(a.stress, b.stress);
}

TEST(Mds, AllZeroDistancesCollapseToCentre) {
    const auto l = mds_layout(SquareMatrix(4, 0.0), ids_for(4));
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(l.x[i], 0.5);
        EXPECT_EQ(l.y[i], 0.5);
    }
    EXPECT_EQ(l.stress, 0.0);
}

TEST(Mds, InvalidInputs) {
    SquareMatrix asym(3);
    asym(0, 1) = 1.0;
    asym(1, 0) = 2.0;
    EXPECT_THROW(mds_layout(asym, ids_for(3)), Error);
    SquareMatrix neg(2);
    neg(0, 1) = neg(1, 0) = -1.0;
    EXPECT_THROW(mds_layout(neg, ids_for(2)), Error);
    EXPECT_THROW(mds_layout(SquareMatrix(1), ids_for(1)), Error);
    EXPECT_THROW(mds_layout(SquareMatrix(3), ids_for(2)), Error);
}

TEST(Stress, PerfectEmbeddingIsZero) {
    const auto pts = random_points(10, 1);
    EXPECT_NEAR(stress(distances_of(pts), pts), 0.0, 1e-12);
}

TEST(Stress, CoincidentLayoutIsOne) {
    const auto pts = random_points(10, 2);
    EXPECT_EQ(stress(distances_of(pts), std::vector<Point>(10, Point{0.0, 0.0})), 1.0);
}

TEST(ClassicalMds, SignConvention) {
    const auto pts = random_points(12, 4);
    const auto c = classical_mds(distances_of(pts), 2);
    for (std::size_t dim = 0; dim < 2; ++dim) {
        double best = 0.0;
        for (const auto& p : c)
            if (std::abs(p[dim]) > std::abs(best)) best = p[dim];
        EXPECT_GT(best, 0.0);
    }
}
