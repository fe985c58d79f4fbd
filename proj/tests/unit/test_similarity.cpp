#include <gtest/gtest.h>

#include <cmath>

#include "../support/fixtures.hpp"
#include "newsscope/error.hpp"
#include "newsscope/similarity.hpp"

using namespace newsscope;
namespace fx = newsscope::testing;

namespace {

FeatureSet with_keywords(std::vector<std::string> terms) {
    FeatureSet f;
    for (auto& t : terms) f.keywords.push_back({std::move(t), 1.0});
    return f;
}

FeatureSet with_entities(std::set<std::string> persons, std::set<std::string> locations = {}) {
    FeatureSet f;
    f.entities[0] = std::move(persons);
    f.entities[1] = std::move(locations);
    return f;
}

}  // namespace

TEST(Jaccard, Cases) {
    EXPECT_EQ(jaccard_distance({"a", "b"}, {"a", "b"}), 0.0);
    EXPECT_EQ(jaccard_distance({"a", "b", "c"}, {"b", "c", "d"}), 0.5);
    EXPECT_EQ(jaccard_distance({"a"}, {"b"}), 1.0);
    EXPECT_EQ(jaccard_distance({}, {}), 0.0);
    EXPECT_EQ(jaccard_distance({}, {"a"}), 1.0);
}

TEST(KeywordDistance, UsesKeywordSets) {
    EXPECT_EQ(keyword_distance(with_keywords({"a", "b", "c"}), with_keywords({"b", "c", "d"})), 0.5);
    EXPECT_EQ(keyword_distance(with_keywords({"x"}), with_keywords({"x"})), 0.0);
}

TEST(EntityDistance, TaggedUnion) {
    const auto a = with_entities({"trump"}, {"ohio"});
    const auto b = with_entities({"trump"});
    EXPECT_EQ(entity_distance(with_entities({"trump"}), with_entities({"trump"})), 0.0);
    EXPECT_EQ(entity_distance(a, b), 0.5);
    EXPECT_EQ(entity_distance(a, b, EntityTypeSet{0b010}), 1.0);
    EXPECT_EQ(entity_distance(a, b, EntityTypeSet{0b001}), 0.0);
    EXPECT_THROW(entity_distance(a, b, EntityTypeSet{}), Error);
}

TEST(EntityDistance, SameStringDifferentTypesDiffer) {
    FeatureSet a, b;
    a.entities[0] = {"washington"};
    b.entities[1] = {"washington"};
    EXPECT_EQ(entity_distance(a, b), 1.0);
    EXPECT_EQ(tagged_entities(a, kAllTypes), (std::set<std::string>{"person:washington"}));
}

TEST(TemporalDistance, Cases) {
    const auto d = *Date::parse("2016-11-09");
    EXPECT_EQ(temporal_distance(d, d, 7), 0.0);
    EXPECT_NEAR(temporal_distance(d, d + 3, 7), 0.42857142857142855, 1e-15);
    EXPECT_EQ(temporal_distance(d + 6, d, 7), 6.0 / 7.0);
    EXPECT_THROW(temporal_distance(d, d, 0), Error);
}

TEST(EmotionDistance, Cases) {
    EmotionVector a{}, b{};
    EXPECT_EQ(emotion_distance(a, b), 0.0);
    b[4] = 0.3;
    EXPECT_NEAR(emotion_distance(a, b), 0.3, 1e-15);
    EmotionVector c{}, d{};
    c[0] = 0.4;
    d[1] = 0.3;
    EXPECT_NEAR(emotion_distance(c, d), 0.5, 1e-15);
}

TEST(AggregateMatrix, WeightedSumHandExample) {
    // d_k = 0.4 needs |A∩B|/|A∪B| = 0.6: 3 shared of 5.
    FeatureSet a = with_keywords({"a", "b", "c", "d"});
    FeatureSet b = with_keywords({"a", "b", "c", "e"});
    // d_e = 0.6: 2 shared of 5
    a.entities[0] = {"p1", "p2", "p3", "p4"};
    b.entities[0] = {"p1", "p2", "p5"};
    const auto d0 = *Date::parse("2020-01-01");
    const std::vector<DistanceItem> items{{"a", &a, d0}, {"b", &b, d0 + 1}};
    const auto m = aggregate_matrix(items, 5, {0.5, 0.3, 0.2});
    EXPECT_NEAR(m.keyword(0, 1), 0.4, 1e-15);
    EXPECT_NEAR(m.entity(0, 1), 0.6, 1e-15);
    EXPECT_NEAR(m.temporal(0, 1), 0.2, 1e-15);
    EXPECT_NEAR(m.aggregate(0, 1), 0.42, 1e-15);
    EXPECT_EQ(m.aggregate(0, 0), 0.0);
}

TEST(AggregateMatrix, KeywordOnlyEqualsKeywordDistance) {
    const auto store = fx::store_from_rows(fx::synthetic_articles(20, 4, {"A", "B"}));
    std::vector<std::string> ids;
    for (const auto& a : store.articles()) ids.push_back(a.id);
    const auto m = aggregate_matrix(store, ids, date_span(store, ids), {1, 0, 0});
    EXPECT_EQ(m.aggregate, m.keyword);
}

TEST(AggregateMatrix, SymmetricZeroDiagonal) {
    const auto store = fx::election_store();
    std::vector<std::string> ids;
    for (const auto& a : store.articles()) ids.push_back(a.id);
    const auto m = aggregate_matrix(store, ids, date_span(store, ids), {});
    for (std::size_t i = 0; i < ids.size(); ++i) {
        EXPECT_EQ(m.aggregate(i, i), 0.0);
        for (std::size_t j = 0; j < i; ++j) {
            EXPECT_EQ(m.aggregate(i, j), m.aggregate(j, i));
            EXPECT_GE(m.aggregate(i, j), 0.0);
            EXPECT_LE(m.aggregate(i, j), 3.0);
        }
    }
}

TEST(AggregateMatrix, Errors) {
    const auto store = fx::election_store();
    const auto first = store.articles()[0].id;
    EXPECT_THROW(aggregate_matrix(store, {first}, 7, {}), Error);
    try {
        aggregate_matrix(store, {first, "nope"}, 7, {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::not_found);
    }
    EXPECT_THROW(aggregate_matrix(store, {first, store.articles()[1].id}, 7, {0, 0, 0}), Error);
    EXPECT_THROW(aggregate_matrix(store, {first, store.articles()[1].id}, 7, {-1, 1, 1}), Error);
}

TEST(SquareMatrix, LowerTriangleOrder) {
    SquareMatrix m(3);
    m(1, 0) = 1;
    m(2, 0) = 2;
    m(2, 1) = 3;
    EXPECT_EQ(m.lower_triangle(), (std::vector<double>{1, 2, 3}));
}
