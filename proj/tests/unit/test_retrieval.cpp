#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "newsscope/error.hpp"
#include "newsscope/retrieval.hpp"

using namespace newsscope;
namespace fx = newsscope::testing;

namespace {

CorpusStore three_doc_store() {
    return fx::store_from_rows({
        {"d1", "t", "A", "2016-11-08", "trump wins election", "", ""},
        {"d2", "t", "B", "2016-11-09", "hillary loses election", "", ""},
        {"d3", "t", "A", "2016-11-10", "weather sunny today", "", ""},
    });
}

QuerySpec query(std::vector<std::string> kw, std::size_t limit = 10) {
    QuerySpec q;
    q.keywords = std::move(kw);
    q.limit = limit;
    return q;
}

}  // namespace

TEST(Search, HandComputedRanking) {
    const auto r = search(three_doc_store(), query({"trump", "election"}));
    ASSERT_EQ(r.results.size(), 2u);
    EXPECT_EQ(r.results[0].id, "d1");
    EXPECT_NEAR(r.results[0].score, 1.5040773967762742, 1e-12);
    EXPECT_EQ(r.results[1].id, "d2");
    EXPECT_NEAR(r.results[1].score, 0.4054651081081644, 1e-12);
    EXPECT_EQ(r.window_days, 3);
    EXPECT_EQ(r.histogram.size(), 3u);
}

TEST(Search, AbsentTermGivesEmptyResult) {
    EXPECT_TRUE(search(three_doc_store(), query({"zebra"})).results.empty());
}

TEST(Search, LimitTruncates) {
    const auto r = search(three_doc_store(), query({"trump", "election"}, 1));
    EXPECT_EQ(r.ids(), (std::vector<std::string>{"d1"}));
}

TEST(Search, EmptyKeywordsIsValidationError) {
    try {
        search(three_doc_store(), query({}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::validation_error);
        EXPECT_EQ(e.field(), "keywords");
    }
}

TEST(Search, InvertedWindowIsValidationError) {
    auto q = query({"trump"});
    q.date_from = Date::parse("2016-11-10");
    q.date_to = Date::parse("2016-11-08");
    EXPECT_THROW(search(three_doc_store(), q), Error);
}

TEST(Search, IdfUsesFilteredCandidates) {
    // Restricted to site A, "election" appears in 1 of 2 candidates.
    auto q = query({"election"});
    q.sites_include = {"a"};
    const auto r = search(three_doc_store(), q);
    ASSERT_EQ(r.results.size(), 1u);
    EXPECT_NEAR(r.results[0].score, std::log(2.0), 1e-15);
}

TEST(Search, DateWindowFilters) {
    auto q = query({"election"});
    q.date_from = Date::parse("2016-11-09");
    const auto r = search(three_doc_store(), q);
    EXPECT_EQ(r.ids(), (std::vector<std::string>{"d2"}));
    EXPECT_EQ(r.date_from.to_string(), "2016-11-09");
}

TEST(Search, ExcludedSitesDropped) {
    auto q = query({"election"});
    q.sites_exclude = {"B"};
    EXPECT_EQ(search(three_doc_store(), q).ids(), (std::vector<std::string>{"d1"}));
}

TEST(Search, TiesBreakByDateThenId) {
    const auto store = fx::store_from_rows({
        {"z", "t", "A", "2020-01-02", "vote", "", ""},
        {"y", "t", "A", "2020-01-01", "vote", "", ""},
        {"x", "t", "A", "2020-01-02", "vote", "", ""},
        {"w", "t", "A", "2020-01-01", "other", "", ""},
    });
    EXPECT_EQ(search(store, query({"vote"})).ids(), (std::vector<std::string>{"y", "x", "z"}));
}

TEST(Search, StopwordOnlyQueryMatchesNothing) {
    EXPECT_TRUE(search(three_doc_store(), query({"the"})).results.empty());
}

TEST(Search, MatchesOracleOnRandomCorpora) {
    const std::set<std::string> stop = {"a", "an", "and", "in", "of", "on", "the", "to", "was", "with"};
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto rows = fx::synthetic_articles(150, seed, {"A", "B", "C"}, 20);
        const auto store = fx::store_from_rows(rows);
        auto q = query({"vote", "storm", "hope"}, 1000);
        q.date_from = Date::parse("2020-03-05");
        q.date_to = Date::parse("2020-03-15");
        const auto got = search(store, q);
        const auto want = fx::oracle::search(rows, stop, {"hope", "storm", "vote"}, "2020-03-05", "2020-03-15");
        ASSERT_EQ(got.results.size(), want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
            EXPECT_EQ(got.results[i].id, want[i].id);
            EXPECT_NEAR(got.results[i].score, want[i].score, 1e-12);
        }
    }
}

TEST(SearchBalanced, ShortfallNotRedistributed) {
    std::vector<fx::CsvArticle> rows;
    for (int i = 0; i < 8; ++i) rows.push_back({"a" + std::to_string(i), "t", "A", "2020-01-01", "vote", "", ""});
    for (int i = 0; i < 2; ++i) rows.push_back({"b" + std::to_string(i), "t", "B", "2020-01-01", "vote", "", ""});
    rows.push_back({"c0", "t", "C", "2020-01-01", "unrelated", "", ""});
    const auto store = fx::store_from_rows(rows);
    auto q = query({"vote"});
    q.balanced = true;
    const auto r = search(store, q);
    std::map<std::string, int> per_site;
    for (const auto& id : r.ids()) per_site[store.get_article(id).site]++;
    EXPECT_EQ(per_site["A"], 5);
    EXPECT_EQ(per_site["B"], 2);
    EXPECT_EQ(r.results.size(), 7u);
}

TEST(SearchBalanced, SingleSiteMatchesPlainSearch) {
    const auto rows = fx::synthetic_articles(60, 9, {"Only"});
    const auto store = fx::store_from_rows(rows);
    auto q = query({"vote", "court"}, 12);
    const auto plain = search(store, q);
    q.balanced = true;
    EXPECT_EQ(search(store, q).results, plain.results);
}

TEST(SearchBalanced, FourteenSitesTenEach) {
    std::vector<fx::CsvArticle> rows;
    for (int s = 0; s < 14; ++s)
        for (int i = 0; i < 12 + s; ++i)
            rows.push_back({"s" + std::to_string(s) + "_" + std::to_string(i), "t", "Site" + std::to_string(s),
                            "2020-01-01", i % 2 ? "vote vote" : "vote", "", ""});
    // non-matching filler keeps idf(vote) above zero
    for (int i = 0; i < 20; ++i) rows.push_back({"f" + std::to_string(i), "t", "Filler", "2020-01-01", "storm", "", ""});
    const auto store = fx::store_from_rows(rows);
    auto q = query({"vote"}, 140);
    q.balanced = true;
    const auto r = search(store, q);
    std::map<std::string, int> per_site;
    for (const auto& id : r.ids()) per_site[store.get_article(id).site]++;
    EXPECT_EQ(per_site.size(), 14u);
    for (const auto& [site, n] : per_site) EXPECT_EQ(n, 10) << site;
}

TEST(QueryTerms, NormalizedAndDeduplicated) {
    const auto t = query_terms({"Trump", "trump's", "THE"}, fx::small_stopwords());
    EXPECT_EQ(t, (std::set<std::string>{"s", "trump"}));
}
