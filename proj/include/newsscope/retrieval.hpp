#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "newsscope/corpus_store.hpp"
#include "newsscope/date.hpp"

namespace newsscope {

struct QuerySpec {
    std::vector<std::string> keywords;
    /// Inclusive window; a missing bound defaults to the corpus date range.
    std::optional<Date> date_from;
    std::optional<Date> date_to;
    std::set<std::string> sites_include;
    std::set<std::string> sites_exclude;
    std::size_t limit = 100;
    bool balanced = false;

    /// Throws validation_error naming the offending field.
    void validate() const;
};

struct ScoredArticle {
    std::string id;
    double score = 0.0;

    bool operator==(const ScoredArticle&) const = default;
};

struct DayCount {
    Date day;
    std::size_t count = 0;

    bool operator==(const DayCount&) const = default;
};

struct ResultSet {
    std::vector<ScoredArticle> results;
    Date date_from;
    Date date_to;
    /// Window length R in days, date_to - date_from + 1.
    std::int32_t window_days = 1;
    std::vector<DayCount> histogram;

    std::vector<std::string> ids() const;
};

/// Distinct, stopword-filtered query terms in sorted order.
std::set<std::string> query_terms(const std::vector<std::string>& keywords, const StopwordSet& stopwords);

/// TF-IDF ranking with the query treated as a short document.
///
/// idf is computed over the date/site-filtered candidates only. Zero-score
/// articles are dropped. Ties go to the earlier publication day, then the
/// smaller id. When `query.balanced` is set this dispatches to
/// `search_balanced`.
ResultSet search(const CorpusStore& store, const QuerySpec& query);

/// Equal per-site quotas of floor(limit / scoring sites); shortfalls are not redistributed.
ResultSet search_balanced(const CorpusStore& store, const QuerySpec& query);

}  // namespace newsscope
