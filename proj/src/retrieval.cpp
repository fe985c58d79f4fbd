#include "newsscope/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "newsscope/error.hpp"
#include "newsscope/overview.hpp"

namespace newsscope {

namespace {

struct Candidate {
    std::size_t index;
    double score;
};

struct Window {
    Date from;
    Date to;
};

Window resolve_window(const CorpusStore& store, const QuerySpec& q) {
    const auto& m = store.manifest();
    const Date lo = m.date_min.value_or(Date{});
    const Date hi = m.date_max.value_or(lo);
    Window w{q.date_from.value_or(lo), q.date_to.value_or(hi)};
    if (w.to < w.from) {
        // only one bound was given and it lies outside the corpus range
        if (!q.date_from) w.from = w.to;
        else w.to = w.from;
    }
    return w;
}

std::vector<Candidate> score_candidates(const CorpusStore& store, const QuerySpec& q, const Window& w) {
    std::set<std::string> include, exclude;
    for (const auto& s : q.sites_include) include.insert(site_key(s));
    for (const auto& s : q.sites_exclude) exclude.insert(site_key(s));

    std::vector<std::size_t> pool;
    const auto& articles = store.articles();
    for (std::size_t i = 0; i < articles.size(); ++i) {
        const auto& a = articles[i];
        if (a.published_at < w.from || a.published_at > w.to) continue;
        const auto key = site_key(a.site);
        if (!include.empty() && !include.contains(key)) continue;
        if (exclude.contains(key)) continue;
        pool.push_back(i);
    }

    const auto terms = query_terms(q.keywords, store.stopwords());
    const auto& features = store.features();
    std::vector<double> idf;
    for (const auto& t : terms) {
        std::size_t df = 0;
        for (auto i : pool)
            if (features[i].term_counts.contains(t)) ++df;
        idf.push_back(df == 0 ? 0.0
                              : std::log(static_cast<double>(pool.size()) / static_cast<double>(df)));
    }

    std::vector<Candidate> scored;
    for (auto i : pool) {
        double score = 0.0;
        std::size_t k = 0;
        for (const auto& t : terms) {
            const auto it = features[i].term_counts.find(t);
            if (it != features[i].term_counts.end()) score += static_cast<double>(it->second) * idf[k];
            ++k;
        }
        if (score > 0.0) scored.push_back(Candidate{i, score});
    }
    const auto& arts = store.articles();
    std::sort(scored.begin(), scored.end(), [&](const Candidate& a, const Candidate& b) {
        if (a.score != b.score) return a.score > b.score;
        const auto& x = arts[a.index];
        const auto& y = arts[b.index];
        if (x.published_at != y.published_at) return x.published_at < y.published_at;
        return x.id < y.id;
    });
    return scored;
}

ResultSet finish(const CorpusStore& store, const std::vector<Candidate>& picked, const Window& w) {
    ResultSet r;
    r.date_from = w.from;
    r.date_to = w.to;
    r.window_days = w.to - w.from + 1;
    std::vector<Date> dates;
    for (const auto& c : picked) {
        r.results.push_back(ScoredArticle{store.articles()[c.index].id, c.score});
        dates.push_back(store.articles()[c.index].published_at);
    }
    r.histogram = temporal_histogram(dates, w.from, w.to);
    return r;
}

}  // namespace

void QuerySpec::validate() const {
    if (keywords.empty()) throw validation_error("at least one keyword is required", "keywords");
    if (date_from && date_to && *date_to < *date_from)
        throw validation_error("date_from must not be after date_to", "date_from");
    if (limit < 1) throw validation_error("limit must be at least 1", "limit");
    std::set<std::string> inc;
    for (const auto& s : sites_include) inc.insert(site_key(s));
    for (const auto& s : sites_exclude)
        if (inc.contains(site_key(s)))
            throw validation_error("site '" + s + "' is both included and excluded", "sites_exclude");
}

std::vector<std::string> ResultSet::ids() const {
    std::vector<std::string> out;
    out.reserve(results.size());
    for (const auto& r : results) out.push_back(r.id);
    return out;
}

std::set<std::string> query_terms(const std::vector<std::string>& keywords, const StopwordSet& stopwords) {
    std::set<std::string> terms;
    for (const auto& k : keywords) {
        auto t = tokenize(k, stopwords);
        terms.insert(t.terms.begin(), t.terms.end());
    }
    return terms;
}

ResultSet search(const CorpusStore& store, const QuerySpec& query) {
    if (query.balanced) return search_balanced(store, query);
    query.validate();
    const auto window = resolve_window(store, query);
    auto scored = score_candidates(store, query, window);
    if (scored.size() > query.limit) scored.resize(query.limit);
    return finish(store, scored, window);
}

ResultSet search_balanced(const CorpusStore& store, const QuerySpec& query) {
    query.validate();
    const auto window = resolve_window(store, query);
    const auto scored = score_candidates(store, query, window);
    std::map<std::string, std::vector<Candidate>> by_site;
    for (const auto& c : scored) by_site[site_key(store.articles()[c.index].site)].push_back(c);
    const std::size_t quota = by_site.empty() ? 0 : query.limit / by_site.size();
    std::vector<bool> picked(store.size(), false);
    for (const auto& [_, list] : by_site)
        for (std::size_t i = 0; i < std::min(quota, list.size()); ++i) picked[list[i].index] = true;
    // scored is totally ordered; keep that order across sites
    std::vector<Candidate> merged;
    for (const auto& c : scored)
        if (picked[c.index]) merged.push_back(c);
    return finish(store, merged, window);
}

}  // namespace newsscope
