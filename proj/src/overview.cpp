#include "newsscope/overview.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "newsscope/error.hpp"

namespace newsscope {

namespace {

std::vector<TermFrequency> top_by_count(const std::map<std::string, std::size_t>& counts, std::size_t n) {
    std::vector<TermFrequency> out;
    for (const auto& [term, c] : counts) out.push_back(TermFrequency{term, c});
    std::stable_sort(out.begin(), out.end(),
                     [](const TermFrequency& a, const TermFrequency& b) { return a.count > b.count; });
    if (out.size() > n) out.resize(n);
    return out;
}

std::vector<EmotionValue> top_four(const EmotionVector& v) {
    std::vector<EmotionValue> out;
    for (auto e : top_emotions(v, 4)) out.push_back(EmotionValue{e, v[static_cast<std::size_t>(e)]});
    return out;
}

void require_unique(const std::vector<std::string>& ids) {
    std::set<std::string> seen;
    for (const auto& id : ids)
        if (!seen.insert(id).second) throw validation_error("duplicate article id '" + id + "'", "article_ids");
}

}  // namespace

std::vector<DayCount> temporal_histogram(const std::vector<Date>& dates, Date from, Date to) {
    std::vector<DayCount> buckets;
    if (to < from) return buckets;
    for (Date d = from; d <= to; d = d + 1) buckets.push_back(DayCount{d, 0});
    for (const auto& d : dates)
        if (d >= from && d <= to) ++buckets[static_cast<std::size_t>(d - from)].count;
    return buckets;
}

std::vector<DayCount> temporal_histogram(const CorpusStore& store, const ResultSet& result) {
    std::vector<Date> dates;
    for (const auto& r : result.results) dates.push_back(store.get_article(r.id).published_at);
    return temporal_histogram(dates, result.date_from, result.date_to);
}

SiteOverview site_overview(const CorpusStore& store, const std::vector<std::string>& ids,
                           const SiteOverviewOptions& options) {
    if (ids.empty()) throw validation_error("site overview needs at least one article", "article_ids");
    require_unique(ids);
    struct Acc {
        std::size_t count = 0;
        EmotionVector sum{};
        std::map<std::string, std::size_t> keyword_df;
        std::array<std::map<std::string, std::size_t>, kEntityTypeCount> entity_df;
        std::set<std::string> keywords;
        std::set<std::string> entities;
    };
    std::map<std::string, Acc> sites;
    for (const auto& id : ids) {
        const auto i = store.index_of(id);
        const auto& f = store.features()[i];
        auto& acc = sites[store.articles()[i].site];
        ++acc.count;
        for (std::size_t e = 0; e < kEmotionCount; ++e) acc.sum[e] += f.emotion[e];
        for (const auto& term : f.keyword_terms()) {
            ++acc.keyword_df[term];
            acc.keywords.insert(term);
        }
        for (std::size_t t = 0; t < kEntityTypeCount; ++t)
            for (const auto& e : f.entities[t]) ++acc.entity_df[t][e];
        const auto tagged = tagged_entities(f, kAllTypes);
        acc.entities.insert(tagged.begin(), tagged.end());
    }

    SiteOverview out;
    for (const auto& [site, acc] : sites) {
        SiteNode node;
        node.site = site;
        node.article_count = acc.count;
        EmotionVector mean{};
        for (std::size_t e = 0; e < kEmotionCount; ++e) mean[e] = acc.sum[e] / static_cast<double>(acc.count);
        node.top_emotions = top_four(mean);
        node.top_keywords = top_by_count(acc.keyword_df, options.top_n);
        for (std::size_t t = 0; t < kEntityTypeCount; ++t)
            node.top_entities[t] = top_by_count(acc.entity_df[t], options.top_n);
        out.nodes.push_back(std::move(node));
    }
    for (auto a = sites.begin(); a != sites.end(); ++a) {
        for (auto b = std::next(a); b != sites.end(); ++b) {
            SiteEdge edge;
            edge.site_a = a->first;
            edge.site_b = b->first;
            edge.keyword_similarity = 1.0 - jaccard_distance(a->second.keywords, b->second.keywords);
            edge.entity_similarity = 1.0 - jaccard_distance(a->second.entities, b->second.entities);
            edge.similarity = 0.5 * edge.keyword_similarity + 0.5 * edge.entity_similarity;
            if (edge.similarity >= options.edge_threshold) out.edges.push_back(std::move(edge));
        }
    }
    return out;
}

ClusterLabelHeatmap cluster_label_heatmap(const CorpusStore& store, const std::vector<std::string>& ids,
                                          const std::vector<std::size_t>& assignments, std::size_t top_n) {
    if (ids.size() != assignments.size())
        throw validation_error("assignments must be parallel to article_ids", "assignments");
    if (ids.empty()) throw validation_error("at least one article is required", "article_ids");
    if (top_n < 1) throw validation_error("top_n must be at least 1", "top_n");
    require_unique(ids);
    const std::size_t k = *std::max_element(assignments.begin(), assignments.end()) + 1;
    if (k > ids.size()) throw validation_error("cluster indices must be below the article count", "assignments");

    ClusterLabelHeatmap map;
    map.cluster_sizes.assign(k, 0);
    std::vector<std::map<std::string, std::size_t>> df(k);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const auto c = assignments[i];
        ++map.cluster_sizes[c];
        for (const auto& term : store.features_of(ids[i]).keyword_terms()) ++df[c][term];
    }
    std::set<std::string> rows;
    for (std::size_t c = 0; c < k; ++c)
        for (const auto& tf : top_by_count(df[c], top_n)) rows.insert(tf.term);

    struct Row {
        std::string term;
        std::vector<double> cells;
        double peak;
    };
    std::vector<Row> table;
    for (const auto& term : rows) {
        Row r{term, std::vector<double>(k, 0.0), 0.0};
        for (std::size_t c = 0; c < k; ++c) {
            if (map.cluster_sizes[c] == 0) continue;
            const auto it = df[c].find(term);
            const auto hits = it == df[c].end() ? 0 : it->second;
            r.cells[c] = static_cast<double>(hits) / static_cast<double>(map.cluster_sizes[c]);
            r.peak = std::max(r.peak, r.cells[c]);
        }
        table.push_back(std::move(r));
    }
    std::stable_sort(table.begin(), table.end(), [](const Row& a, const Row& b) { return a.peak > b.peak; });
    for (auto& r : table) {
        map.keywords.push_back(std::move(r.term));
        map.cells.push_back(std::move(r.cells));
    }
    return map;
}

EmotionClusterSummary emotion_clusters(const CorpusStore& store, const std::vector<std::string>& ids,
                                       std::size_t k, std::uint64_t seed, const KMeansOptions& options) {
    if (k < 1) throw validation_error("k must be at least 1", "k");
    if (ids.size() < k)
        throw validation_error("subselection has fewer articles than k", "k");
    require_unique(ids);
    std::vector<Point> points;
    std::vector<std::size_t> rows;
    for (const auto& id : ids) {
        const auto i = store.index_of(id);
        rows.push_back(i);
        const auto& e = store.features()[i].emotion;
        points.emplace_back(e.begin(), e.end());
    }
    const auto model = kmeans(points, k, seed, options);

    EmotionClusterSummary summary;
    summary.k = k;
    summary.seed = seed;
    const auto& lexicon = store.lexicon();
    for (std::size_t c = 0; c < k; ++c) {
        EmotionCluster cluster;
        cluster.index = c;
        std::map<std::string, std::size_t> counts;
        for (std::size_t p = 0; p < points.size(); ++p) {
            if (model.assignments[p] != c) continue;
            const auto& a = store.articles()[rows[p]];
            const auto& f = store.features()[rows[p]];
            cluster.members.push_back(EmotionMember{a.id, a.site, a.published_at, f.emotion});
            for (std::size_t e = 0; e < kEmotionCount; ++e) cluster.mean[e] += f.emotion[e];
            for (const auto& [term, n] : f.term_counts)
                if (lexicon.lookup(term).any()) counts[term] += n;
        }
        for (auto& v : cluster.mean) v /= static_cast<double>(cluster.members.size());
        std::sort(cluster.members.begin(), cluster.members.end(), [](const EmotionMember& a, const EmotionMember& b) {
            if (a.published_at != b.published_at) return a.published_at < b.published_at;
            return a.id < b.id;
        });
        cluster.dominant = top_four(cluster.mean);
        for (const auto& d : cluster.dominant) {
            std::map<std::string, std::size_t> words;
            for (const auto& [term, n] : counts)
                if (lexicon.lookup(term).test(static_cast<std::size_t>(d.emotion))) words[term] = n;
            cluster.contributing_words.push_back(top_by_count(words, 5));
        }
        summary.clusters.push_back(std::move(cluster));
    }
    return summary;
}

EntityMatrixView entity_matrix(const CorpusStore& store, const std::vector<std::string>& ids,
                               EntityTypeSet types) {
    if (ids.size() < 2) throw validation_error("entity matrix needs at least two articles", "article_ids");
    if (types.none()) throw validation_error("at least one entity type is required", "types");
    require_unique(ids);
    const auto n = ids.size();
    EntityMatrixView view;
    view.ids = ids;
    view.similarity = SquareMatrix(n, 1.0);
    std::vector<const FeatureSet*> fs;
    for (const auto& id : ids) fs.push_back(&store.features_of(id));

    std::map<std::pair<EntityType, std::string>, std::size_t> freq;
    for (const auto* f : fs)
        for (auto type : kAllEntityTypes)
            if (types.test(static_cast<std::size_t>(type)))
                for (const auto& e : f->entities[static_cast<std::size_t>(type)]) ++freq[{type, e}];
    for (const auto& [key, count] : freq) view.word_cloud.push_back(CloudEntry{key.first, key.second, count});
    std::stable_sort(view.word_cloud.begin(), view.word_cloud.end(),
                     [](const CloudEntry& a, const CloudEntry& b) { return a.frequency > b.frequency; });

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double s = 1.0 - entity_distance(*fs[i], *fs[j], types);
            view.similarity(i, j) = view.similarity(j, i) = s;
            SharedEntities shared{i, j, {}};
            for (auto type : kAllEntityTypes) {
                const auto t = static_cast<std::size_t>(type);
                if (!types.test(t)) continue;
                const auto& a = fs[i]->entities[t];
                const auto& b = fs[j]->entities[t];
                for (const auto& e : a)
                    if (b.contains(e)) shared.entities.emplace_back(type, e);
            }
            if (!shared.entities.empty()) view.shared.push_back(std::move(shared));
        }
    }
    return view;
}

std::string_view highlight_kind_name(HighlightKind k) noexcept {
    switch (k) {
        case HighlightKind::keyword: return "keyword";
        case HighlightKind::person: return "person";
        case HighlightKind::location: return "location";
        case HighlightKind::organization: return "organization";
    }
    return "keyword";
}

std::vector<HighlightSpan> article_annotations(const CorpusStore& store, std::string_view id) {
    const auto i = store.index_of(id);
    const auto& article = store.articles()[i];
    const auto& f = store.features()[i];
    std::vector<HighlightSpan> spans;
    for (const auto& m : f.mentions)
        spans.push_back(HighlightSpan{m.begin, m.end, static_cast<HighlightKind>(static_cast<std::size_t>(m.type) + 1),
                                      m.entity});
    const auto keywords = f.keyword_terms();
    const auto tokens = tokenize(article.body, store.stopwords());
    for (const auto& t : tokens.spans) {
        if (t.stopword || !keywords.contains(t.text)) continue;
        const bool inside_entity = std::any_of(f.mentions.begin(), f.mentions.end(), [&](const EntityMention& m) {
            return t.begin < m.end && m.begin < t.end;
        });
        if (!inside_entity) spans.push_back(HighlightSpan{t.begin, t.end, HighlightKind::keyword, t.text});
    }
    std::sort(spans.begin(), spans.end(),
              [](const HighlightSpan& a, const HighlightSpan& b) { return a.begin < b.begin; });
    return spans;
}

}  // namespace newsscope
