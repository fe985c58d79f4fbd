#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "newsscope/corpus_store.hpp"

namespace newsscope::testing {

std::filesystem::path data_dir();
/// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& name);

StopwordSet small_stopwords();
EmotionLexicon small_lexicon();
Gazetteer small_gazetteer();

/// Small stopword list, fixture lexicon and gazetteer.
IngestOptions fixture_options(std::size_t keyword_count = 20);

/// CSV field quoting per RFC 4180.
std::string csv_field(const std::string& value);

struct CsvArticle {
    std::string id;
    std::string title;
    std::string site;
    std::string date;
    std::string body;
    std::string author;
    std::string url;
};

std::string make_csv(const std::vector<CsvArticle>& rows, bool with_id = true);

CorpusStore store_from_csv(const std::string& csv, const IngestOptions& options = fixture_options());
CorpusStore store_from_rows(const std::vector<CsvArticle>& rows, const IngestOptions& options = fixture_options());

/// Lowercase space-separated bodies over a fixed vocabulary; dates spread over `days`.
std::vector<CsvArticle> synthetic_articles(std::size_t n, std::uint64_t seed,
                                           const std::vector<std::string>& sites, int days = 30,
                                           std::size_t words_per_article = 40);

/// Vocabulary the synthetic generator draws from; no stopwords, and the last
/// few words are gazetteer names so entity sets are populated.
const std::vector<std::string>& synthetic_vocabulary();

CorpusStore election_store();

}  // namespace newsscope::testing
