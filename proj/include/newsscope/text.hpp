#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace newsscope {

/// Lowercased stopword list, one word per line. Blank lines and `#` comments are ignored.
class StopwordSet {
public:
    StopwordSet() = default;
    explicit StopwordSet(std::set<std::string, std::less<>> words) : words_(std::move(words)) {}

    static StopwordSet parse(std::istream& in);
    static StopwordSet load(const std::filesystem::path& path);

    bool contains(std::string_view word) const { return words_.find(word) != words_.end(); }
    std::size_t size() const { return words_.size(); }
    const std::set<std::string, std::less<>>& words() const { return words_; }

private:
    std::set<std::string, std::less<>> words_;
};

/// A token with its UTF-8 byte offsets [begin, end) in the source text.
struct TokenSpan {
    std::string text;
    std::size_t begin = 0;
    std::size_t end = 0;
    bool stopword = false;
};

struct TokenizedText {
    /// Non-stopword tokens in document order; this is what gets counted.
    std::vector<std::string> terms;
    /// Every token including stopwords, for highlighting and phrase matching.
    std::vector<TokenSpan> spans;
};

/// Splits on Unicode alphanumeric boundaries and lowercases.
///
/// A code point is a word character if it is an ASCII letter or digit, or a
/// non-ASCII code point outside the punctuation, symbol and space blocks.
/// Apostrophes and hyphens are boundaries, so "Trump's" yields "trump", "s".
TokenizedText tokenize(std::string_view body, const StopwordSet& stopwords);

/// Lowercase a UTF-8 string with the same case folding the tokenizer applies.
std::string fold_case(std::string_view text);

}  // namespace newsscope
