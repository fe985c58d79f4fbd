#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace newsscope {

/// Plutchik's eight primary emotions, in the canonical (alphabetical) vector order.
enum class Emotion : std::size_t {
    anger = 0,
    anticipation,
    disgust,
    fear,
    joy,
    sadness,
    surprise,
    trust,
};

inline constexpr std::size_t kEmotionCount = 8;

using EmotionVector = std::array<double, kEmotionCount>;
using EmotionSet = std::bitset<kEmotionCount>;

std::string_view emotion_name(Emotion e) noexcept;
std::optional<Emotion> parse_emotion(std::string_view name) noexcept;
inline constexpr Emotion emotion_at(std::size_t i) { return static_cast<Emotion>(i); }

/// Word to emotion-set map read from the NRC flat format `word<TAB>emotion<TAB>0|1`.
///
/// Rows for the two sentiment categories (positive, negative) are ignored;
/// any other unknown category name is an error.
class EmotionLexicon {
public:
    EmotionLexicon() = default;

    static EmotionLexicon parse(std::istream& in);
    static EmotionLexicon load(const std::filesystem::path& path);

    void add(std::string_view word, Emotion e);
    /// Case-insensitive. Returns the empty set for unknown words.
    EmotionSet lookup(std::string_view word) const;

    std::size_t size() const { return entries_.size(); }
    const std::map<std::string, EmotionSet, std::less<>>& entries() const { return entries_; }

    /// Serializes associated rows only, in word order.
    void write(std::ostream& out) const;

private:
    std::map<std::string, EmotionSet, std::less<>> entries_;
};

struct EmotionScore {
    EmotionVector vector{};
    /// Set when the input had no tokens; the vector is then all zeros.
    bool degenerate = false;
};

/// e_i = n_i / N over post-stopword tokens. A token with m emotions counts once for each.
EmotionScore emotion_vector(std::span<const std::string> terms, const EmotionLexicon& lexicon);

/// Indices of the `count` largest components, descending; ties keep canonical order.
std::vector<Emotion> top_emotions(const EmotionVector& v, std::size_t count);

}  // namespace newsscope
