#include "newsscope/emotion.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "newsscope/error.hpp"
#include "newsscope/text.hpp"

namespace newsscope {

namespace {

constexpr std::array<std::string_view, kEmotionCount> kNames = {
    "anger", "anticipation", "disgust", "fear", "joy", "sadness", "surprise", "trust"};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

std::string_view emotion_name(Emotion e) noexcept {
    return kNames[static_cast<std::size_t>(e)];
}

std::optional<Emotion> parse_emotion(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name) return emotion_at(i);
    return std::nullopt;
}

void EmotionLexicon::add(std::string_view word, Emotion e) {
    auto key = fold_case(word);
    entries_[std::move(key)].set(static_cast<std::size_t>(e));
}

EmotionSet EmotionLexicon::lookup(std::string_view word) const {
    auto it = entries_.find(word);
    if (it == entries_.end()) {
        it = entries_.find(fold_case(word));
        if (it == entries_.end()) return {};
    }
    return it->second;
}

EmotionLexicon EmotionLexicon::parse(std::istream& in) {
    EmotionLexicon lexicon;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto t1 = body.find('\t');
        const auto t2 = t1 == std::string_view::npos ? t1 : body.find('\t', t1 + 1);
        if (t2 == std::string_view::npos)
            throw validation_error("lexicon line " + std::to_string(line_no) +
                                       ": expected word<TAB>emotion<TAB>flag",
                                   "lexicon");
        const auto word = trim(body.substr(0, t1));
        const auto category = trim(body.substr(t1 + 1, t2 - t1 - 1));
        const auto flag = trim(body.substr(t2 + 1));
        if (flag != "0" && flag != "1")
            throw validation_error("lexicon line " + std::to_string(line_no) + ": flag must be 0 or 1",
                                   "lexicon");
        if (category == "positive" || category == "negative") continue;
        const auto emotion = parse_emotion(category);
        if (!emotion)
            throw validation_error("lexicon line " + std::to_string(line_no) +
                                       ": unknown emotion '" + std::string(category) + "'",
                                   "lexicon");
        if (word.empty()) continue;
        if (flag == "1") lexicon.add(word, *emotion);
    }
    return lexicon;
}

EmotionLexicon EmotionLexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open emotion lexicon " + path.string(), "lexicon");
    return parse(in);
}

void EmotionLexicon::write(std::ostream& out) const {
    for (const auto& [word, set] : entries_)
        for (std::size_t i = 0; i < kEmotionCount; ++i)
            if (set.test(i)) out << word << '\t' << kNames[i] << "\t1\n";
}

EmotionScore emotion_vector(std::span<const std::string> terms, const EmotionLexicon& lexicon) {
    EmotionScore score;
    if (terms.empty()) {
        score.degenerate = true;
        return score;
    }
    std::array<std::size_t, kEmotionCount> counts{};
    for (const auto& term : terms) {
        const auto set = lexicon.lookup(term);
        for (std::size_t i = 0; i < kEmotionCount; ++i)
            if (set.test(i)) ++counts[i];
    }
    const auto n = static_cast<double>(terms.size());
    for (std::size_t i = 0; i < kEmotionCount; ++i)
        score.vector[i] = static_cast<double>(counts[i]) / n;
    return score;
}

std::vector<Emotion> top_emotions(const EmotionVector& v, std::size_t count) {
    std::array<std::size_t, kEmotionCount> order;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    std::vector<Emotion> out;
    for (std::size_t i = 0; i < std::min(count, kEmotionCount); ++i) out.push_back(emotion_at(order[i]));
    return out;
}

}  // namespace newsscope
