#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "newsscope/text.hpp"

namespace newsscope {

enum class EntityType : std::size_t { person = 0, location, organization };

inline constexpr std::size_t kEntityTypeCount = 3;
inline constexpr std::array<EntityType, kEntityTypeCount> kAllEntityTypes = {
    EntityType::person, EntityType::location, EntityType::organization};

std::string_view entity_type_name(EntityType t) noexcept;
std::optional<EntityType> parse_entity_type(std::string_view name) noexcept;

/// One resolved entity occurrence; `begin`/`end` are UTF-8 byte offsets into the body.
struct EntityMention {
    EntityType type = EntityType::person;
    std::string entity;  // canonical form: case-folded tokens joined by single spaces
    std::size_t begin = 0;
    std::size_t end = 0;

    bool operator==(const EntityMention&) const = default;
};

/// Per-type sets of canonical entity strings.
using EntitySets = std::array<std::set<std::string>, kEntityTypeCount>;

EntitySets entity_sets(const std::vector<EntityMention>& mentions);

/// Canonical form of a phrase: tokenized, case-folded, joined with single spaces.
std::string canonical_phrase(std::string_view phrase);

/// Phrase lists per entity type, matched case-insensitively on whole tokens.
class Gazetteer {
public:
    Gazetteer() = default;

    void add(EntityType type, std::string_view phrase);
    void load(EntityType type, std::istream& in);
    void load(EntityType type, const std::filesystem::path& path);

    bool empty() const { return size_ == 0; }
    /// Canonical phrases of one type, sorted.
    std::vector<std::string> phrases(EntityType type) const;
    std::size_t size() const { return size_; }

    /// Longest match wins; among equal lengths the leftmost; then person < location < organization.
    /// Phrases whose canonical form is a stopword are never reported.
    std::vector<EntityMention> match(const TokenizedText& text,
                                     const StopwordSet& stopwords) const;

private:
    struct Phrase {
        std::vector<std::string> tokens;
        EntityType type;
    };
    std::map<std::string, std::vector<Phrase>, std::less<>> by_first_token_;
    std::size_t size_ = 0;
};

/// Precomputed entity annotations, keyed by article id (JSON Lines sidecar:
/// {"article_id", "type", "surface", "start", "end"}).
class EntityAnnotations {
public:
    static EntityAnnotations parse(std::istream& in);
    static EntityAnnotations load(const std::filesystem::path& path);

    /// Mentions for an article, overlap-resolved, or nullopt when the sidecar has none.
    std::optional<std::vector<EntityMention>> for_article(std::string_view id,
                                                          std::string_view body,
                                                          const StopwordSet& stopwords) const;
    std::size_t article_count() const { return by_article_.size(); }

private:
    struct Raw {
        EntityType type;
        std::string surface;
        std::size_t start;
        std::size_t end;
    };
    std::map<std::string, std::vector<Raw>, std::less<>> by_article_;
};

}  // namespace newsscope
