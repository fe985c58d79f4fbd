#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace newsscope {

/// Calendar date at day granularity, stored as days since 1970-01-01.
class Date {
public:
    constexpr Date() = default;
    constexpr explicit Date(std::int32_t days_since_epoch) : days_(days_since_epoch) {}

    /// Accepts YYYY-MM-DD and YYYY/MM/DD (one separator style per value).
    static std::optional<Date> parse(std::string_view text);
    static std::optional<Date> from_ymd(int year, unsigned month, unsigned day);

    constexpr std::int32_t days() const { return days_; }
    /// Always rendered as ISO 8601.
    std::string to_string() const;

    constexpr Date operator+(std::int32_t n) const { return Date(days_ + n); }
    constexpr std::int32_t operator-(Date other) const { return days_ - other.days_; }
    constexpr auto operator<=>(const Date&) const = default;

private:
    std::int32_t days_ = 0;
};

}  // namespace newsscope
