#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace newsscope {

/// Streaming RFC 4180 reader: quoted fields, doubled quotes, embedded newlines, CRLF.
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    /// Next record, or nullopt at end of input. Throws on an unterminated quote.
    std::optional<std::vector<std::string>> next();
    /// 1-based physical line on which the last returned record started.
    std::size_t line() const { return record_line_; }

private:
    std::istream& in_;
    std::size_t line_ = 1;
    std::size_t record_line_ = 0;
};

}  // namespace newsscope
