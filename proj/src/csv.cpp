#include "newsscope/csv.hpp"

#include "newsscope/error.hpp"

namespace newsscope {

std::optional<std::vector<std::string>> CsvReader::next() {
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool any = false;
    bool quoted_field = false;
    record_line_ = line_;
    int c;
    while ((c = in_.get()) != std::char_traits<char>::eof()) {
        any = true;
        const char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                if (in_.peek() == '"') {
                    in_.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                if (ch == '\n') ++line_;
                field.push_back(ch);
            }
            continue;
        }
        if (ch == '"' && field.empty() && !quoted_field) {
            in_quotes = true;
            quoted_field = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
            quoted_field = false;
        } else if (ch == '\r' && in_.peek() == '\n') {
            continue;
        } else if (ch == '\n') {
            ++line_;
            fields.push_back(std::move(field));
            return fields;
        } else {
            field.push_back(ch);
        }
    }
    if (in_quotes)
        throw validation_error("unterminated quoted field starting on line " +
                                   std::to_string(record_line_),
                               "corpus");
    if (!any) return std::nullopt;
    fields.push_back(std::move(field));
    return fields;
}

}  // namespace newsscope
