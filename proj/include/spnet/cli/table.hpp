#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace spnet::cli {

/// Rectangular string table; the single shape every command emits.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);

    friend bool operator==(const Table&, const Table&) = default;
};

/// RFC 4180 style: fields quoted only when they contain ',', '"' or a newline.
std::string to_csv(const Table& t);
Table parse_csv(std::string_view text);

/// Array of objects keyed by header; all values are strings.
std::string to_json(const Table& t);
/// Space-aligned columns for terminals.
std::string to_text(const Table& t);

} // namespace spnet::cli
