#include "spnet/cli/table.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "spnet/errors.hpp"

namespace spnet::cli {

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != header.size()) throw PreconditionError("Table: row width does not match header");
    rows.push_back(std::move(row));
}

namespace {

void write_field(std::string& out, const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) {
        out += field;
        return;
    }
    out += '"';
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
}

void write_line(std::string& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        write_field(out, fields[i]);
    }
    out += '\n';
}

} // namespace

std::string to_csv(const Table& t) {
    std::string out;
    write_line(out, t.header);
    for (const auto& row : t.rows) write_line(out, row);
    return out;
}

Table parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> lines;
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool line_open = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        line_open = true;
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
            continue;
        }
        if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n') {
            fields.push_back(std::move(field));
            field.clear();
            lines.push_back(std::move(fields));
            fields.clear();
            line_open = false;
        } else if (ch != '\r') {
            field += ch;
        }
    }
    if (quoted) throw ParseError("unterminated quoted CSV field", text.size());
    if (line_open) {
        fields.push_back(std::move(field));
        lines.push_back(std::move(fields));
    }
    if (lines.empty()) throw ParseError("empty CSV", 0);

    Table t;
    t.header = std::move(lines.front());
    for (std::size_t i = 1; i < lines.size(); ++i) t.add_row(std::move(lines[i]));
    return t;
}

std::string to_json(const Table& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

std::string to_text(const Table& t) {
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) os << "  ";
            os << std::string(width[i] - fields[i].size(), ' ') << fields[i];
        }
        os << '\n';
    };
    emit(t.header);
    for (const auto& row : t.rows) emit(row);
    return os.str();
}

} // namespace spnet::cli
