#pragma once

/**
 * @file table.hpp
 * @brief Tabular output records for the CLI: parameter echo + column schema
 *        + rows, serialized as CSV or JSON.
 *
 * Cells are preformatted strings, so the two formats carry byte-identical
 * values.  Floating-point cells use 17 significant digits, which round-trips
 * double exactly; exact-backend cells are canonical "n/d" fractions.
 *
 * CSV layout: "# key=value" echo lines, then an RFC-4180-style header row and
 * data rows, LF line endings, cells quoted only when they contain a comma,
 * quote or newline.  JSON layout: one object with "params", "schema" and
 * "rows" keys; cells that look like numbers are emitted bare, anything else
 * as a JSON string.
 */

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "pqbern/rational.hpp"

namespace pqbern {

/// %.17g: shortest fixed template that round-trips IEEE double.
inline std::string format_double17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

template <ScalarField S>
std::string format_cell(const S& v) {
    if constexpr (scalar_traits<S>::is_exact) {
        return to_string(v);
    } else {
        return format_double17(v);
    }
}

enum class OutputFormat { csv, json };

inline OutputFormat parse_output_format(std::string_view text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected csv or json)");
}

struct OutputRecord {
    std::vector<std::pair<std::string, std::string>> params;  // echo of resolved parameters
    std::vector<std::string> schema;
    std::vector<std::vector<std::string>> rows;

    void write(std::ostream& os, OutputFormat format) const {
        format == OutputFormat::csv ? write_csv(os) : write_json(os);
    }

    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
};

namespace detail {

inline void write_csv_cell(std::ostream& os, const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) {
        os << cell;
        return;
    }
    os << '"';
    for (char c : cell) {
        if (c == '"') os << '"';
        os << c;
    }
    os << '"';
}

inline bool looks_like_json_number(const std::string& cell) {
    // -?digits[.digits][(e|E)[sign]digits], no leading zeros beyond "0".
    std::size_t i = 0;
    if (i < cell.size() && cell[i] == '-') ++i;
    std::size_t int_start = i;
    while (i < cell.size() && cell[i] >= '0' && cell[i] <= '9') ++i;
    if (i == int_start) return false;
    if (cell[int_start] == '0' && i - int_start > 1) return false;
    if (i < cell.size() && cell[i] == '.') {
        ++i;
        std::size_t frac_start = i;
        while (i < cell.size() && cell[i] >= '0' && cell[i] <= '9') ++i;
        if (i == frac_start) return false;
    }
    if (i < cell.size() && (cell[i] == 'e' || cell[i] == 'E')) {
        ++i;
        if (i < cell.size() && (cell[i] == '+' || cell[i] == '-')) ++i;
        std::size_t exp_start = i;
        while (i < cell.size() && cell[i] >= '0' && cell[i] <= '9') ++i;
        if (i == exp_start) return false;
    }
    return i == cell.size();
}

inline void write_json_string(std::ostream& os, const std::string& text) {
    os << '"';
    for (char c : text) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            case '\r': os << "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    os << buf;
                } else {
                    os << c;
                }
        }
    }
    os << '"';
}

inline void write_json_cell(std::ostream& os, const std::string& cell) {
    if (looks_like_json_number(cell)) {
        os << cell;
    } else {
        write_json_string(os, cell);
    }
}

}  // namespace detail

inline void OutputRecord::write_csv(std::ostream& os) const {
    for (const auto& [key, value] : params) {
        os << "# " << key << "=" << value << "\n";
    }
    for (std::size_t i = 0; i < schema.size(); ++i) {
        if (i) os << ',';
        detail::write_csv_cell(os, schema[i]);
    }
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            detail::write_csv_cell(os, row[i]);
        }
        os << "\n";
    }
}

inline void OutputRecord::write_json(std::ostream& os) const {
    os << "{\n  \"params\": {";
    for (std::size_t i = 0; i < params.size(); ++i) {
        os << (i ? ",\n    " : "\n    ");
        detail::write_json_string(os, params[i].first);
        os << ": ";
        detail::write_json_string(os, params[i].second);
    }
    os << "\n  },\n  \"schema\": [";
    for (std::size_t i = 0; i < schema.size(); ++i) {
        if (i) os << ", ";
        detail::write_json_string(os, schema[i]);
    }
    os << "],\n  \"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << (i ? ",\n    " : "\n    ") << "[";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) os << ", ";
            detail::write_json_cell(os, rows[i][j]);
        }
        os << "]";
    }
    os << "\n  ]\n}\n";
}

}  // namespace pqbern
