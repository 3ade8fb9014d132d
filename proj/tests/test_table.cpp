#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pqbern/table.hpp"

using pqbern::OutputRecord;

namespace {

OutputRecord sample_record() {
    OutputRecord rec;
    rec.params = {{"command", "eval"}, {"function", "poly:1,0,-2"}, {"p", "0.90000000000000002"}};
    rec.schema = {"x", "f", "S_f", "quoted,name"};
    rec.rows = {{"0", "1", "0.99999999999999989", "a\"b"},
                {"0.5", "0.5", "0.5", "plain"},
                {"1", "-1", "-0.99999999999999989", "-0"}};
    return rec;
}

// Minimal RFC-4180 reader for round-trip checks: skips '#' echo lines,
// handles quoted cells with doubled quotes.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            ++i;
            continue;
        }
        std::vector<std::string> row;
        std::string cell;
        bool quoted = false;
        for (; i < text.size(); ++i) {
            const char c = text[i];
            if (quoted) {
                if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else if (c == '"') {
                    quoted = false;
                } else {
                    cell += c;
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                row.push_back(std::move(cell));
                cell.clear();
            } else if (c == '\n') {
                ++i;
                break;
            } else {
                cell += c;
            }
        }
        row.push_back(std::move(cell));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

TEST_CASE("format_double17 round-trips doubles exactly") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<double> values = {0.0, 1.0, -1.0, 0.1, 1.0 / 3.0, 6.25e-5, 1e300, 5e-324};
    for (int i = 0; i < 500; ++i) values.push_back(uni(rng));
    for (double v : values) {
        const std::string text = pqbern::format_double17(v);
        CHECK(std::strtod(text.c_str(), nullptr) == v);
    }
}

TEST_CASE("csv output round-trips schema and rows") {
    const auto rec = sample_record();
    std::ostringstream os;
    rec.write_csv(os);
    const std::string text = os.str();
    CHECK(text.find("\r") == std::string::npos);  // LF only
    CHECK(text.find("# command=eval\n") == 0);

    const auto parsed = parse_csv(text);
    REQUIRE(parsed.size() == rec.rows.size() + 1);  // header + rows
    CHECK(parsed[0] == rec.schema);
    for (std::size_t i = 0; i < rec.rows.size(); ++i) CHECK(parsed[i + 1] == rec.rows[i]);
}

TEST_CASE("json output parses and carries the same cells as csv") {
    const auto rec = sample_record();
    std::ostringstream os;
    rec.write_json(os);
    const auto doc = nlohmann::json::parse(os.str());

    REQUIRE(doc.contains("params"));
    REQUIRE(doc.contains("schema"));
    REQUIRE(doc.contains("rows"));
    CHECK(doc["params"]["command"] == "eval");
    REQUIRE(doc["schema"].size() == rec.schema.size());
    REQUIRE(doc["rows"].size() == rec.rows.size());

    for (std::size_t i = 0; i < rec.rows.size(); ++i) {
        for (std::size_t j = 0; j < rec.rows[i].size(); ++j) {
            const auto& cell = doc["rows"][i][j];
            if (cell.is_string()) {
                CHECK(cell.get<std::string>() == rec.rows[i][j]);
            } else {
                // Numeric cells must carry the identical literal value.
                CHECK(cell.get<double>() == std::strtod(rec.rows[i][j].c_str(), nullptr));
            }
        }
    }
}

TEST_CASE("exact cells serialize as fractions, never as json numbers") {
    OutputRecord rec;
    rec.schema = {"x", "b_0"};
    rec.rows = {{pqbern::format_cell(pqbern::Rational(1, 3)), pqbern::format_cell(pqbern::Rational(2))}};
    CHECK(rec.rows[0][0] == "1/3");
    CHECK(rec.rows[0][1] == "2");
    std::ostringstream os;
    rec.write_json(os);
    const auto doc = nlohmann::json::parse(os.str());
    CHECK(doc["rows"][0][0].is_string());
    CHECK(doc["rows"][0][1].is_number());  // integers are valid json numbers
}

TEST_CASE("format parsing") {
    CHECK(pqbern::parse_output_format("csv") == pqbern::OutputFormat::csv);
    CHECK(pqbern::parse_output_format("json") == pqbern::OutputFormat::json);
    CHECK_THROWS_AS(pqbern::parse_output_format("yaml"), std::invalid_argument);
}
