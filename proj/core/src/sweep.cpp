#include "qnr/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qnr/errors.hpp"

namespace qnr {

std::string format_double(double value, int significant_digits) {
    if (significant_digits < 1) significant_digits = 1;
    if (significant_digits > 17) significant_digits = 17;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value);
    return buf;
}

void SweepResult::set_meta(std::string key, std::string value) {
    for (auto& kv : metadata) {
        if (kv.first == key) {
            kv.second = std::move(value);
            return;
        }
    }
    metadata.emplace_back(std::move(key), std::move(value));
}

const std::string* SweepResult::find_meta(std::string_view key) const {
    for (const auto& kv : metadata) {
        if (kv.first == key) return &kv.second;
    }
    return nullptr;
}

void SweepResult::write_csv(std::ostream& out, int significant_digits) const {
    for (const auto& [key, value] : metadata) {
        out << "# " << key << " = " << value << "\n";
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out << ',';
        out << columns[c];
    }
    out << '\n';
    for (const auto& row : rows) {
        if (row.size() != columns.size()) {
            throw config_error("SweepResult: row width does not match column count");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << format_double(row[c], significant_digits);
        }
        out << '\n';
    }
}

std::string SweepResult::to_csv(int significant_digits) const {
    std::ostringstream oss;
    write_csv(oss, significant_digits);
    return oss.str();
}

std::string SweepResult::to_json(int significant_digits) const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : metadata) meta[key] = value;
    j["metadata"] = std::move(meta);
    j["columns"] = columns;
    auto jrows = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        auto jrow = nlohmann::ordered_json::array();
        for (double v : row) {
            // Route through the shared formatter so JSON and CSV agree digit
            // for digit.
            jrow.push_back(nlohmann::ordered_json::parse(format_double(v, significant_digits)));
        }
        jrows.push_back(std::move(jrow));
    }
    j["rows"] = std::move(jrows);
    return j.dump(2) + "\n";
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

double parse_number(const std::string& token, std::size_t line_no) {
    const char* begin = token.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw config_error("CSV line " + std::to_string(line_no) +
                           ": not a number: '" + token + "'");
    }
    return v;
}

} // namespace

SweepResult SweepResult::parse_csv(std::istream& in) {
    SweepResult result;
    std::string line;
    bool have_header = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::string body = trim(std::string_view(line).substr(1));
            std::size_t eq = body.find('=');
            if (eq != std::string::npos) {
                result.metadata.emplace_back(trim(std::string_view(body).substr(0, eq)),
                                             trim(std::string_view(body).substr(eq + 1)));
            }
            continue;
        }
        std::vector<std::string> cells;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = line.find(',', pos);
            cells.push_back(trim(std::string_view(line).substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (!have_header) {
            result.columns = std::move(cells);
            have_header = true;
            continue;
        }
        if (cells.size() != result.columns.size()) {
            throw config_error("CSV line " + std::to_string(line_no) +
                               ": expected " + std::to_string(result.columns.size()) +
                               " cells, got " + std::to_string(cells.size()));
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& cell : cells) row.push_back(parse_number(cell, line_no));
        result.rows.push_back(std::move(row));
    }
    if (!have_header) throw config_error("CSV: missing header row");
    return result;
}

SweepResult SweepResult::parse_csv_text(std::string_view text) {
    std::istringstream iss{std::string(text)};
    return parse_csv(iss);
}

std::vector<double> log_grid(double lo, double hi, int points_per_decade) {
    if (!(lo > 0.0) || !(hi > 0.0) || !(hi >= lo)) {
        throw std::domain_error("log_grid: need 0 < lo <= hi");
    }
    if (points_per_decade < 1) {
        throw config_error("log_grid: points_per_decade must be >= 1");
    }
    if (lo == hi) return {lo};
    const double decades = std::log10(hi / lo);
    const auto n = static_cast<std::size_t>(std::lround(decades * points_per_decade));
    std::vector<double> grid;
    grid.reserve(n + 1);
    grid.push_back(lo);
    for (std::size_t i = 1; i < n; ++i) {
        grid.push_back(lo * std::pow(10.0, static_cast<double>(i) / points_per_decade));
    }
    grid.push_back(hi); // snap the endpoint exactly
    return grid;
}

} // namespace qnr
