#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qnr {

// Tabular result of a parameter sweep: one named series per column, rows
// ordered by the swept variable ascending. The metadata block travels with
// the table through CSV and JSON so any output can be reproduced exactly.
struct SweepResult {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata; // insertion order kept

    void set_meta(std::string key, std::string value);
    const std::string* find_meta(std::string_view key) const;

    // CSV: "# key = value" metadata lines, a comma-separated header row, then
    // one row per line. LF line endings, full precision by default.
    void write_csv(std::ostream& out, int significant_digits = 17) const;
    std::string to_csv(int significant_digits = 17) const;

    // One JSON object: {"metadata": {...}, "columns": [...], "rows": [[...]]}.
    std::string to_json(int significant_digits = 17) const;

    static SweepResult parse_csv(std::istream& in);
    static SweepResult parse_csv_text(std::string_view text);
};

// Log-spaced grid from lo to hi inclusive, points_per_decade steps per
// decade. Endpoints are snapped exactly to lo/hi.
std::vector<double> log_grid(double lo, double hi, int points_per_decade);

// Fixed-width scientific formatting used for all numeric emission; 17
// significant digits round-trip a double exactly.
std::string format_double(double value, int significant_digits = 17);

} // namespace qnr
