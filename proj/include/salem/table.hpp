#pragma once
// Merged, deduplicated results table: "2d tau 1 c_1 ... c_d" per line.

#include "salem/hunt.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace salem {

struct TableRow {
    int two_d = 0;
    std::string tau;
    std::vector<Integer> half_coeffs;

    friend bool operator<(const TableRow& a, const TableRow& b) {
        return std::tie(a.tau, a.two_d, a.half_coeffs) < std::tie(b.tau, b.two_d, b.half_coeffs);
    }
};

inline constexpr const char* kTableHeader = "2d salem_number coefficients";

/// Distinct rows (keyed on the full coefficient list) sorted by tau.
inline std::vector<TableRow> build_table(const std::vector<SalemRecord>& records) {
    std::set<std::vector<Integer>> seen;
    std::vector<TableRow> rows;
    for (const auto& r : records) {
        if (!seen.insert(r.full_coeffs).second) continue;
        rows.push_back(TableRow{r.two_d, r.tau, r.half_coeffs});
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

inline std::string format_row(const TableRow& row) {
    std::string line = std::to_string(row.two_d) + " " + row.tau;
    for (const auto& c : row.half_coeffs) line += " " + c.get_str();
    return line;
}

inline void write_table(std::ostream& os, const std::vector<TableRow>& rows) {
    os << kTableHeader << "\n";
    for (const auto& row : rows) os << format_row(row) << "\n";
}

}  // namespace salem
