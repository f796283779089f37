#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace cover {

/// Thrown on malformed instance input; the message carries file/line context.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Sparse 0-1 cover matrix held as a dual adjacency (rows per column and
/// columns per row) plus per-column costs.
///
/// Indices are 0-based internally. The OR-Library text format is 1-based;
/// the translation happens only inside parse/serialize.
struct Instance {
    int num_rows = 0;
    int num_cols = 0;
    std::vector<int> costs;                     // c_j >= 1
    std::vector<std::vector<int>> cols_of_row;  // sorted, no duplicates
    std::vector<std::vector<int>> rows_of_col;  // exact transpose of cols_of_row

    long long nonzeros() const;
    double density() const;  // nonzeros / (m*n)

    bool operator==(const Instance&) const = default;
};

/// A (not necessarily feasible) selection of columns with its evaluation.
struct Solution {
    std::vector<int> chosen;       // sorted column indices
    std::vector<int> cover_count;  // per row: number of chosen columns covering it
    int cost = 0;
    bool feasible = false;  // every cover_count entry >= 1
};

/// Parses the OR-Library SCP layout: m n, then n costs, then per row a count
/// followed by that many 1-based column indices. Any trailing non-whitespace
/// token is an error.
Instance parse_orlib(std::istream& in, const std::string& source_name = "<input>");
Instance parse_orlib(const std::string& text, const std::string& source_name = "<input>");
Instance parse_orlib_file(const std::string& path);

/// Writes the instance back in OR-Library layout (1-based indices).
void serialize_orlib(const Instance& inst, std::ostream& out);
std::string serialize_orlib(const Instance& inst);

/// Evaluates a column selection: exact cover counts, total cost, feasibility.
/// Duplicate indices are collapsed; indices out of [0, n) throw.
Solution evaluate(const Instance& inst, const std::vector<int>& chosen);

struct CostRange {
    int lo = 1;
    int hi = 100;
};

/// Random instance: each cell set with probability `density`, then every
/// uncovered row is repaired with one uniformly chosen column. Costs are
/// uniform in cost_range. Deterministic in seed.
Instance generate_random(int num_rows, int num_cols, double density, CostRange cost_range,
                         std::uint64_t seed);

}  // namespace cover
