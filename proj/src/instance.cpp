#include "cover/instance.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

namespace cover {

long long Instance::nonzeros() const {
    long long total = 0;
    for (const auto& rows : rows_of_col) total += static_cast<long long>(rows.size());
    return total;
}

double Instance::density() const {
    if (num_rows == 0 || num_cols == 0) return 0.0;
    return static_cast<double>(nonzeros()) /
           (static_cast<double>(num_rows) * static_cast<double>(num_cols));
}

namespace {

// Whitespace-separated integer reader that remembers line numbers so parse
// errors can point at the offending token.
class TokenReader {
  public:
    TokenReader(std::istream& in, std::string source) : source_(std::move(source)) {
        std::ostringstream buf;
        buf << in.rdbuf();
        text_ = buf.str();
    }

    // Returns false at end of input.
    bool next(long long& value) {
        skip_whitespace();
        if (pos_ >= text_.size()) return false;
        std::size_t start = pos_;
        while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
        std::string_view token(text_.data() + start, pos_ - start);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            fail("expected an integer, got '" + std::string(token) + "'");
        }
        return true;
    }

    long long require(const char* what) {
        long long value;
        if (!next(value)) fail(std::string("unexpected end of input while reading ") + what);
        return value;
    }

    bool at_end() {
        skip_whitespace();
        return pos_ >= text_.size();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(source_ + ":" + std::to_string(line_) + ": " + msg);
    }

  private:
    static bool is_space(char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
    }

    void skip_whitespace() {
        while (pos_ < text_.size() && is_space(text_[pos_])) {
            if (text_[pos_] == '\n') ++line_;
            ++pos_;
        }
    }

    std::string source_;
    std::string text_;
    std::size_t pos_ = 0;
    long long line_ = 1;
};

}  // namespace

Instance parse_orlib(std::istream& in, const std::string& source_name) {
    TokenReader tok(in, source_name);

    long long m = tok.require("the row count");
    long long n = tok.require("the column count");
    if (m < 1 || n < 1) tok.fail("row and column counts must be positive");

    Instance inst;
    inst.num_rows = static_cast<int>(m);
    inst.num_cols = static_cast<int>(n);
    inst.costs.resize(inst.num_cols);
    for (int j = 0; j < inst.num_cols; ++j) {
        long long c = tok.require("a column cost");
        if (c < 1) tok.fail("cost of column " + std::to_string(j + 1) + " must be positive");
        inst.costs[j] = static_cast<int>(c);
    }

    inst.cols_of_row.resize(inst.num_rows);
    inst.rows_of_col.resize(inst.num_cols);
    for (int i = 0; i < inst.num_rows; ++i) {
        long long count = tok.require("a row's covering-column count");
        if (count < 1) tok.fail("row " + std::to_string(i + 1) + " has no covering column");
        auto& cols = inst.cols_of_row[i];
        cols.reserve(static_cast<std::size_t>(count));
        for (long long k = 0; k < count; ++k) {
            long long j = tok.require("a column index");
            if (j < 1 || j > n) {
                tok.fail("column index " + std::to_string(j) + " in row " + std::to_string(i + 1) +
                         " out of range [1, " + std::to_string(n) + "]");
            }
            cols.push_back(static_cast<int>(j - 1));
        }
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
            tok.fail("duplicate column index in row " + std::to_string(i + 1));
        }
        for (int j : cols) inst.rows_of_col[j].push_back(i);
    }

    if (!tok.at_end()) {
        long long extra;
        tok.next(extra);
        tok.fail("trailing token after the last row");
    }
    return inst;
}

Instance parse_orlib(const std::string& text, const std::string& source_name) {
    std::istringstream in(text);
    return parse_orlib(in, source_name);
}

Instance parse_orlib_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_orlib(in, path);
}

void serialize_orlib(const Instance& inst, std::ostream& out) {
    out << inst.num_rows << ' ' << inst.num_cols << '\n';
    for (int j = 0; j < inst.num_cols; ++j) {
        out << inst.costs[j] << ((j + 1) % 12 == 0 || j + 1 == inst.num_cols ? '\n' : ' ');
    }
    for (const auto& cols : inst.cols_of_row) {
        out << cols.size();
        for (int j : cols) out << ' ' << j + 1;
        out << '\n';
    }
}

std::string serialize_orlib(const Instance& inst) {
    std::ostringstream out;
    serialize_orlib(inst, out);
    return out.str();
}

Solution evaluate(const Instance& inst, const std::vector<int>& chosen) {
    Solution sol;
    sol.chosen = chosen;
    std::sort(sol.chosen.begin(), sol.chosen.end());
    sol.chosen.erase(std::unique(sol.chosen.begin(), sol.chosen.end()), sol.chosen.end());
    sol.cover_count.assign(inst.num_rows, 0);
    for (int j : sol.chosen) {
        if (j < 0 || j >= inst.num_cols) {
            throw std::out_of_range("column index " + std::to_string(j) + " out of range [0, " +
                                    std::to_string(inst.num_cols) + ")");
        }
        sol.cost += inst.costs[j];
        for (int i : inst.rows_of_col[j]) ++sol.cover_count[i];
    }
    sol.feasible = std::all_of(sol.cover_count.begin(), sol.cover_count.end(),
                               [](int c) { return c >= 1; });
    return sol;
}

Instance generate_random(int num_rows, int num_cols, double density, CostRange cost_range,
                         std::uint64_t seed) {
    if (num_rows < 1 || num_cols < 1) throw std::invalid_argument("instance dimensions must be positive");
    if (!(density > 0.0) || density > 1.0) throw std::invalid_argument("density must be in (0, 1]");
    if (cost_range.lo > cost_range.hi || cost_range.lo < 1) {
        throw std::invalid_argument("cost range must be a non-empty interval of positive integers");
    }

    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::uniform_int_distribution<int> cost_dist(cost_range.lo, cost_range.hi);
    std::uniform_real_distribution<double> cell(0.0, 1.0);
    std::uniform_int_distribution<int> any_col(0, num_cols - 1);

    Instance inst;
    inst.num_rows = num_rows;
    inst.num_cols = num_cols;
    inst.costs.resize(num_cols);
    for (int j = 0; j < num_cols; ++j) inst.costs[j] = cost_dist(rng);

    inst.cols_of_row.assign(num_rows, {});
    inst.rows_of_col.assign(num_cols, {});
    for (int i = 0; i < num_rows; ++i) {
        for (int j = 0; j < num_cols; ++j) {
            if (cell(rng) < density) inst.cols_of_row[i].push_back(j);
        }
        if (inst.cols_of_row[i].empty()) inst.cols_of_row[i].push_back(any_col(rng));
        for (int j : inst.cols_of_row[i]) inst.rows_of_col[j].push_back(i);
    }
    return inst;
}

}  // namespace cover
