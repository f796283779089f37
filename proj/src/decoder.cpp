#include "cover/decoder.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cover {

std::string to_string(Variant v) {
    switch (v) {
        case Variant::Basic: return "basic";
        case Variant::NewCost: return "newcost";
        case Variant::FourCriteria: return "4criteria";
        case Variant::Iga: return "iga";
    }
    return "?";
}

Variant variant_from_string(const std::string& name) {
    if (name == "basic") return Variant::Basic;
    if (name == "newcost") return Variant::NewCost;
    if (name == "4criteria") return Variant::FourCriteria;
    if (name == "iga") return Variant::Iga;
    throw std::invalid_argument("unknown variant '" + name +
                                "' (expected basic, newcost, 4criteria or iga)");
}

CostRankTable cost_rank_table(const Instance& inst) {
    CostRankTable table;
    table.rank_in_row.resize(inst.num_cols);
    for (int j = 0; j < inst.num_cols; ++j) {
        table.rank_in_row[j].resize(inst.rows_of_col[j].size());
    }

    // Position of each row within its columns' row lists, so ranks can be
    // written back without searching.
    std::vector<std::size_t> row_pos(inst.num_cols, 0);
    std::vector<int> sorted;
    for (int i = 0; i < inst.num_rows; ++i) {
        sorted.assign(inst.cols_of_row[i].begin(), inst.cols_of_row[i].end());
        std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
            return inst.costs[a] != inst.costs[b] ? inst.costs[a] < inst.costs[b] : a < b;
        });
        // Competition ranking: equal costs share the rank of the first of them.
        int rank = 0;
        for (std::size_t k = 0; k < sorted.size(); ++k) {
            if (k == 0 || inst.costs[sorted[k]] != inst.costs[sorted[k - 1]]) {
                rank = static_cast<int>(k) + 1;
            }
            int j = sorted[k];
            table.rank_in_row[j][row_pos[j]++] = rank;
        }
    }

    table.mean_rank_all.resize(inst.num_cols);
    for (int j = 0; j < inst.num_cols; ++j) {
        const auto& ranks = table.rank_in_row[j];
        if (ranks.empty()) {
            table.mean_rank_all[j] = 0.0;  // column covers nothing, never a candidate
            continue;
        }
        long long sum = std::accumulate(ranks.begin(), ranks.end(), 0LL);
        table.mean_rank_all[j] = static_cast<double>(sum) / static_cast<double>(ranks.size());
    }
    return table;
}

double score(const ScoreTerms& t, const std::array<double, 4>& w, Variant variant) {
    double s = w[1] * t.c2 + w[2] * t.c3;
    switch (variant) {
        case Variant::Basic:
            s -= w[0] * t.c1;
            break;
        case Variant::NewCost:
            s -= w[0] * (t.c1a + t.c1b);
            break;
        case Variant::FourCriteria:
        case Variant::Iga:
            s -= w[0] * (t.c1a + t.c1b);
            s += w[3] * t.c4a;
            break;
    }
    return s;
}

ScoreTerms score_terms(const Instance& inst, const CostRankTable& table, int col,
                       const std::vector<int>& cover_count) {
    ScoreTerms t;
    t.c1 = inst.costs[col];
    const auto& rows = inst.rows_of_col[col];
    const auto& ranks = table.rank_in_row[col];
    t.c3 = static_cast<int>(rows.size());
    long long uncovered_rank_sum = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (cover_count[rows[k]] == 0) {
            ++t.c2;
            uncovered_rank_sum += ranks[k];
        }
    }
    t.c4a = t.c3 - t.c2;
    t.c1a = t.c2 > 0 ? static_cast<double>(uncovered_rank_sum) / t.c2 : 0.0;
    t.c1b = table.mean_rank_all[col];
    return t;
}

Solution decode(const Instance& inst, const Genome& genome, Variant variant,
                const CostRankTable& table) {
    assert(static_cast<int>(genome.perm.size()) == inst.num_rows);

    Solution sol;
    sol.cover_count.assign(inst.num_rows, 0);
    sol.chosen.reserve(inst.num_rows);

    for (int row : genome.perm) {
        if (sol.cover_count[row] > 0) continue;

        int best_col = -1;
        double best_score = -std::numeric_limits<double>::infinity();
        // Candidates ascend by column index, so keeping only strict
        // improvements breaks ties first-come-first-served.
        for (int col : inst.cols_of_row[row]) {
            ScoreTerms t = score_terms(inst, table, col, sol.cover_count);
            double s = score(t, genome.weights, variant);
            if (s > best_score) {
                best_score = s;
                best_col = col;
            }
        }
        assert(best_col >= 0);  // instance invariant: every row is coverable

        sol.chosen.push_back(best_col);
        sol.cost += inst.costs[best_col];
        for (int r : inst.rows_of_col[best_col]) ++sol.cover_count[r];
    }

    std::sort(sol.chosen.begin(), sol.chosen.end());
    sol.feasible = true;
    return sol;
}

}  // namespace cover
