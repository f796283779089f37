#pragma once

#include <string>

#include "cover/genome.hpp"
#include "cover/instance.hpp"

namespace cover {

/// Scoring variant used by the decoder. Iga scores exactly like FourCriteria;
/// it differs only in letting the evolution loop pick the crossover from the
/// genome's selector gene.
enum class Variant { Basic, NewCost, FourCriteria, Iga };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& name);

/// Score ingredients for one candidate column at one selection step.
struct ScoreTerms {
    int c1 = 0;       // column cost
    double c1a = 0.0; // mean cost rank over the uncovered rows it covers
    double c1b = 0.0; // mean cost rank over all rows it covers
    int c2 = 0;       // uncovered rows it covers (>= 1 for any candidate)
    int c3 = 0;       // rows it covers in total
    int c4a = 0;      // rows it covers that are already covered (c3 - c2)
};

/// Per-instance table of cost ranks, computed once and shared by every
/// decode. rank_in_row[j][k] is the competition rank of column j's cost
/// among all columns covering row rows_of_col[j][k] (1 = cheapest; equal
/// costs share the smallest rank). mean_rank_all[j] is the c1b value of
/// column j, which does not depend on coverage.
struct CostRankTable {
    std::vector<std::vector<int>> rank_in_row;
    std::vector<double> mean_rank_all;
};

CostRankTable cost_rank_table(const Instance& inst);

/// Weighted candidate score:
///   Basic                  w2*C2 + w3*C3 - w1*C1
///   NewCost                w2*C2 + w3*C3 - w1*(C1a + C1b)
///   FourCriteria and Iga   w2*C2 + w3*C3 - w1*(C1a + C1b) + w4*C4a
double score(const ScoreTerms& terms, const std::array<double, 4>& weights, Variant variant);

/// Terms for candidate column `col` given the current cover counts.
ScoreTerms score_terms(const Instance& inst, const CostRankTable& table, int col,
                       const std::vector<int>& cover_count);

/// Walks the genome's row permutation, skipping rows already covered, and
/// for each uncovered row adds the covering column with the highest score
/// (ties go to the lowest column index). The result covers every row and
/// uses at most m columns. No hill-climbing happens here.
Solution decode(const Instance& inst, const Genome& genome, Variant variant,
                const CostRankTable& table);

}  // namespace cover
