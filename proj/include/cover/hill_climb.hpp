#pragma once

#include "cover/decoder.hpp"

namespace cover {

/// One descending-cost pass over the chosen columns: a column whose rows are
/// all covered at least twice at the moment it is examined is dropped and the
/// cover counts updated immediately. Cost ties are examined higher column
/// index first. The input must be feasible; the output is feasible,
/// irredundant and never costlier.
Solution remove_redundant(const Instance& inst, const Solution& solution);

struct FitnessResult {
    Solution solution;  // post-climb, feasible and irredundant
    int cost = 0;
};

/// The fitness the GA actually sees: decode, then remove redundant columns.
FitnessResult fitness(const Instance& inst, const Genome& genome, Variant variant,
                      const CostRankTable& table);

}  // namespace cover
