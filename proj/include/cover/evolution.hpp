#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <utility>

#include "cover/hill_climb.hpp"

namespace cover {

/// Full configuration of one GA run. Defaults are the standard strategy
/// settings: population 200, generational with 20% elitism, rank selection,
/// PUX with bias 0.66 unless self-selected, 1.5% swap mutation, stop after
/// 50 generations without improvement.
struct GaConfig {
    int population_size = 200;
    double elite_fraction = 0.20;
    double mutation_rate = 0.015;
    double pux_bias = 0.66;
    int stall_limit = 50;
    Variant variant = Variant::Iga;
    WeightRange weight_range{0.0, 100.0};
    std::optional<std::array<double, 4>> fixed_weights;
    std::optional<CrossoverKind> fixed_crossover;
    std::uint64_t seed = 0;
    int max_generations = 10000;  // safety cap

    void validate() const;  // throws std::invalid_argument
};

struct RunResult {
    Solution best_solution;
    int best_cost = 0;
    int generations_run = 0;
    long evaluations = 0;
    std::chrono::duration<double, std::milli> elapsed{};
    Genome best_genome;
    /// Crossovers used per generation, indexed by CrossoverKind; one count
    /// per parent pairing.
    std::vector<std::array<int, 3>> crossover_usage;
    /// Best fitness in the population after each generation; entry 0 is the
    /// initial population. Elitism makes this non-increasing.
    std::vector<int> best_by_generation;
};

/// Sorts by fitness (ascending cost), ties to the lower birth index, and
/// assigns ranks population_size (fittest) down to 1.
void rank_population(std::vector<RatedGenome>& population);

/// Roulette selection over ranks: member with rank r is drawn with
/// probability r / sum of ranks. With replacement.
const RatedGenome& rank_select(const std::vector<RatedGenome>& ranked, Rng& rng);

using Perm = std::vector<int>;
using PermPair = std::pair<Perm, Perm>;

/// Order-based one-point crossover: child1 keeps p1's prefix up to the cut
/// and fills the rest with the missing genes in p2's relative order; child2
/// is symmetric. The positional variant would break the permutation
/// invariant, so it is not used.
PermPair crossover_onepoint(const Perm& p1, const Perm& p2, Rng& rng);
PermPair crossover_onepoint_at(const Perm& p1, const Perm& p2, int cut);

/// Classic two-cut PMX: the segment [lo, hi) is copied from the first
/// parent; every other position takes the second parent's gene, chased
/// through the segment mapping until unconflicted.
PermPair crossover_pmx(const Perm& p1, const Perm& p2, Rng& rng);
PermPair crossover_pmx_at(const Perm& p1, const Perm& p2, int lo, int hi);

/// Permutation uniform-like crossover: a biased binary mask (P(1) = bias)
/// marks positions kept from the first parent; the remaining positions are
/// filled left to right with the missing genes in the other parent's
/// relative order. child2 applies the same mask to p2.
PermPair crossover_pux(const Perm& p1, const Perm& p2, double bias, Rng& rng);
PermPair crossover_pux_masked(const Perm& p1, const Perm& p2, const std::vector<char>& mask);

struct AuxGenes {
    std::array<double, 4> weights;
    CrossoverKind crossover_gene;
};

/// Weight genes do not undergo normal crossover: both children receive the
/// rank-weighted average of the parents. The crossover gene of both children
/// comes from the parent with the higher rank (tie: the first parent).
AuxGenes cross_auxiliary(const RatedGenome& p1, const RatedGenome& p2);

using ProgressFn = std::function<void(int generation, int best_cost, int stall)>;

/// Runs the full generational GA on one instance. Deterministic in
/// config.seed (elapsed time aside).
RunResult run(const Instance& inst, const GaConfig& config, const ProgressFn& progress = {});

}  // namespace cover
