#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cover {

/// Crossover selected by the self-adaptive gene (or fixed by configuration).
enum class CrossoverKind { OnePoint = 0, Pux = 1, Pmx = 2 };

std::string to_string(CrossoverKind kind);
CrossoverKind crossover_from_string(const std::string& name);

struct WeightRange {
    double lo = 0.0;
    double hi = 100.0;
};

using Rng = std::mt19937;

/// GA search representation: a row permutation plus the self-adaptive
/// criterion weights w1..w4 and the crossover-selector gene.
///
/// Every genome carries all four weights; the Basic and New Cost score
/// variants simply ignore w4, so one genome type serves every variant.
struct Genome {
    std::vector<int> perm;            // permutation of 0..m-1
    std::array<double, 4> weights{};  // w1, w2, w3, w4
    CrossoverKind crossover_gene = CrossoverKind::Pux;

    bool operator==(const Genome&) const = default;
};

/// A genome with its evaluated fitness and population bookkeeping.
/// Fitness is the solution cost after hill-climbing; lower is better.
/// Ranks run from population_size (fittest) down to 1, fitness ties going
/// to the member with the lower birth index.
struct RatedGenome {
    Genome genome;
    int fitness = 0;
    int rank = 0;
    long birth_index = 0;
};

/// Uniform random genome: Fisher-Yates permutation, weights uniform in
/// weight_range, crossover gene uniform over the three kinds.
Genome random_genome(int num_rows, WeightRange weight_range, Rng& rng);

/// With probability `rate`, exchanges two distinct positions of the
/// permutation; otherwise returns the genome unchanged.
Genome swap_mutate(const Genome& g, double rate, Rng& rng);

/// Each weight independently resets to uniform(weight_range) with
/// probability `rate`; the crossover gene independently resets to a uniform
/// random kind with the same probability.
Genome mutate_auxiliary(const Genome& g, double rate, WeightRange weight_range, Rng& rng);

}  // namespace cover
