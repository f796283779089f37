#include "cover/genome.hpp"

#include <numeric>
#include <stdexcept>

namespace cover {

std::string to_string(CrossoverKind kind) {
    switch (kind) {
        case CrossoverKind::OnePoint: return "1point";
        case CrossoverKind::Pux: return "pux";
        case CrossoverKind::Pmx: return "pmx";
    }
    return "?";
}

CrossoverKind crossover_from_string(const std::string& name) {
    if (name == "1point") return CrossoverKind::OnePoint;
    if (name == "pux") return CrossoverKind::Pux;
    if (name == "pmx") return CrossoverKind::Pmx;
    throw std::invalid_argument("unknown crossover '" + name + "' (expected 1point, pux or pmx)");
}

Genome random_genome(int num_rows, WeightRange weight_range, Rng& rng) {
    if (num_rows < 1) throw std::invalid_argument("num_rows must be >= 1");
    Genome g;
    g.perm.resize(num_rows);
    std::iota(g.perm.begin(), g.perm.end(), 0);
    for (int k = num_rows - 1; k > 0; --k) {
        std::uniform_int_distribution<int> pick(0, k);
        std::swap(g.perm[k], g.perm[pick(rng)]);
    }
    std::uniform_real_distribution<double> weight(weight_range.lo, weight_range.hi);
    for (double& w : g.weights) w = weight(rng);
    std::uniform_int_distribution<int> kind(0, 2);
    g.crossover_gene = static_cast<CrossoverKind>(kind(rng));
    return g;
}

Genome swap_mutate(const Genome& g, double rate, Rng& rng) {
    Genome out = g;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (coin(rng) >= rate) return out;
    const int m = static_cast<int>(out.perm.size());
    if (m < 2) return out;
    std::uniform_int_distribution<int> first(0, m - 1);
    std::uniform_int_distribution<int> second(0, m - 2);
    int i = first(rng);
    int j = second(rng);
    if (j >= i) ++j;  // distinct positions, uniform over all pairs
    std::swap(out.perm[i], out.perm[j]);
    return out;
}

Genome mutate_auxiliary(const Genome& g, double rate, WeightRange weight_range, Rng& rng) {
    Genome out = g;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_real_distribution<double> weight(weight_range.lo, weight_range.hi);
    for (double& w : out.weights) {
        if (coin(rng) < rate) w = weight(rng);
    }
    if (coin(rng) < rate) {
        std::uniform_int_distribution<int> kind(0, 2);
        out.crossover_gene = static_cast<CrossoverKind>(kind(rng));
    }
    return out;
}

}  // namespace cover
