#include "cover/evolution.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cover {

void GaConfig::validate() const {
    if (population_size < 2) throw std::invalid_argument("population_size must be >= 2");
    if (!(elite_fraction > 0.0) || !(elite_fraction < 1.0)) {
        throw std::invalid_argument("elite_fraction must be in (0, 1)");
    }
    if (mutation_rate < 0.0 || mutation_rate > 1.0) {
        throw std::invalid_argument("mutation_rate must be in [0, 1]");
    }
    if (!(pux_bias > 0.0) || !(pux_bias < 1.0)) {
        throw std::invalid_argument("pux_bias must be in (0, 1)");
    }
    if (stall_limit < 1) throw std::invalid_argument("stall_limit must be >= 1");
    if (max_generations < 1) throw std::invalid_argument("max_generations must be >= 1");
    if (!(weight_range.lo <= weight_range.hi) || weight_range.lo < 0.0) {
        throw std::invalid_argument("weight_range must satisfy 0 <= lo <= hi");
    }
}

void rank_population(std::vector<RatedGenome>& population) {
    std::sort(population.begin(), population.end(), [](const RatedGenome& a, const RatedGenome& b) {
        if (a.fitness != b.fitness) return a.fitness < b.fitness;
        return a.birth_index < b.birth_index;
    });
    const int n = static_cast<int>(population.size());
    for (int i = 0; i < n; ++i) population[i].rank = n - i;
}

const RatedGenome& rank_select(const std::vector<RatedGenome>& ranked, Rng& rng) {
    if (ranked.empty()) throw std::invalid_argument("rank_select on empty population");
    const long n = static_cast<long>(ranked.size());
    const long total = n * (n + 1) / 2;
    std::uniform_int_distribution<long> wheel(1, total);
    long ticket = wheel(rng);
    for (const RatedGenome& member : ranked) {
        ticket -= member.rank;
        if (ticket <= 0) return member;
    }
    return ranked.back();  // unreachable when ranks are 1..n
}

namespace {

// Appends the genes of `source` that are not yet placed in `child`,
// preserving their order in `source`.
void fill_by_relative_order(Perm& child, std::vector<char>& placed, const Perm& source,
                            std::size_t from) {
    std::size_t write = from;
    for (int gene : source) {
        if (placed[gene]) continue;
        while (write < child.size() && child[write] != -1) ++write;
        assert(write < child.size());
        child[write] = gene;
        placed[gene] = 1;
    }
}

Perm onepoint_child(const Perm& keep, const Perm& order, int cut) {
    Perm child(keep.size(), -1);
    std::vector<char> placed(keep.size(), 0);
    for (int k = 0; k < cut; ++k) {
        child[k] = keep[k];
        placed[keep[k]] = 1;
    }
    fill_by_relative_order(child, placed, order, cut);
    return child;
}

Perm pmx_child(const Perm& seg_parent, const Perm& other, int lo, int hi) {
    const int m = static_cast<int>(seg_parent.size());
    Perm child(m, -1);
    std::vector<int> pos_in_segment(m, -1);  // gene -> its position in the copied segment
    for (int k = lo; k < hi; ++k) {
        child[k] = seg_parent[k];
        pos_in_segment[seg_parent[k]] = k;
    }
    for (int k = 0; k < m; ++k) {
        if (k >= lo && k < hi) continue;
        int gene = other[k];
        while (pos_in_segment[gene] != -1) gene = other[pos_in_segment[gene]];
        child[k] = gene;
    }
    return child;
}

Perm pux_child(const Perm& keep, const Perm& order, const std::vector<char>& mask) {
    Perm child(keep.size(), -1);
    std::vector<char> placed(keep.size(), 0);
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (mask[k]) {
            child[k] = keep[k];
            placed[keep[k]] = 1;
        }
    }
    fill_by_relative_order(child, placed, order, 0);
    return child;
}

}  // namespace

PermPair crossover_onepoint_at(const Perm& p1, const Perm& p2, int cut) {
    return {onepoint_child(p1, p2, cut), onepoint_child(p2, p1, cut)};
}

PermPair crossover_onepoint(const Perm& p1, const Perm& p2, Rng& rng) {
    const int m = static_cast<int>(p1.size());
    if (m < 2) return {p1, p2};
    std::uniform_int_distribution<int> cut(1, m - 1);
    return crossover_onepoint_at(p1, p2, cut(rng));
}

PermPair crossover_pmx_at(const Perm& p1, const Perm& p2, int lo, int hi) {
    return {pmx_child(p1, p2, lo, hi), pmx_child(p2, p1, lo, hi)};
}

PermPair crossover_pmx(const Perm& p1, const Perm& p2, Rng& rng) {
    const int m = static_cast<int>(p1.size());
    if (m < 2) return {p1, p2};
    std::uniform_int_distribution<int> point(0, m);
    int lo = point(rng);
    int hi = point(rng);
    if (lo > hi) std::swap(lo, hi);
    return crossover_pmx_at(p1, p2, lo, hi);
}

PermPair crossover_pux_masked(const Perm& p1, const Perm& p2, const std::vector<char>& mask) {
    return {pux_child(p1, p2, mask), pux_child(p2, p1, mask)};
}

PermPair crossover_pux(const Perm& p1, const Perm& p2, double bias, Rng& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<char> mask(p1.size());
    for (auto& bit : mask) bit = coin(rng) < bias ? 1 : 0;
    return crossover_pux_masked(p1, p2, mask);
}

AuxGenes cross_auxiliary(const RatedGenome& p1, const RatedGenome& p2) {
    AuxGenes aux;
    const double r1 = p1.rank;
    const double r2 = p2.rank;
    for (std::size_t k = 0; k < aux.weights.size(); ++k) {
        aux.weights[k] = (r1 * p1.genome.weights[k] + r2 * p2.genome.weights[k]) / (r1 + r2);
    }
    aux.crossover_gene =
        p2.rank > p1.rank ? p2.genome.crossover_gene : p1.genome.crossover_gene;
    return aux;
}

RunResult run(const Instance& inst, const GaConfig& config, const ProgressFn& progress) {
    config.validate();
    const auto started = std::chrono::steady_clock::now();

    Rng rng(static_cast<Rng::result_type>(config.seed));
    const CostRankTable table = cost_rank_table(inst);
    const int pop_size = config.population_size;
    const int elite_count =
        static_cast<int>(std::ceil(config.elite_fraction * pop_size));

    RunResult result;
    long next_birth = 0;

    auto apply_fixed_weights = [&](Genome& g) {
        if (config.fixed_weights) g.weights = *config.fixed_weights;
    };

    std::vector<RatedGenome> population;
    population.reserve(pop_size);
    for (int i = 0; i < pop_size; ++i) {
        RatedGenome member;
        member.genome = random_genome(inst.num_rows, config.weight_range, rng);
        apply_fixed_weights(member.genome);
        member.fitness = fitness(inst, member.genome, config.variant, table).cost;
        member.birth_index = next_birth++;
        population.push_back(std::move(member));
        ++result.evaluations;
    }
    rank_population(population);

    auto best_of = [](const std::vector<RatedGenome>& pop) -> const RatedGenome& {
        return pop.front();  // ranked: fittest first
    };

    int best_ever = best_of(population).fitness;
    Genome best_genome = best_of(population).genome;
    result.best_by_generation.push_back(best_ever);

    int stall = 0;
    int generation = 0;
    while (stall < config.stall_limit && generation < config.max_generations) {
        ++generation;

        std::vector<RatedGenome> next;
        next.reserve(pop_size);
        next.assign(population.begin(), population.begin() + elite_count);

        std::array<int, 3> usage{0, 0, 0};
        while (static_cast<int>(next.size()) < pop_size) {
            const RatedGenome& parent1 = rank_select(population, rng);
            const RatedGenome& parent2 = rank_select(population, rng);

            AuxGenes aux = cross_auxiliary(parent1, parent2);
            CrossoverKind op = config.fixed_crossover.value_or(
                config.variant == Variant::Iga ? aux.crossover_gene : CrossoverKind::Pux);
            ++usage[static_cast<int>(op)];

            PermPair perms;
            switch (op) {
                case CrossoverKind::OnePoint:
                    perms = crossover_onepoint(parent1.genome.perm, parent2.genome.perm, rng);
                    break;
                case CrossoverKind::Pux:
                    perms = crossover_pux(parent1.genome.perm, parent2.genome.perm,
                                          config.pux_bias, rng);
                    break;
                case CrossoverKind::Pmx:
                    perms = crossover_pmx(parent1.genome.perm, parent2.genome.perm, rng);
                    break;
            }

            auto add_child = [&](Perm&& perm) {
                Genome child;
                child.perm = std::move(perm);
                child.weights = aux.weights;
                child.crossover_gene = aux.crossover_gene;
                child = swap_mutate(child, config.mutation_rate, rng);
                child = mutate_auxiliary(child, config.mutation_rate, config.weight_range, rng);
                apply_fixed_weights(child);

                RatedGenome member;
                member.genome = std::move(child);
                member.fitness = fitness(inst, member.genome, config.variant, table).cost;
                member.birth_index = next_birth++;
                next.push_back(std::move(member));
                ++result.evaluations;
            };

            add_child(std::move(perms.first));
            if (static_cast<int>(next.size()) < pop_size) add_child(std::move(perms.second));
        }

        population = std::move(next);
        rank_population(population);
        result.crossover_usage.push_back(usage);

        const RatedGenome& best = best_of(population);
        if (best.fitness < best_ever) {
            best_ever = best.fitness;
            best_genome = best.genome;
            stall = 0;
        } else {
            ++stall;
        }
        result.best_by_generation.push_back(best.fitness);
        if (progress) progress(generation, best_ever, stall);
    }

    result.generations_run = generation;
    FitnessResult best_fit = fitness(inst, best_genome, config.variant, table);
    result.best_solution = std::move(best_fit.solution);
    result.best_cost = best_fit.cost;
    result.best_genome = std::move(best_genome);
    assert(result.best_cost == best_ever);
    result.elapsed = std::chrono::steady_clock::now() - started;
    return result;
}

}  // namespace cover
