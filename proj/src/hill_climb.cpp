#include "cover/hill_climb.hpp"

#include <algorithm>
#include <stdexcept>

namespace cover {

Solution remove_redundant(const Instance& inst, const Solution& solution) {
    if (!solution.feasible) {
        throw std::logic_error("remove_redundant requires a feasible solution");
    }

    std::vector<int> order = solution.chosen;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (inst.costs[a] != inst.costs[b]) return inst.costs[a] > inst.costs[b];
        return a > b;  // cost ties: higher column index first
    });

    Solution out = solution;
    std::vector<char> removed(inst.num_cols, 0);
    for (int col : order) {
        const auto& rows = inst.rows_of_col[col];
        bool redundant = std::all_of(rows.begin(), rows.end(),
                                     [&](int r) { return out.cover_count[r] >= 2; });
        if (!redundant) continue;
        removed[col] = 1;
        out.cost -= inst.costs[col];
        for (int r : rows) --out.cover_count[r];
    }
    std::erase_if(out.chosen, [&](int col) { return removed[col]; });
    return out;
}

FitnessResult fitness(const Instance& inst, const Genome& genome, Variant variant,
                      const CostRankTable& table) {
    Solution climbed = remove_redundant(inst, decode(inst, genome, variant, table));
    int cost = climbed.cost;
    return {std::move(climbed), cost};
}

}  // namespace cover
