// Command-line front end: solve | bench | gen | oracle.
// Exit codes: 0 success, 1 usage error, 2 I/O or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cover/bench.hpp"
#include "cover/optima.hpp"

namespace {

struct GaFlags {
    std::string instance_path;
    std::string variant = "iga";
    std::uint64_t seed = 1;
    int population = 200;
    double elite_fraction = 0.2;
    double mutation_rate = 0.015;
    double pux_bias = 0.66;
    int stall_limit = 50;
    int max_generations = 10000;
    double weight_max = 100.0;
    std::vector<double> fixed_weights;
    std::string fixed_crossover;
    bool verbose = false;
};

void add_ga_flags(CLI::App& cmd, GaFlags& f) {
    cmd.add_option("--instance", f.instance_path, "Instance file in OR-Library SCP format")
        ->required();
    cmd.add_option("--variant", f.variant, "Decoder variant: basic, newcost, 4criteria, iga")
        ->check(CLI::IsMember({"basic", "newcost", "4criteria", "iga"}))
        ->capture_default_str();
    cmd.add_option("--seed", f.seed, "Random seed")->capture_default_str();
    cmd.add_option("--population", f.population, "Population size (paper default 200)")
        ->capture_default_str();
    cmd.add_option("--elite-fraction", f.elite_fraction,
                   "Fraction of each generation kept (paper default 0.2)")
        ->capture_default_str();
    cmd.add_option("--mutation-rate", f.mutation_rate,
                   "Swap/auxiliary mutation probability (paper default 0.015)")
        ->capture_default_str();
    cmd.add_option("--pux-bias", f.pux_bias, "PUX mask bias p (paper default 0.66)")
        ->capture_default_str();
    cmd.add_option("--stall-limit", f.stall_limit,
                   "Stop after this many generations without improvement (paper default 50)")
        ->capture_default_str();
    cmd.add_option("--max-generations", f.max_generations, "Hard generation cap")
        ->capture_default_str();
    cmd.add_option("--weight-max", f.weight_max,
                   "Upper bound of the weight initialisation range (default 100)")
        ->capture_default_str();
    cmd.add_option("--fixed-weights", f.fixed_weights,
                   "Freeze all weight genes to w1,w2,w3,w4")
        ->delimiter(',')
        ->expected(4);
    cmd.add_option("--fixed-crossover", f.fixed_crossover,
                   "Force one crossover: 1point, pux, pmx (default for non-iga variants: pux)")
        ->check(CLI::IsMember({"1point", "pux", "pmx"}));
    cmd.add_flag("--verbose", f.verbose, "Log one line per generation to stderr");
}

cover::GaConfig config_from(const GaFlags& f) {
    cover::GaConfig config;
    config.population_size = f.population;
    config.elite_fraction = f.elite_fraction;
    config.mutation_rate = f.mutation_rate;
    config.pux_bias = f.pux_bias;
    config.stall_limit = f.stall_limit;
    config.max_generations = f.max_generations;
    config.variant = cover::variant_from_string(f.variant);
    config.weight_range = {0.0, f.weight_max};
    config.seed = f.seed;
    if (!f.fixed_weights.empty()) {
        config.fixed_weights = {f.fixed_weights[0], f.fixed_weights[1], f.fixed_weights[2],
                                f.fixed_weights[3]};
    }
    if (!f.fixed_crossover.empty()) {
        config.fixed_crossover = cover::crossover_from_string(f.fixed_crossover);
    }
    return config;
}

cover::ProgressFn progress_logger(bool verbose) {
    if (!verbose) return {};
    return [](int generation, int best_cost, int stall) {
        std::cerr << "gen " << generation << " best " << best_cost << " stall " << stall << "\n";
    };
}

int cmd_solve(const GaFlags& flags, const std::optional<std::string>& out_path) {
    cover::Instance inst = cover::parse_orlib_file(flags.instance_path);
    cover::GaConfig config = config_from(flags);
    cover::RunResult result = cover::run(inst, config, progress_logger(flags.verbose));

    nlohmann::json j;
    j["instance"] = cover::canonical_instance_id(flags.instance_path);
    j["variant"] = cover::to_string(config.variant);
    j["seed"] = config.seed;
    j["best_cost"] = result.best_cost;
    j["feasible"] = result.best_solution.feasible;
    j["generations"] = result.generations_run;
    j["evaluations"] = result.evaluations;
    j["elapsed_ms"] = result.elapsed.count();
    std::vector<int> columns;
    for (int col : result.best_solution.chosen) columns.push_back(col + 1);
    j["chosen_columns"] = columns;
    j["best_weights"] = result.best_genome.weights;
    j["best_crossover"] = cover::to_string(result.best_genome.crossover_gene);

    std::string text = j.dump(2);
    if (out_path) {
        std::ofstream out(*out_path);
        if (!out) throw std::runtime_error("cannot write " + *out_path);
        out << text << '\n';
    }
    std::cout << text << "\n";
    return 0;
}

int cmd_bench(const GaFlags& flags, int runs, const std::optional<int>& optimum,
              const std::optional<std::string>& out_path,
              const std::optional<std::string>& csv_path) {
    cover::BenchSpec spec;
    spec.instance_path = flags.instance_path;
    spec.runs = runs;
    spec.base_seed = flags.seed;
    spec.config = config_from(flags);
    spec.known_optimum = optimum ? optimum : cover::known_optimum(flags.instance_path);
    spec.json_out = out_path;
    spec.csv_out = csv_path;

    cover::BenchReport report = cover::run_bench(spec);
    std::cout << cover::bench_report_json(report) << "\n";
    return 0;
}

int cmd_gen(int rows, int cols, double density, int cost_min, int cost_max, std::uint64_t seed,
            const std::optional<std::string>& out_path) {
    cover::Instance inst =
        cover::generate_random(rows, cols, density, {cost_min, cost_max}, seed);
    if (out_path) {
        std::ofstream out(*out_path);
        if (!out) throw std::runtime_error("cannot write " + *out_path);
        cover::serialize_orlib(inst, out);
    } else {
        cover::serialize_orlib(inst, std::cout);
    }
    return 0;
}

int cmd_oracle(const std::string& instance_path) {
    cover::Instance inst = cover::parse_orlib_file(instance_path);
    auto [cost, chosen] = cover::brute_force_optimum(inst);
    nlohmann::json j;
    j["instance"] = cover::canonical_instance_id(instance_path);
    j["cost"] = cost;
    std::vector<int> columns;
    for (int col : chosen) columns.push_back(col + 1);
    j["chosen_columns"] = columns;
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Indirect genetic algorithm solver for set covering problems"};
    app.require_subcommand(1);

    GaFlags solve_flags;
    auto* solve = app.add_subcommand("solve", "One seeded GA run, JSON result on stdout");
    add_ga_flags(*solve, solve_flags);
    std::optional<std::string> solve_out;
    solve->add_option("--out", solve_out, "Also write the JSON result to this file");

    GaFlags bench_flags;
    auto* bench = app.add_subcommand("bench", "Best-of-N-runs benchmark with deviation report");
    add_ga_flags(*bench, bench_flags);
    int bench_runs = 10;
    std::optional<int> bench_optimum;
    std::optional<std::string> bench_out, bench_csv;
    bench->add_option("--runs", bench_runs, "Number of seeded runs")->capture_default_str();
    bench->add_option("--optimum", bench_optimum,
                      "Known optimum (default: bundled table, looked up by file name)");
    bench->add_option("--out", bench_out, "Write the JSON report to this file");
    bench->add_option("--csv", bench_csv, "Append a summary row to this CSV file");

    auto* gen = app.add_subcommand("gen", "Write a random instance in OR-Library format");
    int gen_rows = 8, gen_cols = 12, gen_cost_min = 1, gen_cost_max = 100;
    double gen_density = 0.3;
    std::uint64_t gen_seed = 1;
    std::optional<std::string> gen_out;
    gen->add_option("--rows", gen_rows, "Number of rows")->capture_default_str();
    gen->add_option("--cols", gen_cols, "Number of columns")->capture_default_str();
    gen->add_option("--density", gen_density, "Cell probability")->capture_default_str();
    gen->add_option("--cost-min", gen_cost_min, "Minimum column cost")->capture_default_str();
    gen->add_option("--cost-max", gen_cost_max, "Maximum column cost")->capture_default_str();
    gen->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
    gen->add_option("--out", gen_out, "Output file (default stdout)");

    auto* oracle = app.add_subcommand("oracle", "Exact optimum by enumeration (n <= 22)");
    std::string oracle_instance;
    oracle->add_option("--instance", oracle_instance, "Instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_flags, solve_out);
        if (bench->parsed()) {
            return cmd_bench(bench_flags, bench_runs, bench_optimum, bench_out, bench_csv);
        }
        if (gen->parsed()) {
            return cmd_gen(gen_rows, gen_cols, gen_density, gen_cost_min, gen_cost_max, gen_seed,
                           gen_out);
        }
        if (oracle->parsed()) return cmd_oracle(oracle_instance);
    } catch (const cover::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
