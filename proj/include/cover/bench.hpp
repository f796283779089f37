#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cover/evolution.hpp"

namespace cover {

/// Experimental protocol for one instance: `runs` seeded GA runs
/// (seeds base_seed, base_seed+1, ...), best cost over runs, deviation from
/// the known optimum when available.
struct BenchSpec {
    std::string instance_path;
    std::optional<int> known_optimum;
    int runs = 10;
    std::uint64_t base_seed = 1;
    GaConfig config;
    std::optional<std::string> json_out;  // write the JSON report here
    std::optional<std::string> csv_out;   // append a CSV summary row here
};

struct RunSummary {
    std::uint64_t seed = 0;
    int best_cost = 0;
    int generations = 0;
    long evaluations = 0;
    double elapsed_ms = 0.0;
    std::vector<int> chosen_columns;  // 1-based, as in the OR-Library format
};

struct BenchReport {
    std::string instance_id;
    Variant variant = Variant::Iga;
    std::vector<RunSummary> per_run;
    int best_cost = 0;
    std::optional<int> optimum;
    std::optional<double> deviation_pct;  // 100 * (best - optimum) / optimum
    double mean_elapsed_ms = 0.0;
};

/// Exact minimum-cost cover by subset enumeration with incumbent pruning.
/// Bounded to n <= 22 columns. Cost ties resolve to the lexicographically
/// smallest chosen set.
std::pair<int, std::vector<int>> brute_force_optimum(const Instance& inst);

/// Runs the full protocol. Independent runs execute concurrently, capped by
/// the COVER_EVOLVE_THREADS environment variable (default: available cores).
BenchReport run_bench(const BenchSpec& spec);

/// Same protocol on an already-parsed instance; no file I/O.
BenchReport run_bench(const Instance& inst, const std::string& instance_id,
                      const BenchSpec& spec);

std::string bench_report_json(const BenchReport& report);
void append_csv_row(const std::string& csv_path, const BenchReport& report);

/// One line of the per-set summary. `Overall` aggregation is ambiguous
/// (mean of set means vs mean over instances), so summarize emits both,
/// labelled.
struct SummaryRow {
    std::string label;
    std::optional<double> mean_deviation_pct;
    double mean_elapsed_ms = 0.0;
    int reports = 0;
};

/// Groups reports by problem-set prefix (the part of the instance id before
/// the dot) and averages deviation and time per group.
std::vector<SummaryRow> summarize(const std::vector<BenchReport>& reports);
std::string format_summary(const std::vector<SummaryRow>& rows);

}  // namespace cover
