#include "cover/bench.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "cover/optima.hpp"

namespace cover {

std::pair<int, std::vector<int>> brute_force_optimum(const Instance& inst) {
    const int n = inst.num_cols;
    if (n > 22) {
        throw std::invalid_argument("brute_force_optimum is bounded to 22 columns, got " +
                                    std::to_string(n));
    }

    const int words = (inst.num_rows + 63) / 64;
    std::vector<std::vector<std::uint64_t>> col_mask(n, std::vector<std::uint64_t>(words, 0));
    std::vector<std::uint64_t> full(words, 0);
    for (int i = 0; i < inst.num_rows; ++i) full[i / 64] |= 1ULL << (i % 64);
    for (int j = 0; j < n; ++j) {
        for (int i : inst.rows_of_col[j]) col_mask[j][i / 64] |= 1ULL << (i % 64);
    }

    int best_cost = -1;
    std::uint32_t best_subset = 0;
    std::vector<std::uint64_t> covered(words);

    auto chosen_of = [&](std::uint32_t subset) {
        std::vector<int> chosen;
        for (int j = 0; j < n; ++j) {
            if (subset >> j & 1u) chosen.push_back(j);
        }
        return chosen;
    };

    for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        int cost = 0;
        for (std::uint32_t bits = subset; bits != 0; bits &= bits - 1) {
            cost += inst.costs[std::countr_zero(bits)];
        }
        if (best_cost >= 0 && cost > best_cost) continue;

        std::fill(covered.begin(), covered.end(), 0);
        for (std::uint32_t bits = subset; bits != 0; bits &= bits - 1) {
            const auto& mask = col_mask[std::countr_zero(bits)];
            for (int w = 0; w < words; ++w) covered[w] |= mask[w];
        }
        if (covered != full) continue;

        if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            best_subset = subset;
        } else if (cost == best_cost) {
            auto a = chosen_of(subset);
            auto b = chosen_of(best_subset);
            if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) {
                best_subset = subset;
            }
        }
    }

    if (best_cost < 0) throw std::invalid_argument("instance has an uncoverable row");
    return {best_cost, chosen_of(best_subset)};
}

namespace {

int bench_thread_cap() {
    if (const char* env = std::getenv("COVER_EVOLVE_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) return cap;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

RunSummary summarize_run(const RunResult& result, std::uint64_t seed) {
    RunSummary s;
    s.seed = seed;
    s.best_cost = result.best_cost;
    s.generations = result.generations_run;
    s.evaluations = result.evaluations;
    s.elapsed_ms = result.elapsed.count();
    s.chosen_columns.reserve(result.best_solution.chosen.size());
    for (int j : result.best_solution.chosen) s.chosen_columns.push_back(j + 1);
    return s;
}

}  // namespace

BenchReport run_bench(const Instance& inst, const std::string& instance_id,
                      const BenchSpec& spec) {
    if (spec.runs < 1) throw std::invalid_argument("runs must be >= 1");
    spec.config.validate();

    BenchReport report;
    report.instance_id = instance_id;
    report.variant = spec.config.variant;
    report.per_run.resize(spec.runs);

    const int threads = std::min(bench_thread_cap(), spec.runs);
    std::atomic<int> next_run{0};
    auto worker = [&]() {
        for (int r = next_run.fetch_add(1); r < spec.runs; r = next_run.fetch_add(1)) {
            GaConfig config = spec.config;
            config.seed = spec.base_seed + static_cast<std::uint64_t>(r);
            report.per_run[r] = summarize_run(run(inst, config), config.seed);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    report.best_cost = std::min_element(report.per_run.begin(), report.per_run.end(),
                                        [](const RunSummary& a, const RunSummary& b) {
                                            return a.best_cost < b.best_cost;
                                        })
                           ->best_cost;
    report.mean_elapsed_ms =
        std::accumulate(report.per_run.begin(), report.per_run.end(), 0.0,
                        [](double acc, const RunSummary& r) { return acc + r.elapsed_ms; }) /
        static_cast<double>(spec.runs);
    report.optimum = spec.known_optimum;
    if (report.optimum) {
        report.deviation_pct =
            100.0 * (report.best_cost - *report.optimum) / static_cast<double>(*report.optimum);
    }

    if (spec.json_out) {
        std::ofstream out(*spec.json_out);
        if (!out) throw std::runtime_error("cannot write JSON report to " + *spec.json_out);
        out << bench_report_json(report) << '\n';
    }
    if (spec.csv_out) append_csv_row(*spec.csv_out, report);
    return report;
}

BenchReport run_bench(const BenchSpec& spec) {
    Instance inst = parse_orlib_file(spec.instance_path);
    return run_bench(inst, canonical_instance_id(spec.instance_path), spec);
}

std::string bench_report_json(const BenchReport& report) {
    nlohmann::json j;
    j["instance"] = report.instance_id;
    j["variant"] = to_string(report.variant);
    j["runs"] = nlohmann::json::array();
    for (const RunSummary& r : report.per_run) {
        j["runs"].push_back({{"seed", r.seed},
                             {"best_cost", r.best_cost},
                             {"generations", r.generations},
                             {"evaluations", r.evaluations},
                             {"elapsed_ms", r.elapsed_ms},
                             {"chosen_columns", r.chosen_columns}});
    }
    j["best_cost"] = report.best_cost;
    if (report.optimum) j["optimum"] = *report.optimum;
    if (report.deviation_pct) j["deviation_pct"] = *report.deviation_pct;
    j["mean_elapsed_ms"] = report.mean_elapsed_ms;
    return j.dump(2);
}

void append_csv_row(const std::string& csv_path, const BenchReport& report) {
    const bool fresh = !std::filesystem::exists(csv_path) ||
                       std::filesystem::file_size(csv_path) == 0;
    std::ofstream out(csv_path, std::ios::app);
    if (!out) throw std::runtime_error("cannot append CSV row to " + csv_path);
    if (fresh) out << "instance,variant,best_cost,optimum,deviation_pct,mean_elapsed_ms\n";
    out << report.instance_id << ',' << to_string(report.variant) << ',' << report.best_cost
        << ',';
    if (report.optimum) out << *report.optimum;
    out << ',';
    if (report.deviation_pct) out << *report.deviation_pct;
    out << ',' << report.mean_elapsed_ms << '\n';
}

std::vector<SummaryRow> summarize(const std::vector<BenchReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("summarize needs at least one report");

    std::vector<std::string> group_order;
    auto group_of = [](const BenchReport& r) {
        std::size_t dot = r.instance_id.find('.');
        return dot == std::string::npos ? r.instance_id : r.instance_id.substr(0, dot);
    };
    for (const BenchReport& r : reports) {
        std::string g = group_of(r);
        if (std::find(group_order.begin(), group_order.end(), g) == group_order.end()) {
            group_order.push_back(g);
        }
    }

    std::vector<SummaryRow> rows;
    for (const std::string& g : group_order) {
        SummaryRow row;
        row.label = g;
        double dev_sum = 0.0;
        int dev_count = 0;
        for (const BenchReport& r : reports) {
            if (group_of(r) != g) continue;
            ++row.reports;
            row.mean_elapsed_ms += r.mean_elapsed_ms;
            if (r.deviation_pct) {
                dev_sum += *r.deviation_pct;
                ++dev_count;
            }
        }
        row.mean_elapsed_ms /= row.reports;
        if (dev_count > 0) row.mean_deviation_pct = dev_sum / dev_count;
        rows.push_back(std::move(row));
    }

    // Table 2's "Overall" aggregation is ambiguous; emit both readings.
    SummaryRow of_groups{"Overall (mean of set means)", std::nullopt, 0.0, 0};
    SummaryRow of_instances{"Overall (mean over instances)", std::nullopt, 0.0, 0};
    {
        double dev_sum = 0.0;
        int dev_count = 0;
        for (const SummaryRow& row : rows) {
            of_groups.mean_elapsed_ms += row.mean_elapsed_ms;
            of_groups.reports += row.reports;
            if (row.mean_deviation_pct) {
                dev_sum += *row.mean_deviation_pct;
                ++dev_count;
            }
        }
        of_groups.mean_elapsed_ms /= static_cast<double>(rows.size());
        if (dev_count > 0) of_groups.mean_deviation_pct = dev_sum / dev_count;
    }
    {
        double dev_sum = 0.0;
        int dev_count = 0;
        for (const BenchReport& r : reports) {
            of_instances.mean_elapsed_ms += r.mean_elapsed_ms;
            ++of_instances.reports;
            if (r.deviation_pct) {
                dev_sum += *r.deviation_pct;
                ++dev_count;
            }
        }
        of_instances.mean_elapsed_ms /= static_cast<double>(reports.size());
        if (dev_count > 0) of_instances.mean_deviation_pct = dev_sum / dev_count;
    }
    rows.push_back(std::move(of_groups));
    rows.push_back(std::move(of_instances));
    return rows;
}

std::string format_summary(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    out << "set                               reports  mean dev %  mean time ms\n";
    for (const SummaryRow& row : rows) {
        out << row.label;
        for (std::size_t pad = row.label.size(); pad < 34; ++pad) out << ' ';
        std::string dev = row.mean_deviation_pct
                              ? [&] {
                                    char buf[32];
                                    std::snprintf(buf, sizeof buf, "%.2f", *row.mean_deviation_pct);
                                    return std::string(buf);
                                }()
                              : std::string("-");
        char line[64];
        std::snprintf(line, sizeof line, "%7d  %10s  %12.1f\n", row.reports, dev.c_str(),
                      row.mean_elapsed_ms);
        out << line;
    }
    return out.str();
}

}  // namespace cover
