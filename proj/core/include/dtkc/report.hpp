#pragma once

#include <string>
#include <vector>

#include "dtkc/solver.hpp"

namespace dtkc {

// Single-run result as a stable-field-order JSON document.
std::string result_to_json(const SolveResult& r, int indent = 2);

struct BenchEntry {
    std::string path;
    std::string format = "dimacs"; // or "edgelist"
    int k = 1;
};

// Parses {"instances": [{"path", "format", "k"}, ...]}.
std::vector<BenchEntry> parse_bench_spec(const std::string& text);

struct RunRecord {
    std::string instance;
    int k = 0;
    std::uint64_t seed = 0;
    Weight best_w = 0;
    bool valid = false;
};

struct InstanceSummary {
    std::string instance;
    int k = 0;
    int runs = 0;
    Weight best_w = 0;  // best over runs
    double avg_w = 0.0; // mean over runs
};

struct BenchReport {
    std::vector<RunRecord> runs;
    std::vector<InstanceSummary> summaries;
    std::vector<std::string> results_json; // one document per run
    std::vector<std::string> warnings;     // unreadable instances, etc.
};

// Runs each instance with `runs` seeds (base seed, base seed + 1, ...).
// Unreadable instances are skipped with a warning in the report.
BenchReport run_benchmark(const std::vector<BenchEntry>& entries, const SolveConfig& base,
                          const Budget& budget, int runs);

std::string runs_to_csv(const BenchReport& report);      // instance,k,seed,bestW
std::string summaries_to_csv(const BenchReport& report); // instance,k,runs,bestW,avgW

// Dominance counts between two reports over instances present in both
// (matched by instance name and k): n_plus_* counts where self is strictly
// better, n_minus_* where other is.
struct Comparison {
    int n_plus_best = 0;
    int n_minus_best = 0;
    int n_plus_avg = 0;
    int n_minus_avg = 0;
};

Comparison compare_reports(const BenchReport& self, const BenchReport& other);

// instance,k,bestW,otherBestW,relative (= other/self best) for scatter plots.
std::string scatter_csv(const BenchReport& self, const BenchReport& other);

} // namespace dtkc
