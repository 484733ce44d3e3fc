// Quality metrics and the Monte Carlo experiment driver.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "georec/instance.hpp"
#include "georec/order_reconstruct.hpp"
#include "georec/reconstruct_common.hpp"

namespace georec {

// Scale-invariant embedding quality: max embedded edge length divided by min
// embedded non-edge length. A clique has no non-edges, so the quotient needs
// the true r (max edge length / r); without it the metric is absent.
std::optional<double> quality_Q(const GeometricGraph& g, const Embedding& phi,
                                std::optional<double> known_r = std::nullopt);

// |E(G) delta E(G(phi, r))| / |E(G)|. Throws on an edgeless graph.
double edge_symmetric_difference(const GeometricGraph& g, const Embedding& phi,
                                 double r);

enum class ExperimentMode { Graph, Orders };

struct ExperimentConfig {
    ExperimentMode mode = ExperimentMode::Graph;
    std::int64_t n = 1000;
    std::optional<double> r;  // required in graph mode; in orders mode only
                              // used to evaluate Q and the edge difference
    std::int64_t trials = 1;
    std::uint64_t base_seed = 1;
    PlacementParams params;
    std::string out_path;      // empty: do not write
    bool record_timing = true; // false pins runtime_ms to 0 for byte-stable output
};

struct TrialRow {
    std::int64_t trial = 0;
    std::uint64_t seed = 0;
    double d_star = 0.0;
    int symmetry = 0;
    std::optional<double> q_g;
    std::optional<double> edge_sym_diff;
    std::optional<double> r_hat;
    std::int64_t runtime_ms = 0;
    bool failed = false;
    std::string failure_reason;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<TrialRow> rows;

    std::int64_t successes() const;
    double median_d_star() const;  // over successful trials
    double mean_d_star() const;
    double max_d_star() const;
};

// Trial t uses seed base_seed + t. Per-trial failures are recorded in the
// row, never aborting the run. Deterministic given the config (modulo the
// runtime_ms column when record_timing is on).
ExperimentReport run_experiment(const ExperimentConfig& cfg);

// CSV with a commented header; columns:
// trial,seed,d_star,symmetry,q_g,edge_sym_diff,r_hat,runtime_ms,failed
void write_report_csv(std::ostream& os, const ExperimentReport& report);
void write_report_csv_file(const std::string& path, const ExperimentReport& report);

}  // namespace georec
