// Command line front end: instance generation, both reconstruction
// pipelines, evaluation against a known truth, and the Monte Carlo
// experiment driver.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "georec/graph_reconstruct.hpp"
#include "georec/harness.hpp"
#include "georec/instance.hpp"
#include "georec/order_reconstruct.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitPipeline = 2;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_diagnostics(const std::string& path,
                       const georec::ReconstructionResult& rec) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    if (rec.r_estimate) {
        os << "r_hat " << fmt(rec.r_estimate->r_hat) << "\n";
        os << "m " << rec.r_estimate->m_observed << "\n";
        os << "rho_hat " << fmt(rec.r_estimate->rho_hat) << "\n";
        os << "r_hat_clamped " << (rec.r_estimate->clamped ? 1 : 0) << "\n";
    }
    os << "corners";
    for (auto v : rec.corner_vertices) os << ' ' << v;
    os << "\n";
    using georec::PlaceCase;
    for (PlaceCase c : {PlaceCase::SquarelikePair, PlaceCase::ClampedToBoundary,
                        PlaceCase::FallbackNonintersecting})
        os << "count_" << georec::to_string(c) << ' ' << rec.case_count(c) << "\n";
    os << "failures " << rec.failures.size() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Point-set reconstruction for random geometric graphs"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand(
        "generate", "Sample a hidden embedding and derived instance files");
    std::int64_t gen_n = 1000;
    double gen_r = 0.0;
    std::uint64_t gen_seed = 1;
    std::string out_embedding, out_graph, out_orderings;
    gen->add_option("--n", gen_n, "Number of vertices")->required();
    gen->add_option("--r", gen_r, "Threshold distance (required with --out-graph)");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--out-embedding", out_embedding, "Embedding file to write");
    gen->add_option("--out-graph", out_graph, "Graph file to write");
    gen->add_option("--out-orderings", out_orderings, "Ordering dump to write");

    // reconstruct-graph
    auto* rg = app.add_subcommand("reconstruct-graph",
                                  "Reconstruct an embedding from adjacency");
    std::string rg_graph, rg_out;
    rg->add_option("--graph", rg_graph, "Input graph file")->required();
    rg->add_option("--out", rg_out, "Output embedding file")->required();

    // reconstruct-orders
    auto* ro = app.add_subcommand("reconstruct-orders",
                                  "Reconstruct an embedding from vertex orderings");
    std::string ro_orderings, ro_embedding, ro_out;
    double ro_alpha = georec::PlacementParams{}.alpha;
    ro->add_option("--orderings", ro_orderings, "Ordering dump file");
    ro->add_option("--embedding", ro_embedding,
                   "Hidden embedding file (simulation mode)");
    ro->add_option("--alpha", ro_alpha, "Opposite-corner rank fraction");
    ro->add_option("--out", ro_out, "Output embedding file")->required();

    // evaluate
    auto* ev = app.add_subcommand("evaluate",
                                  "Compare a reconstructed embedding to the truth");
    std::string ev_truth, ev_estimate, ev_graph;
    std::optional<double> ev_r;
    ev->add_option("--truth", ev_truth, "True embedding file")->required();
    ev->add_option("--estimate", ev_estimate, "Reconstructed embedding file")
        ->required();
    ev->add_option("--graph", ev_graph, "Graph file for Q and edge metrics");
    ev->add_option("--r", ev_r, "Threshold distance for Q and edge metrics");

    // experiment
    auto* ex = app.add_subcommand("experiment", "Run a Monte Carlo experiment");
    std::string ex_mode = "graph", ex_out;
    georec::ExperimentConfig cfg;
    ex->add_option("--mode", ex_mode, "graph or orders")
        ->check(CLI::IsMember({"graph", "orders"}));
    ex->add_option("--n", cfg.n, "Number of vertices")->required();
    std::optional<double> ex_r;
    ex->add_option("--r", ex_r, "Threshold distance");
    ex->add_option("--trials", cfg.trials, "Trial count")->required();
    ex->add_option("--seed", cfg.base_seed, "Base seed");
    ex->add_option("--alpha", cfg.params.alpha, "Opposite-corner rank fraction");
    ex->add_option("--out", ex_out, "CSV report path")->required();
    bool no_timing = false;
    ex->add_flag("--no-timing", no_timing,
                 "Pin runtime_ms to 0 for byte-stable output");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        if (!out_graph.empty() && !(gen_r > 0.0)) {
            std::cerr << "generate: --out-graph requires --r > 0\n";
            return kExitIo;
        }
        auto psi = georec::sample_embedding(gen_n, gen_seed);
        if (!out_embedding.empty()) georec::write_embedding_file(out_embedding, psi);
        if (!out_graph.empty())
            georec::write_graph_file(out_graph, georec::build_graph(psi, gen_r));
        if (!out_orderings.empty())
            georec::write_orderings_file(out_orderings,
                                         georec::build_ordering_oracle(psi));
        return kExitOk;
    }

    if (rg->parsed()) {
        auto g = georec::read_graph_file(rg_graph);
        try {
            auto rec = georec::reconstruct_from_graph(g);
            georec::write_embedding_file(rg_out, rec.phi);
            write_diagnostics(rg_out + ".diag", rec);
        } catch (const std::exception& ex2) {
            std::cerr << "reconstruction failed: " << ex2.what() << "\n";
            return kExitPipeline;
        }
        return kExitOk;
    }

    if (ro->parsed()) {
        if (ro_orderings.empty() == ro_embedding.empty()) {
            std::cerr << "reconstruct-orders: give exactly one of --orderings"
                         " and --embedding\n";
            return kExitIo;
        }
        georec::PlacementParams params;
        params.alpha = ro_alpha;
        auto oracle = ro_orderings.empty()
                          ? georec::build_ordering_oracle(
                                georec::read_embedding_file(ro_embedding))
                          : georec::read_orderings_file(ro_orderings);
        try {
            auto rec = georec::reconstruct_from_orders(oracle, params);
            georec::write_embedding_file(ro_out, rec.phi);
            write_diagnostics(ro_out + ".diag", rec);
        } catch (const std::exception& ex2) {
            std::cerr << "reconstruction failed: " << ex2.what() << "\n";
            return kExitPipeline;
        }
        return kExitOk;
    }

    if (ev->parsed()) {
        auto truth = georec::read_embedding_file(ev_truth);
        auto estimate = georec::read_embedding_file(ev_estimate);
        auto [ds, sym] = georec::displacement_dstar(truth, estimate, truth.domain);
        std::cout << "d_star " << fmt(ds) << "\n";
        std::cout << "symmetry " << sym.index << "\n";
        if (!ev_graph.empty() && ev_r) {
            auto g = georec::read_graph_file(ev_graph);
            auto q = georec::quality_Q(g, estimate, ev_r);
            std::cout << "q_g " << (q ? fmt(*q) : "absent") << "\n";
            std::cout << "edge_sym_diff "
                      << fmt(georec::edge_symmetric_difference(g, estimate, *ev_r))
                      << "\n";
        }
        return kExitOk;
    }

    // experiment
    cfg.mode = ex_mode == "graph" ? georec::ExperimentMode::Graph
                                  : georec::ExperimentMode::Orders;
    cfg.r = ex_r;
    cfg.out_path = ex_out;
    cfg.record_timing = !no_timing;
    auto report = georec::run_experiment(cfg);
    std::cout << "trials " << report.rows.size() << " successes "
              << report.successes() << " median_d_star "
              << fmt(report.median_d_star()) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const georec::ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return kExitIo;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitIo;
    }
}
