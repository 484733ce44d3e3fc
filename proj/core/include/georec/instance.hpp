// Instance construction: hidden-embedding sampling, geometric graph and
// ordering-oracle construction, and the on-disk formats for all three.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "georec/geometry.hpp"

namespace georec {

/// Adjacency structure of a geometric graph. r is present only when the
/// graph was generated from an embedding; adjacency-only files leave it empty.
struct GeometricGraph {
    std::int64_t n = 0;
    std::optional<double> r;
    std::vector<std::vector<std::int32_t>> neighbors;  // sorted per vertex
    std::int64_t m = 0;

    std::int64_t degree(std::int32_t v) const {
        return static_cast<std::int64_t>(neighbors[v].size());
    }
    bool has_edge(std::int32_t u, std::int32_t v) const;
};

// n i.i.d. uniform points in the area-n square; deterministic given seed.
// Throws std::invalid_argument for n < 5 (pipelines need 4 corners + 1).
Embedding sample_embedding(std::int64_t n, std::uint64_t seed);

// Geometric graph with the closed threshold d_E <= r, built via a uniform
// grid of cell side >= r comparing only same-and-adjacent cells.
GeometricGraph build_graph(const Embedding& e, double r);

// O(n^2) all-pairs builder; the oracle the grid builder is tested against.
GeometricGraph build_graph_bruteforce(const Embedding& e, double r);

/// Answers far(v) and the full distance order tau_v for any vertex, backed
/// either by a hidden embedding (lazy, nothing materialized up front) or by
/// a loaded full ordering table. Rank convention: tau_v starts with v itself,
/// so k(v,v) = 1; ties are broken by smaller vertex id.
class OrderingOracle {
  public:
    explicit OrderingOracle(Embedding hidden);
    OrderingOracle(std::int64_t n, std::vector<std::vector<std::int32_t>> orders);

    std::int64_t n() const { return n_; }

    // Vertex of maximal distance from v (last in tau_v). O(n).
    std::int32_t far(std::int32_t v) const;

    // Full order tau_v: a permutation of 0..n-1 starting with v.
    std::vector<std::int32_t> order(std::int32_t v) const;

    // Dense rank array for v: rank[u] = k(v, u) in 1..n.
    std::vector<std::int32_t> ranks(std::int32_t v) const;

    const Embedding* hidden_embedding() const {
        return hidden_ ? &*hidden_ : nullptr;
    }

  private:
    std::int64_t n_;
    std::optional<Embedding> hidden_;
    std::vector<std::vector<std::int32_t>> table_;
};

OrderingOracle build_ordering_oracle(Embedding e);

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::int64_t line);
    std::int64_t line;
};

// Text formats. Coordinates are written with 17 significant digits, so
// write-then-read is an identity on doubles.
void write_embedding(std::ostream& os, const Embedding& e);
Embedding read_embedding(std::istream& is);
void write_graph(std::ostream& os, const GeometricGraph& g);
GeometricGraph read_graph(std::istream& is);
void write_orderings(std::ostream& os, const OrderingOracle& oracle);
OrderingOracle read_orderings(std::istream& is);

void write_embedding_file(const std::string& path, const Embedding& e);
Embedding read_embedding_file(const std::string& path);
void write_graph_file(const std::string& path, const GeometricGraph& g);
GeometricGraph read_graph_file(const std::string& path);
void write_orderings_file(const std::string& path, const OrderingOracle& oracle);
OrderingOracle read_orderings_file(const std::string& path);

}  // namespace georec
