// Reconstruction from adjacency alone: estimate the threshold distance from
// the edge count, find four low-degree corner vertices, and place every other
// vertex at the intersection of a squarelike pair of corner-centered circles
// with radii derived from BFS hop counts.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "georec/instance.hpp"
#include "georec/reconstruct_common.hpp"

namespace georec {

constexpr std::int32_t kUnreachable = -1;

/// Four corner vertices with their BFS distance arrays (hop counts,
/// kUnreachable for unreachable vertices).
struct CornerAssignment {
    std::array<std::int32_t, 4> corner_vertices{};          // v_i -> corner c_{i+1}
    std::array<std::vector<std::int32_t>, 4> distances;     // d_G(v_i, .)
};

// Expected edge count of the random model:
// mu(n, r) = (1/2)(n-1) pi r^2 (1 - (8/3pi) r/sqrt(n) + (1/2pi) r^2/n).
// Strictly increasing in r on (0, sqrt(n)].
double expected_edges_mu(std::int64_t n, double r);

// Invert mu by bisection so that |mu(n, r_hat) - m| < 1. If the graph is
// denser than mu(n, sqrt(n)) the estimate clamps to sqrt(n) with a flag.
// Throws std::runtime_error on an empty graph.
REstimate estimate_r(const GeometricGraph& g);

// Iterative minimal-degree picks with neighborhood marking, then label the
// graph-distance-farthest pick as the opposite corner. Requires a connected
// graph. Retains the BFS trees from all four corner vertices.
CornerAssignment find_corner_vertices(const GeometricGraph& g);

// Index in 0..3 of the corner minimizing d_G(v, v_i), ties to the least index.
int nearest_corner(const CornerAssignment& assign, std::int32_t v);

// Single-vertex placement; see place_at_circle_pair for the conventions.
std::pair<Point, PlaceCase> place_vertex_graph(const SquareDomain& domain,
                                               const CornerAssignment& assign,
                                               const REstimate& est,
                                               std::int32_t v);

ReconstructionResult reconstruct_from_graph(const GeometricGraph& g);

// BFS hop counts from a single source.
std::vector<std::int32_t> bfs_distances(const GeometricGraph& g, std::int32_t src);

}  // namespace georec
