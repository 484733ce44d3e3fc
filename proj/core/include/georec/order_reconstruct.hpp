// Reconstruction from per-vertex distance orderings: corner discovery via
// extreme pairs, rank-to-distance conversion through the corner area
// function, and two-circle placement.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "georec/instance.hpp"
#include "georec/reconstruct_common.hpp"

namespace georec {

/// Corner vertices discovered from the orderings, with the four full rank
/// arrays k(v_i, .) materialized. v1/v3 and v2/v4 sit at opposite corners.
struct OrderCornerSet {
    std::array<std::int32_t, 4> corner_vertices{};        // v_i -> corner c_{i+1}
    std::array<std::vector<std::int32_t>, 4> rank_of;     // k(v_i, u), 1-based
};

struct PlacementParams {
    // Rank fraction gating the opposite-corner case split. Must exceed
    // alpha0 = pi/9 + 1/sqrt(3) ~ 0.926416.
    double alpha = 0.93;
    // Scan threshold factor for the off-diagonal vertex: ranks in both
    // diagonal-corner orders must reach the corner-ball area
    // (pi/4) (off_diag_factor)^2 n.
    double off_diag_factor = 0.9;

    // Diagnostic annulus half-width 1.19695 sqrt(log n) + 1; never gates
    // placement.
    double conc_radius(std::int64_t n) const;
};

constexpr double kAlpha0 = 0.9264161195884917;  // pi/9 + 1/sqrt(3)

// v1 = far(far-chain start), v3 = far(v1); then scan for a vertex far from
// both (double-rank threshold) and take v2, v4 as its far-pair. Throws
// std::runtime_error("off-diagonal vertex not found") when no vertex passes.
OrderCornerSet find_corners_from_orders(const OrderingOracle& oracle,
                                        const PlacementParams& params = {});

// Nearest corner index (least rank, ties to least index) and the case tag:
// 1 when the opposite-corner rank is <= alpha n, else 2.
std::pair<int, int> classify_vertex(const OrderCornerSet& corners,
                                    const PlacementParams& params,
                                    std::int64_t n, std::int32_t v);

// Case 1: best of the three circle pairs avoiding the nearest corner.
// Case 2: exactly the pair of corners adjacent to the nearest one.
// Radii come from rank_radius_sn.
std::pair<Point, PlaceCase> place_vertex_order(const SquareDomain& domain,
                                               const OrderCornerSet& corners,
                                               const PlacementParams& params,
                                               std::int32_t v);

ReconstructionResult reconstruct_from_orders(const OrderingOracle& oracle,
                                             const PlacementParams& params = {});

}  // namespace georec
