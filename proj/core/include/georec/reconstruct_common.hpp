// Types and placement conventions shared by the two reconstruction pipelines.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "georec/geometry.hpp"

namespace georec {

enum class PlaceCase : std::uint8_t {
    Corner,                  // one of the four anchor vertices, pinned to a corner
    SquarelikePair,          // placed at a circle-pair intersection
    ClampedToBoundary,       // intersection fell outside; projected to the boundary
    FallbackNonintersecting  // no pair intersected; center-line fallback
};

const char* to_string(PlaceCase c);

/// Estimate of the threshold distance from the observed edge count.
struct REstimate {
    double r_hat = 0.0;
    std::int64_t m_observed = 0;
    double rho_hat = 0.0;   // sqrt(n) / r_hat
    bool clamped = false;   // edge count saturated mu at r = sqrt(n)
};

struct ReconstructionResult {
    Embedding phi;
    std::optional<REstimate> r_estimate;        // graph pipeline only
    std::array<std::int32_t, 4> corner_vertices{};  // v_i labeled to corner c_{i+1}
    std::vector<PlaceCase> per_vertex_case;
    std::vector<std::pair<std::int32_t, std::string>> failures;

    std::int64_t case_count(PlaceCase c) const;
};

// Placement at the intersection of two corner-centered circles. Of the two
// intersection points, picks the one on the same side of the line through the
// centers as the corner with index nearest_corner, projecting onto the square
// boundary if it falls outside. Disjoint or nested circles fall back to the
// point on the center line at distance R_a + (d - R_a - R_b)/2 from center a.
std::pair<Point, PlaceCase> place_at_circle_pair(const SquareDomain& domain,
                                                 const Circle& a, const Circle& b,
                                                 int nearest_corner);

// Angle score for pair selection: distance of the crossing angle from pi/2;
// non-crossing pairs score pi (worst).
double squarelike_score(const Circle& a, const Circle& b);

}  // namespace georec
