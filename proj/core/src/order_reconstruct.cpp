#include "georec/order_reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace georec {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double PlacementParams::conc_radius(std::int64_t n) const {
    return 1.19695 * std::sqrt(std::log(double(n))) + 1.0;
}

OrderCornerSet find_corners_from_orders(const OrderingOracle& oracle,
                                        const PlacementParams& params) {
    const std::int64_t n = oracle.n();
    if (n < 5) throw std::runtime_error("find_corners_from_orders: need n >= 5");

    OrderCornerSet cs;
    std::int32_t v1 = oracle.far(0);
    std::int32_t v3 = oracle.far(v1);
    cs.corner_vertices[0] = v1;
    cs.corner_vertices[2] = v3;
    cs.rank_of[0] = oracle.ranks(v1);
    cs.rank_of[2] = oracle.ranks(v3);

    // Off-diagonal scan: a vertex ranked late in both tau_v1 and tau_v3 must
    // lie away from the v1-v3 diagonal, so its far-pair spans the other
    // diagonal. A vertex outside both balls B(c, f*sqrt(n)) around the
    // diagonal corners has rank at least the ball area (pi/4)f^2 n in both
    // orders; the best min-rank peaks near 0.785n at the off-diagonal
    // corners, so the guard must stay below that. Capped for tiny n.
    double f = params.off_diag_factor;
    double threshold =
        std::min((kPi / 4.0) * f * f * double(n), double(n - 2));
    std::int32_t best = -1;
    std::int64_t best_rank = -1;
    for (std::int32_t v = 0; v < n; ++v) {
        if (v == v1 || v == v3) continue;
        std::int64_t mr = std::min<std::int64_t>(cs.rank_of[0][v], cs.rank_of[2][v]);
        if (mr > best_rank) {
            best_rank = mr;
            best = v;
        }
    }
    if (best < 0 || double(best_rank) < threshold)
        throw std::runtime_error(
            "find_corners_from_orders: off-diagonal vertex not found");

    std::int32_t v2 = oracle.far(best);
    std::int32_t v4 = oracle.far(v2);
    if (v2 == v1 || v2 == v3 || v4 == v1 || v4 == v3 || v2 == v4)
        throw std::runtime_error(
            "find_corners_from_orders: corner vertices not distinct");
    cs.corner_vertices[1] = v2;
    cs.corner_vertices[3] = v4;
    cs.rank_of[1] = oracle.ranks(v2);
    cs.rank_of[3] = oracle.ranks(v4);
    return cs;
}

std::pair<int, int> classify_vertex(const OrderCornerSet& corners,
                                    const PlacementParams& params,
                                    std::int64_t n, std::int32_t v) {
    int i0 = 0;
    for (int i = 1; i < 4; ++i)
        if (corners.rank_of[i][v] < corners.rank_of[i0][v]) i0 = i;
    int opposite = (i0 + 2) % 4;
    int cse = double(corners.rank_of[opposite][v]) <= params.alpha * double(n) ? 1 : 2;
    return {i0, cse};
}

std::pair<Point, PlaceCase> place_vertex_order(const SquareDomain& domain,
                                               const OrderCornerSet& corners,
                                               const PlacementParams& params,
                                               std::int32_t v) {
    auto [i0, cse] = classify_vertex(corners, params, domain.n, v);
    std::array<Circle, 4> circles;
    for (int i = 0; i < 4; ++i)
        circles[i] = Circle{domain.corners[i],
                            rank_radius_sn(domain, double(corners.rank_of[i][v]))};
    if (cse == 2) {
        // Opposite-corner rank too coarse to invert; the two corners adjacent
        // to the nearest one always give a squarelike pair here.
        int a = (i0 + 3) % 4, b = (i0 + 1) % 4;
        return place_at_circle_pair(domain, circles[a], circles[b], i0);
    }
    int others[3], t = 0;
    for (int i = 0; i < 4; ++i)
        if (i != i0) others[t++] = i;
    int pa = others[0], pb = others[1];
    double best = std::numeric_limits<double>::infinity();
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            double s = squarelike_score(circles[others[a]], circles[others[b]]);
            if (s < best) {
                best = s;
                pa = others[a];
                pb = others[b];
            }
        }
    return place_at_circle_pair(domain, circles[pa], circles[pb], i0);
}

ReconstructionResult reconstruct_from_orders(const OrderingOracle& oracle,
                                             const PlacementParams& params) {
    const std::int64_t n = oracle.n();
    OrderCornerSet corners = find_corners_from_orders(oracle, params);

    SquareDomain domain(n);
    ReconstructionResult res{Embedding{domain, std::vector<Point>(n)},
                             std::nullopt,
                             corners.corner_vertices,
                             std::vector<PlaceCase>(n, PlaceCase::SquarelikePair),
                             {}};
    std::vector<char> is_corner(n, 0);
    for (int i = 0; i < 4; ++i) {
        std::int32_t vi = corners.corner_vertices[i];
        res.phi.points[vi] = domain.corners[i];
        res.per_vertex_case[vi] = PlaceCase::Corner;
        is_corner[vi] = 1;
    }
    for (std::int32_t v = 0; v < n; ++v) {
        if (is_corner[v]) continue;
        auto [p, pc] = place_vertex_order(domain, corners, params, v);
        res.phi.points[v] = p;
        res.per_vertex_case[v] = pc;
    }
    return res;
}

}  // namespace georec
