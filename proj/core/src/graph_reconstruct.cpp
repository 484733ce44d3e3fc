#include "georec/graph_reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace georec {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

const char* to_string(PlaceCase c) {
    switch (c) {
        case PlaceCase::Corner: return "corner";
        case PlaceCase::SquarelikePair: return "squarelike-pair-chosen";
        case PlaceCase::ClampedToBoundary: return "clamped-to-boundary";
        case PlaceCase::FallbackNonintersecting: return "fallback-nonintersecting";
    }
    return "?";
}

std::int64_t ReconstructionResult::case_count(PlaceCase c) const {
    std::int64_t k = 0;
    for (auto pc : per_vertex_case)
        if (pc == c) ++k;
    return k;
}

double squarelike_score(const Circle& a, const Circle& b) {
    double d = dist(a.center, b.center);
    if (d == 0.0 || d >= a.radius + b.radius || d <= std::abs(a.radius - b.radius))
        return kPi;
    return std::abs(intersection_angle(a, b) - kPi / 2.0);
}

std::pair<Point, PlaceCase> place_at_circle_pair(const SquareDomain& domain,
                                                 const Circle& a, const Circle& b,
                                                 int nearest) {
    auto pts = circle_intersections(a, b);
    if (pts.empty()) {
        double d = dist(a.center, b.center);
        double t = a.radius + (d - a.radius - b.radius) / 2.0;
        Point p{a.center.x + t * (b.center.x - a.center.x) / d,
                a.center.y + t * (b.center.y - a.center.y) / d};
        return {domain.clamp(p), PlaceCase::FallbackNonintersecting};
    }
    if (pts.size() == 1) {
        Point p = pts[0];
        if (domain.contains(p)) return {p, PlaceCase::SquarelikePair};
        return {domain.clamp(p), PlaceCase::ClampedToBoundary};
    }
    // The two intersections are mirror images across the line through the
    // centers; the vertex lies on the same side as its nearest corner. Choosing
    // by side (rather than by which point is in the square) is stable under
    // small radius errors, which matter for diagonal center pairs whose mirror
    // point can also land inside the square.
    const Point& target = domain.corners[nearest];
    auto side_of = [&](const Point& p) {
        return (b.center.x - a.center.x) * (p.y - a.center.y) -
               (b.center.y - a.center.y) * (p.x - a.center.x);
    };
    double st = side_of(target);
    Point p = pts[0];
    double s0 = side_of(pts[0]), s1 = side_of(pts[1]);
    if (st * s0 < 0.0 && st * s1 > 0.0)
        p = pts[1];
    else if (!(st * s0 > 0.0 && st * s1 < 0.0) &&
             dist2(pts[1], target) < dist2(pts[0], target))
        p = pts[1];  // degenerate side test: fall back to distance to the corner
    if (domain.contains(p)) return {p, PlaceCase::SquarelikePair};
    return {domain.clamp(p), PlaceCase::ClampedToBoundary};
}

double expected_edges_mu(std::int64_t n, double r) {
    double sn = std::sqrt(double(n));
    return 0.5 * double(n - 1) * kPi * r * r *
           (1.0 - (8.0 / (3.0 * kPi)) * (r / sn) +
            (1.0 / (2.0 * kPi)) * (r * r / double(n)));
}

REstimate estimate_r(const GeometricGraph& g) {
    if (g.m < 1) throw std::runtime_error("estimate_r: too sparse to estimate r");
    REstimate est;
    est.m_observed = g.m;
    double sn = std::sqrt(double(g.n));
    double M = double(g.m);
    if (M >= expected_edges_mu(g.n, sn)) {
        est.r_hat = sn;
        est.clamped = true;
    } else {
        double lo = 0.0, hi = sn;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            double mu = expected_edges_mu(g.n, mid);
            if (std::abs(mu - M) < 1.0) {
                lo = hi = mid;
                break;
            }
            if (mu < M)
                lo = mid;
            else
                hi = mid;
        }
        est.r_hat = 0.5 * (lo + hi);
    }
    est.rho_hat = sn / est.r_hat;
    return est;
}

std::vector<std::int32_t> bfs_distances(const GeometricGraph& g, std::int32_t src) {
    std::vector<std::int32_t> d(g.n, kUnreachable);
    std::vector<std::int32_t> queue;
    queue.reserve(g.n);
    d[src] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::int32_t v = queue[head];
        for (std::int32_t u : g.neighbors[v])
            if (d[u] == kUnreachable) {
                d[u] = d[v] + 1;
                queue.push_back(u);
            }
    }
    return d;
}

CornerAssignment find_corner_vertices(const GeometricGraph& g) {
    const std::int64_t n = g.n;
    if (n < 5) throw std::runtime_error("find_corner_vertices: need n >= 5");

    // Four minimal-degree picks, marking each pick and its neighborhood.
    // Very dense graphs can mark everything after one pick; then fall back to
    // the lowest-degree vertex not yet picked so the pipeline stays total.
    std::vector<char> marked(n, 0), picked(n, 0);
    std::array<std::int32_t, 4> picks{};
    for (int k = 0; k < 4; ++k) {
        std::int32_t best = -1;
        for (std::int32_t v = 0; v < n; ++v) {
            if (marked[v]) continue;
            if (best == -1 || g.degree(v) < g.degree(best)) best = v;
        }
        if (best == -1)
            for (std::int32_t v = 0; v < n; ++v) {
                if (picked[v]) continue;
                if (best == -1 || g.degree(v) < g.degree(best)) best = v;
            }
        if (best == -1)
            throw std::runtime_error("find_corner_vertices: degree structure degenerate");
        picks[k] = best;
        marked[best] = 1;
        picked[best] = 1;
        for (std::int32_t u : g.neighbors[best]) marked[u] = 1;
    }

    auto d0 = bfs_distances(g, picks[0]);
    for (std::int32_t v = 0; v < n; ++v)
        if (d0[v] == kUnreachable)
            throw std::runtime_error("find_corner_vertices: graph disconnected");

    // The pick farthest (in graph distance) from picks[0] goes opposite it.
    int far_idx = 1;
    for (int k = 2; k < 4; ++k)
        if (d0[picks[k]] > d0[picks[far_idx]]) far_idx = k;

    CornerAssignment assign;
    assign.corner_vertices[0] = picks[0];
    assign.corner_vertices[2] = picks[far_idx];
    int slot = 1;
    for (int k = 1; k < 4; ++k)
        if (k != far_idx) {
            assign.corner_vertices[slot] = picks[k];
            slot += 2;  // slots 1 then 3
        }
    assign.distances[0] = std::move(d0);
    for (int i = 1; i < 4; ++i)
        assign.distances[i] = bfs_distances(g, assign.corner_vertices[i]);
    return assign;
}

int nearest_corner(const CornerAssignment& assign, std::int32_t v) {
    int best = 0;
    for (int i = 0; i < 4; ++i) {
        if (assign.distances[i][v] == kUnreachable)
            throw std::runtime_error("nearest_corner: vertex unreachable from a corner");
        if (assign.distances[i][v] < assign.distances[best][v]) best = i;
    }
    return best;
}

std::pair<Point, PlaceCase> place_vertex_graph(const SquareDomain& domain,
                                               const CornerAssignment& assign,
                                               const REstimate& est,
                                               std::int32_t v) {
    int i0 = nearest_corner(assign, v);
    std::array<Circle, 4> circles;
    for (int i = 0; i < 4; ++i)
        circles[i] = Circle{domain.corners[i],
                            est.r_hat * (double(assign.distances[i][v]) - 0.5)};
    // Among the three pairs avoiding the nearest corner, take the pair whose
    // crossing angle is closest to pi/2.
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

ReconstructionResult reconstruct_from_graph(const GeometricGraph& g) {
    if (g.n < 5) throw std::runtime_error("reconstruct_from_graph: need n >= 5");
    REstimate est = estimate_r(g);
    CornerAssignment assign = find_corner_vertices(g);

    SquareDomain domain(g.n);
    ReconstructionResult res{Embedding{domain, std::vector<Point>(g.n)},
                             est,
                             assign.corner_vertices,
                             std::vector<PlaceCase>(g.n, PlaceCase::SquarelikePair),
                             {}};
    std::vector<char> is_corner(g.n, 0);
    for (int i = 0; i < 4; ++i) {
        std::int32_t vi = assign.corner_vertices[i];
        res.phi.points[vi] = domain.corners[i];
        res.per_vertex_case[vi] = PlaceCase::Corner;
        is_corner[vi] = 1;
    }
    for (std::int32_t v = 0; v < g.n; ++v) {
        if (is_corner[v]) continue;
        auto [p, pc] = place_vertex_graph(domain, assign, est, v);
        res.phi.points[v] = p;
        res.per_vertex_case[v] = pc;
    }
    return res;
}

}  // namespace georec
