#include "georec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace georec {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Antiderivative of sqrt(r^2 - t^2).
double half_disk_int(double t, double r) {
    t = std::clamp(t, -r, r);
    return 0.5 * (t * std::sqrt(std::max(r * r - t * t, 0.0)) +
                  r * r * std::asin(t / r));
}

// Area of the disk of radius r centred at the origin intersected with the
// quarter-plane {X <= x, Y <= y}.
double disk_quarterplane_area(double x, double y, double r) {
    if (r <= 0.0) return 0.0;
    double X = std::clamp(x, -r, r);
    if (X <= -r || y <= -r) return 0.0;
    if (y >= r) {
        // Only the half-plane X <= x cuts the disk.
        return 2.0 * (half_disk_int(X, r) - half_disk_int(-r, r));
    }
    double w = std::sqrt(std::max(r * r - y * y, 0.0));
    double area = 0.0;
    if (y >= 0.0) {
        double t1 = std::min(X, -w);
        if (t1 > -r) area += 2.0 * (half_disk_int(t1, r) - half_disk_int(-r, r));
        if (X > -w) {
            double t2 = std::min(X, w);
            area += y * (t2 + w) + (half_disk_int(t2, r) - half_disk_int(-w, r));
        }
        if (X > w) area += 2.0 * (half_disk_int(X, r) - half_disk_int(w, r));
    } else {
        if (X > -w) {
            double t2 = std::min(X, w);
            area += y * (t2 + w) + (half_disk_int(t2, r) - half_disk_int(-w, r));
        }
    }
    return std::max(area, 0.0);
}

}  // namespace

double dist2(const Point& a, const Point& b) {
    double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double dist(const Point& a, const Point& b) { return std::sqrt(dist2(a, b)); }

SquareDomain::SquareDomain(std::int64_t n_) : n(n_), side(std::sqrt(double(n_))) {
    if (n <= 0) throw std::domain_error("SquareDomain: n must be positive");
    double h = side / 2.0;
    corners = {Point{-h, -h}, Point{-h, h}, Point{h, h}, Point{h, -h}};
}

bool SquareDomain::contains(const Point& p) const {
    double h = side / 2.0;
    return p.x >= -h && p.x <= h && p.y >= -h && p.y <= h;
}

Point SquareDomain::clamp(const Point& p) const {
    double h = side / 2.0;
    return Point{std::clamp(p.x, -h, h), std::clamp(p.y, -h, h)};
}

Point SquareSymmetry::apply(const Point& p) const {
    double x = p.x, y = p.y;
    if (index >= 4) y = -y;
    switch (index % 4) {
        case 0: return Point{x, y};
        case 1: return Point{-y, x};
        case 2: return Point{-x, -y};
        default: return Point{y, -x};
    }
}

std::array<SquareSymmetry, 8> all_square_symmetries() {
    std::array<SquareSymmetry, 8> out;
    for (int i = 0; i < 8; ++i) out[i] = SquareSymmetry{i};
    return out;
}

double ball_square_area(const SquareDomain& domain, const Point& center,
                        double radius) {
    if (!domain.contains(center))
        throw std::domain_error("ball_square_area: center outside the square");
    if (!(radius >= 0.0) || !std::isfinite(radius))
        throw std::domain_error("ball_square_area: bad radius");
    if (radius == 0.0) return 0.0;
    double h = domain.side / 2.0;
    // Rectangle corners relative to the disk center; inclusion-exclusion over
    // the four quarter-planes.
    double x0 = -h - center.x, x1 = h - center.x;
    double y0 = -h - center.y, y1 = h - center.y;
    double area = disk_quarterplane_area(x1, y1, radius) -
                  disk_quarterplane_area(x0, y1, radius) -
                  disk_quarterplane_area(x1, y0, radius) +
                  disk_quarterplane_area(x0, y0, radius);
    return std::clamp(area, 0.0, std::min(kPi * radius * radius, double(domain.n)));
}

namespace {
constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kEdgeTol = 1e-12;
}  // namespace

double corner_opening_psi(double s) {
    if (s < 1.0 - kEdgeTol || s > kSqrt2 + kEdgeTol)
        throw std::domain_error("corner_opening_psi: s outside [1, sqrt(2)]");
    s = std::clamp(s, 1.0, kSqrt2);
    return std::asin(std::clamp(2.0 / (s * s) - 1.0, -1.0, 1.0));
}

double corner_area_lambda(double s) {
    if (s < -kEdgeTol || s > kSqrt2 + kEdgeTol)
        throw std::domain_error("corner_area_lambda: s outside [0, sqrt(2)]");
    s = std::clamp(s, 0.0, kSqrt2);
    if (s <= 1.0) return 0.25 * kPi * s * s;
    return 0.5 * s * s * corner_opening_psi(s) + std::sqrt(s * s - 1.0);
}

double corner_distance_s(double t) {
    if (t < -kEdgeTol || t > 1.0 + kEdgeTol)
        throw std::domain_error("corner_distance_s: t outside [0, 1]");
    t = std::clamp(t, 0.0, 1.0);
    double lo = 0.0, hi = kSqrt2;
    while (hi - lo > 1e-13) {
        double mid = 0.5 * (lo + hi);
        if (corner_area_lambda(mid) < t)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double rank_radius_sn(const SquareDomain& domain, double k) {
    if (k < 0.0 || k > double(domain.n))
        throw std::domain_error("rank_radius_sn: k outside [0, n]");
    return corner_distance_s(k / double(domain.n)) * domain.side;
}

std::vector<Point> circle_intersections(const Circle& a, const Circle& b) {
    double d2 = dist2(a.center, b.center);
    if (d2 == 0.0)
        throw std::domain_error("circle_intersections: concentric circles");
    double d = std::sqrt(d2);
    double ra = a.radius, rb = b.radius;
    if (d > ra + rb || d < std::abs(ra - rb)) return {};
    // Foot of the radical axis along the center line.
    double t = (d2 + ra * ra - rb * rb) / (2.0 * d);
    double h2 = ra * ra - t * t;
    double h = std::sqrt(std::max(h2, 0.0));
    double ux = (b.center.x - a.center.x) / d;
    double uy = (b.center.y - a.center.y) / d;
    Point base{a.center.x + t * ux, a.center.y + t * uy};
    if (h == 0.0) return {base};
    Point p1{base.x - h * uy, base.y + h * ux};
    Point p2{base.x + h * uy, base.y - h * ux};
    if (p2.x < p1.x || (p2.x == p1.x && p2.y < p1.y)) std::swap(p1, p2);
    return {p1, p2};
}

double intersection_angle(const Circle& a, const Circle& b) {
    double d2 = dist2(a.center, b.center);
    if (d2 == 0.0) throw std::domain_error("intersection_angle: concentric circles");
    double d = std::sqrt(d2);
    double ra = a.radius, rb = b.radius;
    if (d >= ra + rb || d <= std::abs(ra - rb) || ra == 0.0 || rb == 0.0)
        throw std::domain_error("intersection_angle: circles do not cross");
    // Law of cosines at an intersection point: sides ra, rb, opposite d.
    double c = (ra * ra + rb * rb - d2) / (2.0 * ra * rb);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

double displacement_dmax(const Embedding& a, const Embedding& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("displacement_dmax: mismatched vertex sets");
    double m = 0.0;
    for (std::size_t i = 0; i < a.points.size(); ++i)
        m = std::max(m, dist2(a.points[i], b.points[i]));
    return std::sqrt(m);
}

std::pair<double, SquareSymmetry> displacement_dstar(const Embedding& a,
                                                     const Embedding& b,
                                                     const SquareDomain& domain) {
    if (a.n() != b.n())
        throw std::invalid_argument("displacement_dstar: mismatched vertex sets");
    double best = std::numeric_limits<double>::infinity();
    SquareSymmetry argmin{0};
    for (const auto& sym : all_square_symmetries()) {
        double m = 0.0;
        for (std::size_t i = 0; i < a.points.size(); ++i) {
            m = std::max(m, dist2(sym.apply(a.points[i]), b.points[i]));
            if (m >= best) break;
        }
        if (m < best) {
            best = m;
            argmin = sym;
        }
    }
    (void)domain;
    return {std::sqrt(best), argmin};
}

}  // namespace georec
