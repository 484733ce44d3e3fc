// Planar primitives over the square domain: disk/square areas, the corner
// area function and its inverse, circle intersections, square symmetries,
// and the displacement metrics used to compare embeddings.
#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace georec {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double dist(const Point& a, const Point& b);
double dist2(const Point& a, const Point& b);

/// The square [-sqrt(n)/2, sqrt(n)/2]^2 of area n, with corners listed
/// clockwise from the bottom left: c1, c2, c3, c4.
struct SquareDomain {
    explicit SquareDomain(std::int64_t n);

    std::int64_t n;
    double side;
    std::array<Point, 4> corners;  // 0-based: corners[i] is c_{i+1}

    bool contains(const Point& p) const;
    // Orthogonal projection onto the closed square.
    Point clamp(const Point& p) const;
};

/// One of the 8 symmetries of the square centred at the origin.
/// Indices 0..3 are rotations by 0, 90, 180, 270 degrees; 4..7 are the
/// reflection (x,y) -> (x,-y) followed by the same rotations.
struct SquareSymmetry {
    int index = 0;
    Point apply(const Point& p) const;
};

std::array<SquareSymmetry, 8> all_square_symmetries();

struct Circle {
    Point center;
    double radius = 0.0;
};

// Area of B(center, radius) intersected with the square. Exact up to
// floating round-off (circular segments against the four sides plus corner
// corrections, by inclusion-exclusion). Throws std::domain_error if the
// center is outside the closed square.
double ball_square_area(const SquareDomain& domain, const Point& center,
                        double radius);

// lambda(s): area of the unit square within distance s of a fixed corner.
// Strictly increasing bijection [0, sqrt(2)] -> [0, 1].
double corner_area_lambda(double s);

// psi(s) = asin(2/s^2 - 1) for s in [1, sqrt(2)], the angle subtended at the
// corner by the curved boundary arc.
double corner_opening_psi(double s);

// Inverse of corner_area_lambda, by bisection to 1e-12.
double corner_distance_s(double t);

// s_n(k): the radius around a corner of the area-n square enclosing area k.
double rank_radius_sn(const SquareDomain& domain, double k);

// Common points of two circles, sorted by x then y. Empty when disjoint or
// nested; throws std::domain_error for concentric circles.
std::vector<Point> circle_intersections(const Circle& a, const Circle& b);

// Angle between the two radius vectors at an intersection point, in [0, pi].
// Throws std::domain_error if the circles do not cross.
double intersection_angle(const Circle& a, const Circle& b);

/// Vertex -> point map over a square domain. Vertices are 0..n-1.
struct Embedding {
    SquareDomain domain;
    std::vector<Point> points;

    std::int64_t n() const { return static_cast<std::int64_t>(points.size()); }
};

// Max over vertices of the Euclidean displacement between the two maps.
double displacement_dmax(const Embedding& a, const Embedding& b);

// Symmetry-adjusted sup distance: min over the 8 square symmetries sigma of
// d_max(sigma o a, b), together with the minimising symmetry.
std::pair<double, SquareSymmetry> displacement_dstar(const Embedding& a,
                                                     const Embedding& b,
                                                     const SquareDomain& domain);

}  // namespace georec
