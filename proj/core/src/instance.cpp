#include "georec/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace georec {

bool GeometricGraph::has_edge(std::int32_t u, std::int32_t v) const {
    const auto& nb = neighbors[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

// Portable uniform double in [0, 1): 53 random bits scaled.
double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Embedding sample_embedding(std::int64_t n, std::uint64_t seed) {
    if (n < 5)
        throw std::invalid_argument("sample_embedding: n must be at least 5");
    SquareDomain domain(n);
    std::mt19937_64 rng(seed);
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::int64_t i = 0; i < n; ++i) {
        double x = (uniform01(rng) - 0.5) * domain.side;
        double y = (uniform01(rng) - 0.5) * domain.side;
        pts.push_back(Point{x, y});
    }
    return Embedding{domain, std::move(pts)};
}

GeometricGraph build_graph(const Embedding& e, double r) {
    const std::int64_t n = e.n();
    if (!(r > 0.0) || r > e.domain.side * 1.4142135623730951 + 1e-9)
        throw std::invalid_argument("build_graph: r outside (0, sqrt(2n)]");
    GeometricGraph g;
    g.n = n;
    g.r = r;
    g.neighbors.assign(n, {});

    const double side = e.domain.side;
    const double h = side / 2.0;
    const int ncells = std::max<int>(1, int(side / r));
    const double cell = side / ncells;  // >= r
    const double r2 = r * r;

    // Counting sort of vertices into cells.
    auto cell_of = [&](const Point& p) {
        int cx = std::min(ncells - 1, std::max(0, int((p.x + h) / cell)));
        int cy = std::min(ncells - 1, std::max(0, int((p.y + h) / cell)));
        return cy * ncells + cx;
    };
    std::vector<std::int32_t> count(std::size_t(ncells) * ncells + 1, 0);
    for (std::int64_t v = 0; v < n; ++v) count[cell_of(e.points[v]) + 1]++;
    std::partial_sum(count.begin(), count.end(), count.begin());
    std::vector<std::int32_t> bucket(n);
    {
        std::vector<std::int32_t> next(count.begin(), count.end() - 1);
        for (std::int64_t v = 0; v < n; ++v)
            bucket[next[cell_of(e.points[v])]++] = std::int32_t(v);
    }

    std::int64_t m = 0;
    for (int cy = 0; cy < ncells; ++cy) {
        for (int cx = 0; cx < ncells; ++cx) {
            int c = cy * ncells + cx;
            for (std::int32_t i = count[c]; i < count[c + 1]; ++i) {
                std::int32_t v = bucket[i];
                const Point& pv = e.points[v];
                // Same cell (later entries) and the 4 forward-neighbor cells;
                // each unordered pair is tested once.
                auto scan = [&](int c2, std::int32_t from) {
                    for (std::int32_t j = from; j < count[c2 + 1]; ++j) {
                        std::int32_t u = bucket[j];
                        if (dist2(pv, e.points[u]) <= r2) {
                            g.neighbors[v].push_back(u);
                            g.neighbors[u].push_back(v);
                            ++m;
                        }
                    }
                };
                scan(c, i + 1);
                if (cx + 1 < ncells) scan(c + 1, count[c + 1]);
                if (cy + 1 < ncells) {
                    int base = (cy + 1) * ncells + cx;
                    if (cx > 0) scan(base - 1, count[base - 1]);
                    scan(base, count[base]);
                    if (cx + 1 < ncells) scan(base + 1, count[base + 1]);
                }
            }
        }
    }
    g.m = m;
    for (auto& nb : g.neighbors) std::sort(nb.begin(), nb.end());
    return g;
}

GeometricGraph build_graph_bruteforce(const Embedding& e, double r) {
    const std::int64_t n = e.n();
    GeometricGraph g;
    g.n = n;
    g.r = r;
    g.neighbors.assign(n, {});
    const double r2 = r * r;
    for (std::int32_t u = 0; u < n; ++u)
        for (std::int32_t v = u + 1; v < n; ++v)
            if (dist2(e.points[u], e.points[v]) <= r2) {
                g.neighbors[u].push_back(v);
                g.neighbors[v].push_back(u);
                ++g.m;
            }
    return g;
}

OrderingOracle::OrderingOracle(Embedding hidden)
    : n_(hidden.n()), hidden_(std::move(hidden)) {}

OrderingOracle::OrderingOracle(std::int64_t n,
                               std::vector<std::vector<std::int32_t>> orders)
    : n_(n), table_(std::move(orders)) {
    if (std::int64_t(table_.size()) != n)
        throw std::invalid_argument("OrderingOracle: wrong table size");
}

std::int32_t OrderingOracle::far(std::int32_t v) const {
    if (!hidden_) return table_[v].back();
    const auto& pts = hidden_->points;
    std::int32_t best = 0;
    double bestd = -1.0;
    for (std::int32_t u = 0; u < n_; ++u) {
        double d = dist2(pts[v], pts[u]);
        if (d > bestd || (d == bestd && u > best)) {
            bestd = d;
            best = u;
        }
    }
    return best;
}

std::vector<std::int32_t> OrderingOracle::order(std::int32_t v) const {
    if (!hidden_) return table_[v];
    const auto& pts = hidden_->points;
    std::vector<std::int32_t> ids(n_);
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [&](std::int32_t a, std::int32_t b) {
        double da = dist2(pts[v], pts[a]), db = dist2(pts[v], pts[b]);
        if (da != db) return da < db;
        return a < b;
    });
    return ids;
}

std::vector<std::int32_t> OrderingOracle::ranks(std::int32_t v) const {
    auto tau = order(v);
    std::vector<std::int32_t> rank(n_);
    for (std::int32_t k = 0; k < n_; ++k) rank[tau[k]] = k + 1;
    return rank;
}

OrderingOracle build_ordering_oracle(Embedding e) {
    return OrderingOracle(std::move(e));
}

ParseError::ParseError(const std::string& what, std::int64_t line_)
    : std::runtime_error(what + " (line " + std::to_string(line_) + ")"),
      line(line_) {}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_embedding(std::ostream& os, const Embedding& e) {
    os << "embedding " << e.n() << "\n";
    for (std::int64_t i = 0; i < e.n(); ++i)
        os << i << ' ' << fmt_double(e.points[i].x) << ' '
           << fmt_double(e.points[i].y) << "\n";
}

Embedding read_embedding(std::istream& is) {
    std::string tag;
    std::int64_t n = -1;
    if (!(is >> tag >> n) || tag != "embedding" || n <= 0)
        throw ParseError("bad embedding header", 1);
    SquareDomain domain(n);
    std::vector<Point> pts(n);
    for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t id;
        double x, y;
        if (!(is >> id >> x >> y))
            throw ParseError("bad embedding row", i + 2);
        if (id != i) throw ParseError("embedding ids must be 0..n-1 in order", i + 2);
        if (!std::isfinite(x) || !std::isfinite(y))
            throw ParseError("non-finite coordinate", i + 2);
        pts[i] = Point{x, y};
    }
    return Embedding{domain, std::move(pts)};
}

void write_graph(std::ostream& os, const GeometricGraph& g) {
    os << "graph " << g.n << ' ' << g.m << "\n";
    for (std::int32_t u = 0; u < g.n; ++u)
        for (std::int32_t v : g.neighbors[u])
            if (u < v) os << u << ' ' << v << "\n";
}

GeometricGraph read_graph(std::istream& is) {
    std::string tag;
    std::int64_t n = -1, m = -1;
    if (!(is >> tag >> n >> m) || tag != "graph" || n <= 0 || m < 0)
        throw ParseError("bad graph header", 1);
    GeometricGraph g;
    g.n = n;
    g.m = m;
    g.neighbors.assign(n, {});
    for (std::int64_t i = 0; i < m; ++i) {
        std::int64_t u, v;
        if (!(is >> u >> v)) throw ParseError("bad edge row", i + 2);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge endpoint out of range", i + 2);
        if (u >= v) throw ParseError("edges must satisfy u < v", i + 2);
        g.neighbors[u].push_back(std::int32_t(v));
        g.neighbors[v].push_back(std::int32_t(u));
    }
    for (std::int64_t u = 0; u < n; ++u) {
        auto& nb = g.neighbors[u];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw ParseError("duplicate edge", 1);
    }
    return g;
}

void write_orderings(std::ostream& os, const OrderingOracle& oracle) {
    os << "orderings " << oracle.n() << "\n";
    for (std::int32_t v = 0; v < oracle.n(); ++v) {
        os << v;
        for (std::int32_t u : oracle.order(v)) os << ' ' << u;
        os << "\n";
    }
}

OrderingOracle read_orderings(std::istream& is) {
    std::string tag;
    std::int64_t n = -1;
    if (!(is >> tag >> n) || tag != "orderings" || n <= 0)
        throw ParseError("bad orderings header", 1);
    std::vector<std::vector<std::int32_t>> table(n);
    std::vector<char> seen(n);
    for (std::int64_t v = 0; v < n; ++v) {
        std::int64_t id;
        if (!(is >> id) || id != v)
            throw ParseError("ordering rows must be 0..n-1 in order", v + 2);
        auto& row = table[v];
        row.resize(n);
        std::fill(seen.begin(), seen.end(), 0);
        for (std::int64_t k = 0; k < n; ++k) {
            std::int64_t u;
            if (!(is >> u)) throw ParseError("short ordering row", v + 2);
            if (u < 0 || u >= n) throw ParseError("vertex id out of range", v + 2);
            if (seen[u]) throw ParseError("ordering row repeats a vertex", v + 2);
            seen[u] = 1;
            row[k] = std::int32_t(u);
        }
        if (row[0] != v) throw ParseError("ordering row must start with v", v + 2);
    }
    return OrderingOracle(n, std::move(table));
}

namespace {

template <class Fn>
auto with_input(const std::string& path, Fn fn) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return fn(is);
}

template <class Fn>
void with_output(const std::string& path, Fn fn) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    fn(os);
    if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void write_embedding_file(const std::string& path, const Embedding& e) {
    with_output(path, [&](std::ostream& os) { write_embedding(os, e); });
}
Embedding read_embedding_file(const std::string& path) {
    return with_input(path, [](std::istream& is) { return read_embedding(is); });
}
void write_graph_file(const std::string& path, const GeometricGraph& g) {
    with_output(path, [&](std::ostream& os) { write_graph(os, g); });
}
GeometricGraph read_graph_file(const std::string& path) {
    return with_input(path, [](std::istream& is) { return read_graph(is); });
}
void write_orderings_file(const std::string& path, const OrderingOracle& oracle) {
    with_output(path, [&](std::ostream& os) { write_orderings(os, oracle); });
}
OrderingOracle read_orderings_file(const std::string& path) {
    return with_input(path, [](std::istream& is) { return read_orderings(is); });
}

}  // namespace georec
