#pragma once

#include <optional>
#include <unordered_set>

#include "corona/tiling.hpp"

namespace corona {

// Successive coronas P(0) <= P(1) <= ... of a seed patch. Only the newest
// frontier is stored per step; shell n is the union of rings 0..n.
struct CoronaShells {
    const TilingSpec* spec = nullptr;
    const AdjacencyStar* star = nullptr;
    std::vector<TileId> seed;
    std::vector<std::vector<TileId>> rings;

    int steps() const { return static_cast<int>(rings.size()) - 1; }

    size_t shell_size(int n) const {
        size_t total = 0;
        for (int k = 0; k <= n; ++k) total += rings[static_cast<size_t>(k)].size();
        return total;
    }

    std::vector<TileId> shell(int n) const {
        std::vector<TileId> out;
        out.reserve(shell_size(n));
        for (int k = 0; k <= n; ++k)
            out.insert(out.end(), rings[static_cast<size_t>(k)].begin(),
                       rings[static_cast<size_t>(k)].end());
        return out;
    }

    template <class Fn>
    void for_each_tile(int n, Fn&& fn) const {
        for (int k = 0; k <= n && k < static_cast<int>(rings.size()); ++k)
            for (const TileId& t : rings[static_cast<size_t>(k)]) fn(t);
    }
};

// Frontier BFS: ring(k+1) = neighbors(ring(k)) minus everything seen. This
// realizes P(n+1) = P(n) union neighbors(P(n)) because the relation is
// symmetric: neighbors of older rings are already present.
inline CoronaShells grow(const TilingSpec& spec, const AdjacencyStar& star,
                         std::vector<TileId> seed, int n) {
    if (seed.empty()) throw std::invalid_argument("grow: empty seed");
    if (n < 0) throw std::invalid_argument("grow: negative step count");
    CoronaShells cs;
    cs.spec = &spec;
    cs.star = &star;
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    cs.seed = seed;
    std::unordered_set<TileId, TileIdHash> visited(seed.begin(), seed.end());
    cs.rings.push_back(seed);
    for (int step = 1; step <= n; ++step) {
        std::vector<TileId> next;
        for (const TileId& t : cs.rings.back()) {
            for (const StarArc& a : star.arcs[static_cast<size_t>(t.proto)]) {
                TileId u{a.proto, t.cx + a.ox, t.cy + a.oy};
                if (visited.insert(u).second) next.push_back(u);
            }
        }
        std::sort(next.begin(), next.end());
        cs.rings.push_back(std::move(next));
    }
    return cs;
}

// ---------------------------------------------------------------------------
// support-function machinery (exact; integer cell hulls keep it fast)

namespace detail {

using Cell = std::array<int64_t, 2>;

inline int cell_orient(const Cell& a, const Cell& b, const Cell& c) {
    __int128 v = static_cast<__int128>(b[0] - a[0]) * (c[1] - a[1]) -
                 static_cast<__int128>(b[1] - a[1]) * (c[0] - a[0]);
    return v > 0 ? 1 : v < 0 ? -1 : 0;
}

inline bool cell_less(const Cell& a, const Cell& b) { return a < b; }

// per prototile, the integer hull of the lattice cells present in shell n
inline std::vector<std::vector<Cell>> cell_hulls(const CoronaShells& cs, int n) {
    std::vector<std::vector<Cell>> cells(static_cast<size_t>(cs.spec->classes()));
    cs.for_each_tile(n, [&](const TileId& t) {
        cells[static_cast<size_t>(t.proto)].push_back({t.cx, t.cy});
    });
    for (auto& v : cells)
        if (!v.empty()) v = hull_of<Cell>(std::move(v), cell_orient, cell_less);
    return cells;
}

}  // namespace detail

// Exact support function h(u) = max over shell-n tile vertices of <x,u>.
// The maximum over each prototile's cells of a linear functional is attained
// on the integer hull of the cell set.
inline QuarticScalar shell_support(const CoronaShells& cs,
                                   const std::vector<std::vector<detail::Cell>>& hulls,
                                   const Vec2& u) {
    const TilingSpec& spec = *cs.spec;
    QuarticScalar gx = dot(spec.basis[0], u);
    QuarticScalar gy = dot(spec.basis[1], u);
    bool first = true;
    QuarticScalar best;
    for (int i = 0; i < spec.classes(); ++i) {
        const auto& hc = hulls[static_cast<size_t>(i)];
        if (hc.empty()) continue;
        QuarticScalar mi;
        bool f2 = true;
        for (const Vec2& v : spec.prototiles[static_cast<size_t>(i)].vertices()) {
            QuarticScalar t = dot(v, u);
            if (f2 || sign(t - mi) > 0) {
                mi = t;
                f2 = false;
            }
        }
        for (const auto& c : hc) {
            QuarticScalar t = QuarticScalar(Rational(c[0])) * gx +
                              QuarticScalar(Rational(c[1])) * gy + mi;
            if (first || sign(t - best) > 0) {
                best = t;
                first = false;
            }
        }
    }
    if (first) throw std::logic_error("shell_support: empty shell");
    return best;
}

inline QuarticScalar polygon_support(const Polygon& K, const Vec2& u) {
    bool first = true;
    QuarticScalar best;
    for (const Vec2& v : K.vertices()) {
        QuarticScalar t = dot(v, u);
        if (first || sign(t - best) > 0) {
            best = t;
            first = false;
        }
    }
    return best;
}

// rational upper-ish approximation of sqrt(x) for positive rational x
inline Rational approx_sqrt(const Rational& x, unsigned bits = 64) {
    mpz_class scale = mpz_class(1) << bits;
    mpz_class t = x.num() * x.den() * scale * scale;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
    return Rational(r + 1, x.den() * scale);
}

// 64 exactly-unit rational directions (Pythagorean parametrization of the
// circle) -- the fixed fan used for support-gap sampling
inline std::vector<Vec2> direction_fan(int count = 64) {
    std::vector<Vec2> out;
    out.reserve(static_cast<size_t>(count));
    const long denom = 512;
    for (int k = 0; k < count; ++k) {
        double theta = (2.0 * M_PI * k) / count - M_PI * (1.0 - 1.0 / count);
        long p = std::lround(std::tan(theta / 2) * denom);
        Rational t2(p * p, denom * denom);
        Rational den = Rational(1) + t2;
        Rational ux = (Rational(1) - t2) / den;
        Rational uy = Rational(2 * p, denom) / den;
        out.push_back({QuarticScalar(ux), QuarticScalar(uy)});
    }
    return out;
}

// max over sampled unit-normalized directions of the support difference
// between (shell(n) - center)/n and the convex body K; exact evaluation,
// rational output. center defaults to the origin; pass the seed's anchor to
// compare a corona grown away from the origin on fair terms.
inline Rational support_gap(const CoronaShells& cs, int n, const Polygon& K,
                            const std::vector<Vec2>& directions,
                            const Vec2& center = Vec2{QuarticScalar(0), QuarticScalar(0)}) {
    if (directions.empty()) throw std::invalid_argument("support_gap: no directions");
    auto hulls = detail::cell_hulls(cs, n);
    Rational best(0);
    Rational inv_n(1, n);
    for (const Vec2& u : directions) {
        QuarticScalar diff = QuarticScalar(inv_n) * (shell_support(cs, hulls, u) - dot(center, u)) -
                             polygon_support(K, u);
        if (sign(diff) < 0) diff = -diff;
        Rational d = approximate(diff, Rational(1, mpz_class(1) << 40));
        QuarticScalar u2 = norm2(u);
        if (!(u2.is_rational() && u2.a == Rational(1)))
            d = d / approx_sqrt(approximate(u2, Rational(1, mpz_class(1) << 40)));
        if (d > best) best = d;
    }
    return best;
}

// mutual gap between two scaled coronas (seed independence measurements)
inline Rational support_gap(const CoronaShells& a, const CoronaShells& b, int n,
                            const std::vector<Vec2>& directions) {
    auto ha = detail::cell_hulls(a, n);
    auto hb = detail::cell_hulls(b, n);
    Rational best(0);
    Rational inv_n(1, n);
    for (const Vec2& u : directions) {
        QuarticScalar diff = shell_support(a, ha, u) - shell_support(b, hb, u);
        if (sign(diff) < 0) diff = -diff;
        Rational d = approximate(diff, Rational(1, mpz_class(1) << 40)) * inv_n;
        QuarticScalar u2 = norm2(u);
        if (!(u2.is_rational() && u2.a == Rational(1)))
            d = d / approx_sqrt(approximate(u2, Rational(1, mpz_class(1) << 40)));
        if (d > best) best = d;
    }
    return best;
}

// ---------------------------------------------------------------------------
// directional reach

struct SpeedEstimate {
    Vec2 direction;
    int n = 0;
    QuarticScalar sigma;  // max t with t*v in supp(shell n), exact
    Rational ratio;       // approximation of sigma/n
};

namespace detail {

inline bool seed_contains_origin(const CoronaShells& cs) {
    Vec2 origin{QuarticScalar(0), QuarticScalar(0)};
    for (const TileId& t : cs.seed)
        if (point_in_polygon(origin, tile_polygon(*cs.spec, t)) != Location::outside)
            return true;
    return false;
}

}  // namespace detail

// sigma(n) = max { t >= 0 : t*v in supp(P(n)) }, computed exactly. A float
// band prefilter discards tiles provably missing the ray; survivors get the
// exact ray_exit test.
inline SpeedEstimate directional_reach(const CoronaShells& cs, const Vec2& v, int n) {
    if (v.is_zero()) throw std::invalid_argument("directional_reach: zero direction");
    if (n < 0 || n > cs.steps()) throw std::invalid_argument("directional_reach: bad n");
    if (!detail::seed_contains_origin(cs))
        throw std::domain_error("directional_reach: seed does not contain the origin");
    const TilingSpec& spec = *cs.spec;
    double vx = to_double(v.x), vy = to_double(v.y);
    double nv = std::sqrt(vx * vx + vy * vy);
    vx /= nv;
    vy /= nv;
    std::vector<detail::ProtoBounds> bounds;
    for (const Polygon& p : spec.prototiles) bounds.push_back(detail::proto_bounds(p));
    double b00 = to_double(spec.basis[0].x), b01 = to_double(spec.basis[1].x);
    double b10 = to_double(spec.basis[0].y), b11 = to_double(spec.basis[1].y);

    QuarticScalar sigma(0);
    cs.for_each_tile(n, [&](const TileId& t) {
        const auto& b = bounds[static_cast<size_t>(t.proto)];
        double cx = b00 * t.cx + b01 * t.cy + b.fref_x;
        double cy = b10 * t.cx + b11 * t.cy + b.fref_y;
        double slack = b.fradius + 0.5;
        if (std::abs(vx * cy - vy * cx) > slack) return;      // off the ray line
        if (vx * cx + vy * cy < -slack) return;               // behind the origin
        auto exit = ray_exit(tile_polygon(spec, t), v);
        if (exit && sign(*exit - sigma) > 0) sigma = *exit;
    });
    SpeedEstimate est;
    est.direction = v;
    est.n = n;
    est.sigma = sigma;
    est.ratio = n == 0 ? Rational(0)
                       : approximate(sigma, Rational(1, mpz_class(1) << 40)) * Rational(1, n);
    return est;
}

// Distance from the origin to the boundary of supp(shell n): the minimum
// over tile edges not shared with another shell tile. Needs an edge-kind
// star to identify shared edges.
inline double inradius_from_origin(const TilingSpec& spec, const AdjacencyStar& edge_star,
                                   const CoronaShells& cs, int n) {
    std::unordered_set<TileId, TileIdHash> inside;
    cs.for_each_tile(n, [&](const TileId& t) { inside.insert(t); });
    double best = 1e300;
    Vec2 origin{QuarticScalar(0), QuarticScalar(0)};
    cs.for_each_tile(n, [&](const TileId& t) {
        Polygon poly = tile_polygon(spec, t);
        for (size_t e = 0; e < poly.size(); ++e) {
            Segment seg = poly.edge(e);
            bool shared = false;
            for (const StarArc& a : edge_star.arcs[static_cast<size_t>(t.proto)]) {
                TileId u{a.proto, t.cx + a.ox, t.cy + a.oy};
                if (!inside.count(u)) continue;
                Polygon up = tile_polygon(spec, u);
                for (size_t f = 0; f < up.size() && !shared; ++f)
                    if (positive_overlap(seg, up.edge(f))) shared = true;
                if (shared) break;
            }
            if (shared) continue;
            Vec2 d = seg.q - seg.p;
            QuarticScalar t_par = dot(origin - seg.p, d);
            QuarticScalar len2 = norm2(d);
            QuarticScalar d2;
            if (sign(t_par) <= 0)
                d2 = norm2(seg.p);
            else if (sign(t_par - len2) >= 0)
                d2 = norm2(seg.q);
            else {
                QuarticScalar c = cross(d, origin - seg.p);
                d2 = c * c / len2;
            }
            best = std::min(best, std::sqrt(to_double(d2)));
        }
    });
    return best;
}

struct StarSample {
    Vec2 direction;
    QuarticScalar sigma;  // exact reach at step n
    double x = 0, y = 0;  // sample sigma/n placed along direction/|direction|
};

// boundary samples { (sigma(n)/n) * v/|v| } per direction (norm applied only
// in the floating-point placement; the exact reach is retained)
inline std::vector<StarSample> reconstruct_star_shape(const CoronaShells& cs,
                                                      const std::vector<Vec2>& directions,
                                                      int n) {
    std::vector<StarSample> out;
    out.reserve(directions.size());
    for (const Vec2& v : directions) {
        SpeedEstimate est = directional_reach(cs, v, n);
        double vx = to_double(v.x), vy = to_double(v.y);
        double nv = std::sqrt(vx * vx + vy * vy);
        double r = est.ratio.to_double();
        out.push_back({v, est.sigma, r * vx / nv, r * vy / nv});
    }
    return out;
}

}  // namespace corona
