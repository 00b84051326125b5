#pragma once

#include <map>
#include <set>
#include <thread>

#include "corona/corona_growth.hpp"

namespace corona {

// threads for per-prototile BFS sources; 0 or unset = hardware concurrency
inline unsigned thread_budget() {
    if (const char* env = std::getenv("CORONA_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// eta(p) for lattice periods p: the minimum over prototiles of the lifted
// adjacency-graph distance between a tile and its translate by p. Every
// period reached within graph distance 3M-2 is recorded; that depth covers
// the finite generating set of the corona limit, and extra entries are safe
// because each recorded velocity p/eta(p) lies in the limit polygon.
struct EtaTable {
    int depth = 0;
    std::map<std::pair<int64_t, int64_t>, int> eta;

    int at(int64_t px, int64_t py) const {
        auto it = eta.find({px, py});
        return it == eta.end() ? -1 : it->second;
    }
};

namespace detail {

// flat-grid BFS from (src, 0) to the given depth; grid radius R in cells
inline void eta_bfs_source(const AdjacencyStar& star, int src, int depth, int64_t R,
                           std::map<std::pair<int64_t, int64_t>, int>& out) {
    const int M = star.classes();
    const int64_t W = 2 * R + 1;
    std::vector<int16_t> dist(static_cast<size_t>(W * W * M), -1);
    auto idx = [&](int proto, int64_t x, int64_t y) {
        return static_cast<size_t>((proto * W + (x + R)) * W + (y + R));
    };
    std::vector<std::array<int64_t, 3>> frontier{{src, 0, 0}};
    dist[idx(src, 0, 0)] = 0;
    for (int d = 1; d <= depth; ++d) {
        std::vector<std::array<int64_t, 3>> next;
        for (const auto& [p, x, y] : frontier) {
            for (const StarArc& a : star.arcs[static_cast<size_t>(p)]) {
                int64_t nx = x + a.ox, ny = y + a.oy;
                if (std::llabs(nx) > R || std::llabs(ny) > R) continue;
                size_t k = idx(a.proto, nx, ny);
                if (dist[k] < 0) {
                    dist[k] = static_cast<int16_t>(d);
                    next.push_back({a.proto, nx, ny});
                    if (a.proto == src && (nx != 0 || ny != 0)) {
                        auto key = std::make_pair(nx, ny);
                        auto it = out.find(key);
                        if (it == out.end() || it->second > d) out[key] = d;
                    }
                }
            }
        }
        frontier = std::move(next);
    }
}

}  // namespace detail

// depth_override = 0 uses the canonical depth 3M-2, which suffices for the
// corona limit; deeper tables are only ever needed for diagnostics
inline EtaTable eta_table(const TilingSpec& spec, const AdjacencyStar& star,
                          int depth_override = 0) {
    const int M = spec.classes();
    EtaTable table;
    table.depth = depth_override > 0 ? depth_override : 3 * M - 2;
    const int64_t R = static_cast<int64_t>(table.depth) * star.max_offset();
    std::vector<std::map<std::pair<int64_t, int64_t>, int>> partial(static_cast<size_t>(M));
    unsigned budget = std::min<unsigned>(thread_budget(), static_cast<unsigned>(M));
    if (budget <= 1) {
        for (int src = 0; src < M; ++src)
            detail::eta_bfs_source(star, src, table.depth, R, partial[static_cast<size_t>(src)]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> counter{0};
        for (unsigned t = 0; t < budget; ++t)
            pool.emplace_back([&] {
                for (int src; (src = counter.fetch_add(1)) < M;)
                    detail::eta_bfs_source(star, src, table.depth, R,
                                           partial[static_cast<size_t>(src)]);
            });
        for (auto& th : pool) th.join();
    }
    for (const auto& m : partial)
        for (const auto& [k, d] : m) {
            auto it = table.eta.find(k);
            if (it == table.eta.end() || it->second > d) table.eta[k] = d;
        }
    return table;
}

struct VelocityRecord {
    Vec2 v;             // (basis * p) / eta(p), exact
    int64_t px, py;     // the period in lattice coordinates
    int eta;
};

inline std::vector<VelocityRecord> velocities_from_eta(const TilingSpec& spec,
                                                       const EtaTable& table) {
    std::vector<VelocityRecord> out;
    out.reserve(table.eta.size());
    for (const auto& [p, e] : table.eta) {
        QuarticScalar inv{Rational(1, e)};
        out.push_back({inv * spec.lattice_point(p.first, p.second), p.first, p.second, e});
    }
    return out;
}

// The "walks" enumeration: every walk of e <= M edges from (i,0) to (i,p)
// with p != 0 contributes the velocity (basis*p)/e. Over-enumeration relative
// to minimal linear patches is harmless for the hull: eta(p) <= e, so p/e
// lies on the segment from the origin to p/eta(p), inside the limit.
inline std::vector<Vec2> velocities_linear(const TilingSpec& spec, const AdjacencyStar& star) {
    const int M = spec.classes();
    const int64_t R = static_cast<int64_t>(M) * star.max_offset();
    const int64_t W = 2 * R + 1;
    std::set<std::pair<std::pair<int64_t, int64_t>, int>> hits;  // ((p), e)
    for (int src = 0; src < M; ++src) {
        std::vector<char> layer(static_cast<size_t>(W * W * M), 0);
        auto idx = [&](int proto, int64_t x, int64_t y) {
            return static_cast<size_t>((proto * W + (x + R)) * W + (y + R));
        };
        std::vector<std::array<int64_t, 3>> cur{{src, 0, 0}};
        for (int e = 1; e <= M; ++e) {
            std::vector<std::array<int64_t, 3>> next;
            std::fill(layer.begin(), layer.end(), 0);
            for (const auto& [p, x, y] : cur) {
                for (const StarArc& a : star.arcs[static_cast<size_t>(p)]) {
                    int64_t nx = x + a.ox, ny = y + a.oy;
                    if (std::llabs(nx) > R || std::llabs(ny) > R) continue;
                    size_t k = idx(a.proto, nx, ny);
                    if (!layer[k]) {
                        layer[k] = 1;
                        next.push_back({a.proto, nx, ny});
                        if (a.proto == src && (nx != 0 || ny != 0))
                            hits.insert({{nx, ny}, e});
                    }
                }
            }
            cur = std::move(next);
        }
    }
    std::vector<Vec2> out;
    std::set<std::pair<Rational, Rational>> seen;  // exact dedupe via coordinates
    for (const auto& [p, e] : hits) {
        QuarticScalar inv{Rational(1, e)};
        Vec2 v = inv * spec.lattice_point(p.first, p.second);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Exact corona limit: centrally symmetric convex polygon with the origin
// strictly inside, plus the velocity set that generated it.
struct CoronaLimit {
    std::string tiling;
    AdjacencyKind kind = AdjacencyKind::point;
    int M = 0;
    Polygon hull;
    std::vector<VelocityRecord> velocities;
    EtaTable table;

    CoronaLimit() : hull(Polygon::make({Vec2{QuarticScalar(1), QuarticScalar(0)},
                                        Vec2{QuarticScalar(0), QuarticScalar(1)},
                                        Vec2{QuarticScalar(-1), QuarticScalar(0)},
                                        Vec2{QuarticScalar(0), QuarticScalar(-1)}})) {}
};

namespace detail {

// canonical CCW ordering starting from the lexicographically smallest vertex
inline Polygon canonical_hull(std::vector<Vec2> vs) {
    size_t start = 0;
    for (size_t i = 1; i < vs.size(); ++i)
        if (lex_less(vs[i], vs[start])) start = i;
    std::rotate(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(start), vs.end());
    return Polygon::make(std::move(vs));
}

}  // namespace detail

inline CoronaLimit corona_limit(const TilingSpec& spec, const AdjacencyStar& star) {
    CoronaLimit K;
    K.tiling = spec.name;
    K.kind = star.kind;
    K.M = spec.classes();
    K.table = eta_table(spec, star);
    K.velocities = velocities_from_eta(spec, K.table);
    std::vector<Vec2> pts;
    pts.reserve(K.velocities.size());
    for (const auto& r : K.velocities) pts.push_back(r.v);
    HullResult hr = convex_hull(pts);
    if (hr.degenerate) throw std::logic_error("corona_limit: degenerate velocity hull");
    // the theorem guarantees central symmetry; a failure indicates a star or
    // BFS defect, so it is an internal error, not a data error
    auto contains = [&](const Vec2& v) {
        for (const Vec2& w : hr.points)
            if (w == v) return true;
        return false;
    };
    for (const Vec2& v : hr.points)
        if (!contains(-v)) throw std::logic_error("INTERNAL_ASYMMETRY: corona limit hull");
    K.hull = detail::canonical_hull(hr.points);
    Vec2 origin{QuarticScalar(0), QuarticScalar(0)};
    if (point_in_polygon(origin, K.hull) != Location::inside)
        throw std::logic_error("corona_limit: origin not interior");
    return K;
}

// ---------------------------------------------------------------------------
// certification

struct CertificateCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CertificateReport {
    std::vector<CertificateCheck> checks;
    bool pass = true;

    void add(std::string name, bool ok, std::string detail = "") {
        pass = pass && ok;
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

// Five checks: central symmetry, strict convexity with CCW order, velocity
// containment, triangle inequality on the eta table (all pairs against the
// short periods), and hull vertices being period/eta points.
inline CertificateReport certify(const CoronaLimit& K) {
    CertificateReport rep;

    const auto& vs = K.hull.vertices();
    bool sym = true;
    for (const Vec2& v : vs) {
        bool found = false;
        for (const Vec2& w : vs)
            if (w == -v) { found = true; break; }
        sym = sym && found;
    }
    rep.add("central_symmetry", sym);

    bool convex = true;
    size_t n = vs.size();
    QuarticScalar area2;
    for (size_t i = 0; i < n; ++i) {
        if (orientation(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]) <= 0) convex = false;
        area2 += cross(vs[i], vs[(i + 1) % n]);
    }
    rep.add("convex_ccw", convex && sign(area2) > 0);

    bool inside = true;
    for (const auto& r : K.velocities)
        if (point_in_polygon(r.v, K.hull) == Location::outside) { inside = false; break; }
    rep.add("velocities_inside", inside);

    // triangle inequality eta(p+q) <= eta(p) + eta(q), q over short periods
    bool tri = true;
    std::vector<std::pair<std::pair<int64_t, int64_t>, int>> shorts;
    for (const auto& [p, e] : K.table.eta)
        if (std::llabs(p.first) <= 3 && std::llabs(p.second) <= 3) shorts.push_back({p, e});
    for (const auto& [p, ep] : K.table.eta) {
        for (const auto& [q, eq] : shorts) {
            int es = K.table.at(p.first + q.first, p.second + q.second);
            if (es > ep + eq) { tri = false; break; }
        }
        if (!tri) break;
    }
    rep.add("eta_triangle", tri);

    bool vertex_periods = true;
    for (const Vec2& v : vs) {
        bool found = false;
        for (const auto& r : K.velocities)
            if (r.v == v) { found = true; break; }
        vertex_periods = vertex_periods && found;
    }
    rep.add("vertices_are_period_over_eta", vertex_periods);
    return rep;
}

}  // namespace corona
