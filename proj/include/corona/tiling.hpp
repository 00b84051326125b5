#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "corona/geometry.hpp"

namespace corona {

// Lattice-periodic tiling: period basis plus one prototile polygon per
// translation class. The infinite tiling is { prototile[i] + basis*z }.
struct TilingSpec {
    std::string name;
    std::array<Vec2, 2> basis;
    std::vector<Polygon> prototiles;

    int classes() const { return static_cast<int>(prototiles.size()); }

    Vec2 lattice_point(int64_t cx, int64_t cy) const {
        return QuarticScalar(Rational(cx)) * basis[0] + QuarticScalar(Rational(cy)) * basis[1];
    }
};

struct TileId {
    int32_t proto = 0;
    int64_t cx = 0, cy = 0;

    friend bool operator==(const TileId&, const TileId&) = default;
    friend bool operator<(const TileId& a, const TileId& b) {
        if (a.proto != b.proto) return a.proto < b.proto;
        if (a.cx != b.cx) return a.cx < b.cx;
        return a.cy < b.cy;
    }
};

struct TileIdHash {
    size_t operator()(const TileId& t) const {
        uint64_t h = static_cast<uint64_t>(t.proto);
        h = h * 0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(t.cx + (1LL << 40));
        h = h * 0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(t.cy + (1LL << 40));
        h ^= h >> 29;
        return static_cast<size_t>(h * 0x9e3779b97f4a7c15ULL);
    }
};

inline Polygon tile_polygon(const TilingSpec& spec, const TileId& id) {
    return spec.prototiles[static_cast<size_t>(id.proto)].translated(
        spec.lattice_point(id.cx, id.cy));
}

enum class AdjacencyKind { point, edge };

inline const char* to_string(AdjacencyKind k) {
    return k == AdjacencyKind::point ? "point" : "edge";
}

struct StarArc {
    int32_t proto;
    int64_t ox, oy;
    friend bool operator==(const StarArc&, const StarArc&) = default;
    friend bool operator<(const StarArc& a, const StarArc& b) {
        if (a.proto != b.proto) return a.proto < b.proto;
        if (a.ox != b.ox) return a.ox < b.ox;
        return a.oy < b.oy;
    }
};

// Quotient of the adjacency relation: per prototile, the finite list of
// neighboring (prototile, lattice offset) pairs. (i,(0,0)) ~ (j,o) for every
// arc (j,o) of star(i); translation invariance makes this the whole relation.
struct AdjacencyStar {
    AdjacencyKind kind = AdjacencyKind::point;
    std::vector<std::vector<StarArc>> arcs;

    int classes() const { return static_cast<int>(arcs.size()); }
    int64_t max_offset() const {
        int64_t m = 1;
        for (const auto& v : arcs)
            for (const auto& a : v)
                m = std::max({m, static_cast<int64_t>(std::llabs(a.ox)),
                              static_cast<int64_t>(std::llabs(a.oy))});
        return m;
    }
};

inline std::vector<TileId> neighbors(const AdjacencyStar& star, const TileId& id) {
    std::vector<TileId> out;
    const auto& v = star.arcs[static_cast<size_t>(id.proto)];
    out.reserve(v.size());
    for (const StarArc& a : v) out.push_back({a.proto, id.cx + a.ox, id.cy + a.oy});
    return out;
}

// ---------------------------------------------------------------------------
// validation

enum class Diag {
    DEGENERATE_BASIS,
    AREA_MISMATCH,
    OVERLAP,
    NONSIMPLE_POLYGON,
    STAR_DISCONNECTED,
};

inline const char* to_string(Diag d) {
    switch (d) {
        case Diag::DEGENERATE_BASIS: return "DEGENERATE_BASIS";
        case Diag::AREA_MISMATCH: return "AREA_MISMATCH";
        case Diag::OVERLAP: return "OVERLAP";
        case Diag::NONSIMPLE_POLYGON: return "NONSIMPLE_POLYGON";
        case Diag::STAR_DISCONNECTED: return "STAR_DISCONNECTED";
    }
    return "?";
}

struct ValidationReport {
    bool ok = false;
    std::vector<std::pair<Diag, std::string>> issues;
    // witnessed Delone bounds: every prototile contains a ball of radius s
    // and fits in a ball of radius S (squared values are exact)
    QuarticScalar s_squared, S_squared;
    double s_bound = 0, S_bound = 0;
    QuarticScalar cell_area;
    QuarticScalar tile_area_sum;
};

namespace detail {

// reference point + exact squared bounding radius (works for any polygon)
struct ProtoBounds {
    Vec2 ref;
    QuarticScalar radius2;
    double fref_x, fref_y, fradius;
};

inline ProtoBounds proto_bounds(const Polygon& p) {
    QuarticScalar inv_n{Rational(1, static_cast<long>(p.size()))};
    Vec2 ref{QuarticScalar(0), QuarticScalar(0)};
    for (const Vec2& v : p.vertices()) ref = ref + v;
    ref = inv_n * ref;
    QuarticScalar r2;
    for (const Vec2& v : p.vertices()) {
        QuarticScalar d2 = norm2(v - ref);
        if (sign(d2 - r2) > 0) r2 = d2;
    }
    return {ref, r2, to_double(ref.x), to_double(ref.y), std::sqrt(to_double(r2)) + 1e-9};
}

inline bool is_convex(const Polygon& p) {
    size_t n = p.size();
    for (size_t i = 0; i < n; ++i)
        if (orientation(p[i], p[(i + 1) % n], p[(i + 2) % n]) < 0) return false;
    return true;
}

// exact separating-axis test: do the open interiors of convex P, Q intersect?
inline bool convex_interiors_overlap(const Polygon& P, const Polygon& Q) {
    for (const Polygon* poly : {&P, &Q}) {
        size_t n = poly->size();
        for (size_t i = 0; i < n; ++i) {
            Vec2 e = (*poly)[(i + 1) % n] - (*poly)[i];
            Vec2 axis{-e.y, e.x};
            bool first;
            QuarticScalar lo1, hi1, lo2, hi2;
            first = true;
            for (const Vec2& v : P.vertices()) {
                QuarticScalar t = dot(v, axis);
                if (first) { lo1 = hi1 = t; first = false; continue; }
                if (sign(t - lo1) < 0) lo1 = t;
                if (sign(t - hi1) > 0) hi1 = t;
            }
            first = true;
            for (const Vec2& v : Q.vertices()) {
                QuarticScalar t = dot(v, axis);
                if (first) { lo2 = hi2 = t; first = false; continue; }
                if (sign(t - lo2) < 0) lo2 = t;
                if (sign(t - hi2) > 0) hi2 = t;
            }
            if (sign(lo2 - hi1) >= 0 || sign(lo1 - hi2) >= 0) return false;
        }
    }
    return true;
}

// a point strictly interior to a simple polygon
inline Vec2 interior_point(const Polygon& P) {
    if (is_convex(P)) {
        QuarticScalar inv_n{Rational(1, static_cast<long>(P.size()))};
        Vec2 c{QuarticScalar(0), QuarticScalar(0)};
        for (const Vec2& v : P.vertices()) c = c + v;
        return inv_n * c;
    }
    // lowest-leftmost vertex v with neighbors a,b; either the midpoint of ab
    // or halfway toward the deepest reflex vertex inside triangle (a,v,b)
    size_t n = P.size(), iv = 0;
    for (size_t i = 1; i < n; ++i)
        if (lex_less(P[i], P[iv])) iv = i;
    const Vec2& a = P[(iv + n - 1) % n];
    const Vec2& v = P[iv];
    const Vec2& b = P[(iv + 1) % n];
    bool found = false;
    Vec2 best;
    QuarticScalar best_depth;
    for (size_t i = 0; i < n; ++i) {
        if (i == iv || i == (iv + 1) % n || i == (iv + n - 1) % n) continue;
        const Vec2& qp = P[i];
        if (orientation(a, v, qp) > 0 && orientation(v, b, qp) > 0 && orientation(b, a, qp) > 0) {
            QuarticScalar depth = cross(a - b, qp - b).is_zero()
                                      ? QuarticScalar(0)
                                      : cross(a - b, qp - b) * cross(a - b, qp - b);
            if (!found || sign(depth - best_depth) > 0) {
                best = qp;
                best_depth = depth;
                found = true;
            }
        }
    }
    QuarticScalar half{Rational(1, 2)};
    if (!found) return half * (a + b);
    return half * (v + best);
}

// interior-overlap test for arbitrary simple polygons: proper edge crossing,
// or a boundary fragment midpoint of one strictly inside the other, or an
// interior sample inside the other
inline bool general_interiors_overlap(const Polygon& P, const Polygon& Q) {
    auto fragments_inside = [](const Polygon& A, const Polygon& B) {
        size_t n = A.size();
        for (size_t i = 0; i < n; ++i) {
            Segment e = A.edge(i);
            Vec2 d = e.q - e.p;
            std::vector<QuarticScalar> params{QuarticScalar(0), QuarticScalar(1)};
            size_t m = B.size();
            for (size_t j = 0; j < m; ++j) {
                Segment f = B.edge(j);
                Vec2 g = f.q - f.p;
                QuarticScalar denom = cross(d, g);
                if (sign(denom) != 0) {
                    QuarticScalar t = cross(f.p - e.p, g) / denom;
                    QuarticScalar s = cross(f.p - e.p, d) / denom;
                    if (sign(t) >= 0 && sign(QuarticScalar(1) - t) >= 0 &&
                        sign(s) >= 0 && sign(QuarticScalar(1) - s) >= 0)
                        params.push_back(t);
                } else if (orientation(e.p, e.q, f.p) == 0) {
                    QuarticScalar len2 = norm2(d);
                    for (const Vec2* fp : {&f.p, &f.q}) {
                        QuarticScalar t = dot(*fp - e.p, d) / len2;
                        if (sign(t) >= 0 && sign(QuarticScalar(1) - t) >= 0) params.push_back(t);
                    }
                }
            }
            std::sort(params.begin(), params.end(), numeric_less);
            QuarticScalar half{Rational(1, 2)};
            for (size_t k = 0; k + 1 < params.size(); ++k) {
                if (sign(params[k + 1] - params[k]) <= 0) continue;
                Vec2 mid = e.p + (half * (params[k] + params[k + 1])) * d;
                if (point_in_polygon(mid, B) == Location::inside) return true;
            }
        }
        return false;
    };
    if (fragments_inside(P, Q) || fragments_inside(Q, P)) return true;
    return point_in_polygon(interior_point(P), Q) == Location::inside ||
           point_in_polygon(interior_point(Q), P) == Location::inside;
}

inline bool interiors_overlap(const Polygon& P, const Polygon& Q) {
    if (is_convex(P) && is_convex(Q)) return convex_interiors_overlap(P, Q);
    return general_interiors_overlap(P, Q);
}

// largest ball inside a convex polygon around its vertex average; for
// nonconvex tiles this is still a valid inner-ball witness when positive
inline QuarticScalar inner_radius2(const Polygon& p, const Vec2& ref) {
    QuarticScalar best;
    bool first = true;
    size_t n = p.size();
    for (size_t i = 0; i < n; ++i) {
        Vec2 e = p[(i + 1) % n] - p[i];
        QuarticScalar c = cross(e, ref - p[i]);
        QuarticScalar d2 = c * c / norm2(e);
        if (first || sign(d2 - best) < 0) {
            best = d2;
            first = false;
        }
    }
    return best;
}

}  // namespace detail

// Checks that the spec defines a genuine tiling: nonzero basis determinant,
// prototile areas summing to the fundamental-domain area, and pairwise
// interior-disjointness over a 5x5 block of lattice translates. Area balance
// plus interior-disjointness forces the translates to cover the plane (any
// uncovered region would make the per-cell tile area fall short), so the two
// checks together certify the covering property.
inline ValidationReport validate(const TilingSpec& spec) {
    ValidationReport rep;
    QuarticScalar det = cross(spec.basis[0], spec.basis[1]);
    if (sign(det) == 0) {
        rep.issues.push_back({Diag::DEGENERATE_BASIS, "basis vectors are parallel"});
        return rep;
    }
    rep.cell_area = sign(det) > 0 ? det : -det;
    for (const Polygon& p : spec.prototiles) rep.tile_area_sum += polygon_area(p);
    if (rep.tile_area_sum != rep.cell_area)
        rep.issues.push_back({Diag::AREA_MISMATCH,
                              "prototile areas sum to " + render_decimal(rep.tile_area_sum) +
                                  ", fundamental domain has area " + render_decimal(rep.cell_area)});

    // Delone bounds: S from bounding radii, s from inscribed balls
    bool first = true;
    for (const Polygon& p : spec.prototiles) {
        auto b = detail::proto_bounds(p);
        QuarticScalar s2 = detail::inner_radius2(p, detail::interior_point(p));
        if (first) {
            rep.S_squared = b.radius2;
            rep.s_squared = s2;
            first = false;
        } else {
            if (sign(b.radius2 - rep.S_squared) > 0) rep.S_squared = b.radius2;
            if (sign(s2 - rep.s_squared) < 0) rep.s_squared = s2;
        }
    }
    rep.S_bound = std::sqrt(to_double(rep.S_squared));
    rep.s_bound = std::sqrt(to_double(rep.s_squared));

    // overlap audit on a 5x5 block
    struct Entry {
        Polygon poly;
        double x, y, r;
    };
    std::vector<Entry> block;
    for (int i = 0; i < spec.classes(); ++i) {
        for (int64_t zx = -2; zx <= 2 && rep.issues.empty(); ++zx) {
            for (int64_t zy = -2; zy <= 2; ++zy) {
                Polygon t = tile_polygon(spec, {i, zx, zy});
                auto b = detail::proto_bounds(t);
                block.push_back({std::move(t), b.fref_x, b.fref_y, b.fradius});
            }
        }
    }
    for (size_t i = 0; i < block.size(); ++i) {
        for (size_t j = i + 1; j < block.size(); ++j) {
            double dx = block[i].x - block[j].x, dy = block[i].y - block[j].y;
            double rr = block[i].r + block[j].r + 1e-6;
            if (dx * dx + dy * dy > rr * rr) continue;
            if (detail::interiors_overlap(block[i].poly, block[j].poly)) {
                rep.issues.push_back({Diag::OVERLAP, "tiles " + std::to_string(i) + " and " +
                                                         std::to_string(j) + " in the 5x5 block overlap"});
                rep.ok = false;
                return rep;
            }
        }
    }
    rep.ok = rep.issues.empty();
    return rep;
}

// ---------------------------------------------------------------------------
// adjacency star

namespace detail {

inline bool polygons_touch(const Polygon& P, const Polygon& Q) {
    // conservative per-segment bounding boxes keep the exact tests rare
    auto boxes = [](const Polygon& A) {
        std::vector<std::array<double, 4>> out(A.size());
        for (size_t i = 0; i < A.size(); ++i) {
            Segment e = A.edge(i);
            double x0 = to_double(e.p.x), y0 = to_double(e.p.y);
            double x1 = to_double(e.q.x), y1 = to_double(e.q.y);
            out[i] = {std::min(x0, x1) - 1e-9, std::min(y0, y1) - 1e-9,
                      std::max(x0, x1) + 1e-9, std::max(y0, y1) + 1e-9};
        }
        return out;
    };
    auto bp = boxes(P), bq = boxes(Q);
    for (size_t i = 0; i < P.size(); ++i) {
        for (size_t j = 0; j < Q.size(); ++j) {
            if (bp[i][0] > bq[j][2] || bq[j][0] > bp[i][2] ||
                bp[i][1] > bq[j][3] || bq[j][1] > bp[i][3])
                continue;
            if (segments_touch(P.edge(i), Q.edge(j))) return true;
        }
    }
    return false;
}

inline bool polygons_share_edge(const Polygon& P, const Polygon& Q) {
    for (size_t i = 0; i < P.size(); ++i)
        for (size_t j = 0; j < Q.size(); ++j)
            if (positive_overlap(P.edge(i), Q.edge(j))) return true;
    return false;
}

}  // namespace detail

// Derives the adjacency star geometrically. Candidate offsets are taken from
// a conservative lattice box around each prototile pair; exact contact
// predicates decide. Point adjacency reduces to boundary contact because
// validated tilings have interior-disjoint tiles.
inline AdjacencyStar compute_star(const TilingSpec& spec, AdjacencyKind kind) {
    AdjacencyStar star;
    star.kind = kind;
    int M = spec.classes();
    star.arcs.resize(static_cast<size_t>(M));
    std::vector<detail::ProtoBounds> bounds;
    bounds.reserve(static_cast<size_t>(M));
    for (const Polygon& p : spec.prototiles) bounds.push_back(detail::proto_bounds(p));

    double b00 = to_double(spec.basis[0].x), b01 = to_double(spec.basis[1].x);
    double b10 = to_double(spec.basis[0].y), b11 = to_double(spec.basis[1].y);
    double det = b00 * b11 - b01 * b10;

    for (int i = 0; i < M; ++i) {
        for (int j = 0; j < M; ++j) {
            double reach = bounds[static_cast<size_t>(i)].fradius +
                           bounds[static_cast<size_t>(j)].fradius + 1e-6;
            double tx = bounds[static_cast<size_t>(i)].fref_x - bounds[static_cast<size_t>(j)].fref_x;
            double ty = bounds[static_cast<size_t>(i)].fref_y - bounds[static_cast<size_t>(j)].fref_y;
            // |B z - (tx,ty)| <= reach  =>  z inside the preimage box
            double corner = reach + std::abs(tx) + std::abs(ty);
            int64_t zmax = static_cast<int64_t>(
                               corner *
                               (std::abs(b00) + std::abs(b01) + std::abs(b10) + std::abs(b11)) /
                               std::abs(det)) + 2;
            const Polygon& Pi = spec.prototiles[static_cast<size_t>(i)];
            for (int64_t zx = -zmax; zx <= zmax; ++zx) {
                for (int64_t zy = -zmax; zy <= zmax; ++zy) {
                    if (i == j && zx == 0 && zy == 0) continue;
                    double ox = b00 * zx + b01 * zy - tx;
                    double oy = b10 * zx + b11 * zy - ty;
                    if (ox * ox + oy * oy > reach * reach) continue;
                    Polygon Pj = tile_polygon(spec, {j, zx, zy});
                    bool hit = kind == AdjacencyKind::edge
                                   ? detail::polygons_share_edge(Pi, Pj)
                                   : detail::polygons_touch(Pi, Pj);
                    if (hit) star.arcs[static_cast<size_t>(i)].push_back({j, zx, zy});
                }
            }
            std::sort(star.arcs[static_cast<size_t>(i)].begin(),
                      star.arcs[static_cast<size_t>(i)].end());
        }
    }
    return star;
}

inline bool quotient_connected(const AdjacencyStar& star) {
    int M = star.classes();
    if (M == 0) return false;
    std::vector<bool> seen(static_cast<size_t>(M), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (const StarArc& a : star.arcs[static_cast<size_t>(i)]) {
            if (!seen[static_cast<size_t>(a.proto)]) {
                seen[static_cast<size_t>(a.proto)] = true;
                ++count;
                stack.push_back(a.proto);
            }
        }
    }
    return count == M;
}

inline bool star_symmetric(const AdjacencyStar& star) {
    for (int i = 0; i < star.classes(); ++i)
        for (const StarArc& a : star.arcs[static_cast<size_t>(i)]) {
            StarArc rev{i, -a.ox, -a.oy};
            const auto& lst = star.arcs[static_cast<size_t>(a.proto)];
            if (!std::binary_search(lst.begin(), lst.end(), rev)) return false;
        }
    return true;
}

// All tile ids whose closed polygon contains x (one for interior points, two
// or more on boundaries).
inline std::vector<TileId> tiles_containing_point(const TilingSpec& spec, const Vec2& x) {
    std::vector<TileId> out;
    double b00 = to_double(spec.basis[0].x), b01 = to_double(spec.basis[1].x);
    double b10 = to_double(spec.basis[0].y), b11 = to_double(spec.basis[1].y);
    double det = b00 * b11 - b01 * b10;
    double fx = to_double(x.x), fy = to_double(x.y);
    for (int i = 0; i < spec.classes(); ++i) {
        auto b = detail::proto_bounds(spec.prototiles[static_cast<size_t>(i)]);
        double tx = fx - b.fref_x, ty = fy - b.fref_y;
        double corner = b.fradius + 1e-6 + std::abs(tx) + std::abs(ty);
        int64_t zmax = static_cast<int64_t>(
                           corner * (std::abs(b00) + std::abs(b01) + std::abs(b10) + std::abs(b11)) /
                           std::abs(det)) + 2;
        for (int64_t zx = -zmax; zx <= zmax; ++zx)
            for (int64_t zy = -zmax; zy <= zmax; ++zy) {
                double ox = b00 * zx + b01 * zy + b.fref_x - fx;
                double oy = b10 * zx + b11 * zy + b.fref_y - fy;
                if (ox * ox + oy * oy > (b.fradius + 1e-6) * (b.fradius + 1e-6)) continue;
                Polygon t = tile_polygon(spec, {i, zx, zy});
                if (point_in_polygon(x, t) != Location::outside) out.push_back({i, zx, zy});
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace corona
