#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "corona/scalar.hpp"

namespace corona {

struct Vec2 {
    QuarticScalar x, y;

    Vec2() = default;
    Vec2(QuarticScalar px, QuarticScalar py) : x(std::move(px)), y(std::move(py)) {}

    Vec2 operator-() const { return {-x, -y}; }
    friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
    friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }
    friend Vec2 operator*(const QuarticScalar& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2& u, const Vec2& v) { return u.x == v.x && u.y == v.y; }
    friend bool operator!=(const Vec2& u, const Vec2& v) { return !(u == v); }

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

inline QuarticScalar dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }
inline QuarticScalar cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline QuarticScalar norm2(const Vec2& u) { return dot(u, u); }

// numeric lexicographic order (x, then y); used for canonical vertex ordering
inline bool lex_less(const Vec2& u, const Vec2& v) {
    int s = sign(u.x - v.x);
    if (s != 0) return s < 0;
    return sign(u.y - v.y) < 0;
}

// sign of the cross product (q-p) x (r-p): +1 left turn, 0 collinear, -1 right
inline int orientation(const Vec2& p, const Vec2& q, const Vec2& r) {
    return sign(cross(q - p, r - p));
}

struct Segment {
    Vec2 p, q;
    Segment(Vec2 a, Vec2 b) : p(std::move(a)), q(std::move(b)) {
        if (p == q) throw std::invalid_argument("Segment: degenerate endpoints");
    }
};

// p on the closed segment [a,b]
inline bool on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    if (orientation(a, b, p) != 0) return false;
    Vec2 d = b - a;
    QuarticScalar t = dot(p - a, d);
    return sign(t) >= 0 && sign(norm2(d) - t) >= 0;
}

inline bool strictly_inside_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    if (orientation(a, b, p) != 0) return false;
    Vec2 d = b - a;
    QuarticScalar t = dot(p - a, d);
    return sign(t) > 0 && sign(norm2(d) - t) > 0;
}

// closed segments share at least one point (endpoint contact and collinear
// overlap count)
inline bool segments_touch(const Segment& s1, const Segment& s2) {
    const Vec2 &a = s1.p, &b = s1.q, &c = s2.p, &d = s2.q;
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
    return on_segment(c, a, b) || on_segment(d, a, b) ||
           on_segment(a, c, d) || on_segment(b, c, d);
}

// collinear with intersection of positive length
inline bool positive_overlap(const Segment& s1, const Segment& s2) {
    const Vec2 &a = s1.p, &b = s1.q, &c = s2.p, &d = s2.q;
    if (orientation(a, b, c) != 0 || orientation(a, b, d) != 0) return false;
    Vec2 e = b - a;
    QuarticScalar len2 = norm2(e);
    QuarticScalar t0 = dot(c - a, e), t1 = dot(d - a, e);
    if (sign(t1 - t0) < 0) std::swap(t0, t1);
    QuarticScalar lo = sign(t0) > 0 ? t0 : QuarticScalar(0);
    QuarticScalar hi = sign(len2 - t1) > 0 ? t1 : len2;
    return sign(hi - lo) > 0;
}

class Polygon {
public:
    // Validates simplicity and enforces counterclockwise orientation
    // (clockwise input is reversed). Throws std::invalid_argument otherwise.
    static Polygon make(std::vector<Vec2> vs) {
        if (vs.size() < 3) throw std::invalid_argument("Polygon: fewer than 3 vertices");
        QuarticScalar twice;
        for (size_t i = 0; i < vs.size(); ++i) {
            const Vec2& a = vs[i];
            const Vec2& b = vs[(i + 1) % vs.size()];
            if (a == b) throw std::invalid_argument("Polygon: repeated vertex");
            twice += cross(a, b);
        }
        int s = sign(twice);
        if (s == 0) throw std::invalid_argument("Polygon: zero area");
        if (s < 0) std::reverse(vs.begin(), vs.end());
        Polygon p;
        p.vs_ = std::move(vs);
        if (!p.simple()) throw std::invalid_argument("Polygon: self-intersecting");
        return p;
    }

    const std::vector<Vec2>& vertices() const { return vs_; }
    size_t size() const { return vs_.size(); }
    const Vec2& operator[](size_t i) const { return vs_[i]; }
    Segment edge(size_t i) const { return Segment(vs_[i], vs_[(i + 1) % vs_.size()]); }

    Polygon translated(const Vec2& t) const {
        Polygon p;
        p.vs_.reserve(vs_.size());
        for (const Vec2& v : vs_) p.vs_.push_back(v + t);
        return p;
    }

private:
    Polygon() = default;

    bool simple() const {
        size_t n = vs_.size();
        for (size_t i = 0; i < n; ++i) {
            Segment si = edge(i);
            for (size_t j = i + 1; j < n; ++j) {
                Segment sj = edge(j);
                bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
                if (adjacent) {
                    // consecutive edges may share exactly their common endpoint
                    if (positive_overlap(si, sj)) return false;
                    const Vec2& shared = (j == i + 1) ? vs_[j] : vs_[0];
                    if (strictly_inside_segment(shared, si.p, si.q) ||
                        strictly_inside_segment(shared, sj.p, sj.q))
                        return false;
                    // non-shared endpoints must stay off the other edge
                    const Vec2& tip_i = (j == i + 1) ? si.p : si.q;
                    const Vec2& tip_j = (j == i + 1) ? sj.q : sj.p;
                    if (on_segment(tip_i, sj.p, sj.q) && tip_i != shared) return false;
                    if (on_segment(tip_j, si.p, si.q) && tip_j != shared) return false;
                } else {
                    if (segments_touch(si, sj)) return false;
                }
            }
        }
        return true;
    }

    std::vector<Vec2> vs_;
};

// exact positive area (shoelace)
inline QuarticScalar polygon_area(const Polygon& P) {
    QuarticScalar twice;
    size_t n = P.size();
    for (size_t i = 0; i < n; ++i) twice += cross(P[i], P[(i + 1) % n]);
    return QuarticScalar(Rational(1, 2)) * twice;
}

enum class Location { inside, boundary, outside };

// exact point location against the closed polygon (crossing number with
// boundary detected first; works for any simple polygon)
inline Location point_in_polygon(const Vec2& x, const Polygon& P) {
    size_t n = P.size();
    for (size_t i = 0; i < n; ++i) {
        Segment e = P.edge(i);
        if (on_segment(x, e.p, e.q)) return Location::boundary;
    }
    // cast a ray in +x direction; count crossings with half-open edges
    int crossings = 0;
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = P[i];
        const Vec2& b = P[(i + 1) % n];
        int ya = sign(a.y - x.y), yb = sign(b.y - x.y);
        if ((ya > 0) == (yb > 0)) continue;  // edge does not straddle the ray line
        // intersection strictly right of x?  sign of cross depends on direction
        int o = orientation(x, a, b);
        if (yb > ya) {  // upward edge
            if (o > 0) ++crossings;
        } else {  // downward edge
            if (o < 0) ++crossings;
        }
    }
    return (crossings % 2 == 1) ? Location::inside : Location::outside;
}

// Largest t >= 0 with t*v in the closed polygon, or nullopt when the ray
// from the origin misses P. v must be nonzero.
inline std::optional<QuarticScalar> ray_exit(const Polygon& P, const Vec2& v) {
    if (v.is_zero()) throw std::invalid_argument("ray_exit: zero direction");
    bool found = false;
    QuarticScalar best;
    auto consider = [&](const QuarticScalar& t) {
        if (sign(t) < 0) return;
        if (!found || sign(t - best) > 0) {
            best = t;
            found = true;
        }
    };
    Vec2 origin{QuarticScalar(0), QuarticScalar(0)};
    size_t n = P.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = P[i];
        const Vec2& b = P[(i + 1) % n];
        Vec2 e = b - a;
        QuarticScalar denom = cross(v, e);
        if (sign(denom) != 0) {
            // t*v = a + s*e ; cross with e gives t, cross with v gives s
            QuarticScalar t = cross(a, e) / denom;
            QuarticScalar s = cross(a, v) / denom;
            if (sign(s) >= 0 && sign(QuarticScalar(1) - s) >= 0) consider(t);
        } else if (orientation(origin, v, a) == 0) {
            // edge collinear with the ray: both endpoint parameters
            QuarticScalar vv = norm2(v);
            consider(dot(a, v) / vv);
            consider(dot(b, v) / vv);
        }
    }
    if (!found) {
        if (point_in_polygon(origin, P) != Location::outside) return QuarticScalar(0);
        return std::nullopt;
    }
    return best;
}

// Monotone chain over any point type with an exact orientation functor.
// Collinear points are dropped; output is counterclockwise.
template <class Point, class Orient>
std::vector<Point> hull_of(std::vector<Point> pts, Orient orient2,
                           bool (*less)(const Point&, const Point&)) {
    std::sort(pts.begin(), pts.end(), less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Point> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && orient2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    size_t t = k + 1;
    for (size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= t && orient2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

struct HullResult {
    std::vector<Vec2> points;  // hull vertices CCW, or the degenerate set
    bool degenerate;           // fewer than 3 extreme points
    std::optional<Polygon> polygon() const {
        if (degenerate) return std::nullopt;
        return Polygon::make(points);
    }
};

inline HullResult convex_hull(const std::vector<Vec2>& points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty input");
    auto out = hull_of<Vec2>(points,
        [](const Vec2& a, const Vec2& b, const Vec2& c) { return orientation(a, b, c); },
        &lex_less);
    return HullResult{out, out.size() < 3};
}

}  // namespace corona
