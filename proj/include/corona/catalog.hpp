#pragma once

#include <map>
#include <optional>

#include "corona/catalog_data.hpp"
#include "corona/limit.hpp"

namespace corona {

// Built-in tilings: the 11 Archimedean (1-uniform) tilings plus the
// 2-uniform tilings 2-02 (3.4.6.4;3^2.4.3.4), 2-15 and 2-16
// (3^3.4^2;3^2.4.3.4). Keys are vertex-configuration strings for the
// Archimedean entries. Expected corona-limit vertex lists are attached where
// published coordinates exist; orientations of those entries are chosen so
// the computed limits reproduce the published tables without any post-hoc
// rotation.
struct CatalogEntry {
    std::string key;
    TilingSpec spec;
    std::string note;  // construction note
    std::map<AdjacencyKind, std::vector<Vec2>> expected;

    bool has_golden(AdjacencyKind k) const { return expected.count(k) > 0; }
};

struct CatalogInfo {
    std::string key;
    int M;
    bool golden_point;
    bool golden_edge;
};

namespace detail {

inline QuarticScalar decode(const RawScalar& r) {
    return {Rational(r.an, r.ad), Rational(r.bn, r.bd), Rational(r.cn, r.cd),
            Rational(r.dn, r.dd)};
}

inline Vec2 decode(const RawVec& r) { return {decode(r.x), decode(r.y)}; }

// q = a/den + (c/den) sqrt3; the golden tables only need this slice of the field
inline QuarticScalar gq(long a, long c, long den) {
    return {Rational(a, den), Rational(0), Rational(c, den), Rational(0)};
}

inline std::vector<Vec2> pm(std::vector<Vec2> half) {
    std::vector<Vec2> out;
    for (const Vec2& v : half) {
        out.push_back(v);
        out.push_back(-v);
    }
    return out;
}

inline std::map<std::string, std::map<AdjacencyKind, std::vector<Vec2>>> golden_tables() {
    std::map<std::string, std::map<AdjacencyKind, std::vector<Vec2>>> g;
    using K = AdjacencyKind;
    // snub square (1-09): point square and edge octagon
    g["3.3.4.3.4"][K::point] = pm({{gq(3, 1, 4), gq(1, 1, 4)}, {gq(-1, -1, 4), gq(3, 1, 4)}});
    g["3.3.4.3.4"][K::edge] = pm({{gq(3, 1, 8), gq(1, 1, 8)},
                                  {gq(1, 0, 6), gq(2, 1, 6)},
                                  {gq(-1, -1, 8), gq(3, 1, 8)},
                                  {gq(-2, -1, 6), gq(1, 0, 6)}});
    // 2-15: point octagon and edge hexadecagon
    g["2-15"][K::point] = pm({{gq(3, 1, 4), gq(0, 0, 1)},
                              {gq(3, 1, 6), gq(3, 1, 6)},
                              {gq(0, 0, 1), gq(3, 1, 4)},
                              {gq(-3, -1, 6), gq(3, 1, 6)}});
    g["2-15"][K::edge] = pm({{gq(3, 1, 7), gq(0, 0, 1)},
                             {gq(9, 3, 22), gq(3, 1, 22)},
                             {gq(3, 1, 10), gq(3, 1, 10)},
                             {gq(3, 1, 22), gq(9, 3, 22)},
                             {gq(0, 0, 1), gq(3, 1, 7)},
                             {gq(-3, -1, 22), gq(9, 3, 22)},
                             {gq(-3, -1, 10), gq(3, 1, 10)},
                             {gq(-9, -3, 22), gq(3, 1, 22)}});
    // 2-16: point octagon and edge decagon
    g["2-16"][K::point] = pm({{gq(5, 2, 8), gq(0, 1, 8)},
                              {gq(7, 2, 12), gq(4, 3, 12)},
                              {gq(-1, -2, 12), gq(8, 3, 12)},
                              {gq(-3, -2, 8), gq(4, 1, 8)}});
    g["2-16"][K::edge] = pm({{gq(5, 2, 12), gq(0, 1, 12)},
                             {gq(3, 1, 8), gq(1, 1, 8)},
                             {gq(1, 0, 6), gq(2, 1, 6)},
                             {gq(-1, -1, 8), gq(3, 1, 8)},
                             {gq(-3, -2, 12), gq(4, 1, 12)}});
    // 2-02: point dodecagon
    g["2-02"][K::point] = pm({{gq(2, 1, 3), gq(0, 0, 1)},
                              {gq(6, 3, 10), gq(3, 2, 10)},
                              {gq(2, 1, 6), gq(3, 2, 6)},
                              {gq(0, 0, 1), gq(3, 2, 5)},
                              {gq(-2, -1, 6), gq(3, 2, 6)},
                              {gq(-6, -3, 10), gq(3, 2, 10)}});
    return g;
}

inline std::map<std::string, std::string> catalog_notes() {
    return {
        {"3.3.3.3.3.3", "triangular tiling: up/down triangles on the unit rhombic lattice"},
        {"3.3.3.3.6", "snub hexagonal: hexagons on an index-7 sublattice of the triangular "
                      "lattice, the 8 leftover unit triangles per cell kept as prototiles"},
        {"3.3.3.4.4", "elongated triangular: square rows alternating with triangle rows, "
                      "consecutive square rows offset by 1/2"},
        {"3.3.4.3.4", "snub square: axis-aligned and 30-degree squares with triangle fill; "
                      "orthogonal period basis of squared length 2+sqrt3, oriented to the "
                      "published extreme-point tables"},
        {"3.4.6.4", "rhombitrihexagonal: hexagon, three squares on alternating edge normals, "
                    "two triangle orientation classes; hexagonal lattice of constant 1+sqrt3"},
        {"3.6.3.6", "kagome: hexagon plus up/down triangles on the doubled triangular lattice"},
        {"3.12.12", "truncated hexagonal: flat-top dodecagon and two triangle orientation "
                    "classes on the hexagonal lattice of constant 2+sqrt3"},
        {"4.4.4.4", "unit square lattice"},
        {"4.6.12", "truncated trihexagonal: dodecagon, two hexagons and three squares per "
                   "cell on the hexagonal lattice of constant 3+sqrt3"},
        {"4.8.8", "truncated square: flat-top octagon and one 45-degree square per cell on "
                  "the square lattice of constant 1+sqrt2"},
        {"6.6.6", "regular hexagonal tiling, hexagon centered at the origin"},
        {"2-02", "3.4.6.4;3.3.4.3.4: one hexagon, six squares and eight triangles on the "
                 "hexagonal lattice of constant 2+sqrt3; completed by constrained growth on "
                 "the period torus and oriented to the published dodecagon"},
        {"2-15", "3.3.3.4.4;3.3.4.3.4 (first kind): six squares and twelve triangles on the "
                 "45-degree square lattice of squared constant (3+sqrt3)^2/2; oriented to "
                 "the published octagon/hexadecagon"},
        {"2-16", "3.3.3.4.4;3.3.4.3.4 (second kind): four squares and eight triangles; "
                 "period basis (1/2,(2+sqrt3)/2), ((5+2 sqrt3)/2, sqrt3/2); oriented to the "
                 "published octagon/decagon"},
    };
}

}  // namespace detail

class Catalog {
public:
    static const Catalog& instance() {
        static Catalog c;
        return c;
    }

    // UNKNOWN_TILING for unrecognized keys
    const CatalogEntry& get(const std::string& key) const {
        auto k = aliases_.count(key) ? aliases_.at(key) : key;
        auto it = entries_.find(k);
        if (it == entries_.end())
            throw std::out_of_range("UNKNOWN_TILING: " + key);
        return it->second;
    }

    std::vector<CatalogInfo> list() const {
        std::vector<CatalogInfo> out;
        for (const auto& key : order_) {
            const CatalogEntry& e = entries_.at(key);
            out.push_back({key, e.spec.classes(), e.has_golden(AdjacencyKind::point),
                           e.has_golden(AdjacencyKind::edge)});
        }
        return out;
    }

    const std::vector<std::string>& keys() const { return order_; }

private:
    Catalog() {
        auto golden = detail::golden_tables();
        auto notes = detail::catalog_notes();
        for (const auto& raw : detail::raw_catalog()) {
            CatalogEntry e;
            e.key = raw.key;
            e.spec.name = raw.key;
            e.spec.basis = {detail::decode(raw.b1), detail::decode(raw.b2)};
            for (const auto& poly : raw.protos) {
                std::vector<Vec2> vs;
                vs.reserve(poly.size());
                for (const auto& v : poly) vs.push_back(detail::decode(v));
                e.spec.prototiles.push_back(Polygon::make(std::move(vs)));
            }
            if (auto it = golden.find(e.key); it != golden.end()) e.expected = it->second;
            if (auto it = notes.find(e.key); it != notes.end()) e.note = it->second;
            order_.push_back(e.key);
            entries_.emplace(e.key, std::move(e));
        }
        aliases_ = {{"1-09", "3.3.4.3.4"}};
    }

    std::vector<std::string> order_;
    std::map<std::string, CatalogEntry> entries_;
    std::map<std::string, std::string> aliases_;
};

inline const CatalogEntry& catalog_get(const std::string& key) {
    return Catalog::instance().get(key);
}

inline std::vector<CatalogInfo> catalog_list() { return Catalog::instance().list(); }

}  // namespace corona
