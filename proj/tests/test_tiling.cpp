#include <catch_amalgamated.hpp>

#include "corona/catalog.hpp"
#include "corona/tiling.hpp"

using namespace corona;

namespace {

QuarticScalar qs(long a, long b = 0, long c = 0, long d = 0) {
    return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

Vec2 pt(long x, long y) { return {qs(x), qs(y)}; }

TilingSpec square_tiling() {
    TilingSpec s;
    s.name = "square";
    s.basis = {pt(1, 0), pt(0, 1)};
    s.prototiles.push_back(Polygon::make({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}));
    return s;
}

// brute-force adjacency oracle: geometric contact over a 5x5 block, computed
// directly from the polygons without the star machinery
int oracle_degree(const TilingSpec& spec, int proto, AdjacencyKind kind) {
    Polygon base = tile_polygon(spec, {proto, 0, 0});
    int deg = 0;
    for (int j = 0; j < spec.classes(); ++j) {
        for (int64_t zx = -2; zx <= 2; ++zx) {
            for (int64_t zy = -2; zy <= 2; ++zy) {
                if (j == proto && zx == 0 && zy == 0) continue;
                Polygon other = tile_polygon(spec, {j, zx, zy});
                bool hit = false;
                for (size_t a = 0; a < base.size() && !hit; ++a)
                    for (size_t b = 0; b < other.size() && !hit; ++b)
                        hit = kind == AdjacencyKind::edge
                                  ? positive_overlap(base.edge(a), other.edge(b))
                                  : segments_touch(base.edge(a), other.edge(b));
                if (hit) ++deg;
            }
        }
    }
    return deg;
}

}  // namespace

TEST_CASE("validate square tiling") {
    ValidationReport rep = validate(square_tiling());
    CHECK(rep.ok);
    CHECK(rep.cell_area == qs(1));
    CHECK(rep.tile_area_sum == qs(1));
    CHECK(rep.s_bound > 0.49);
    CHECK(rep.S_bound < 0.8);
}

TEST_CASE("validate catches area mismatch") {
    TilingSpec bad = square_tiling();
    bad.prototiles.push_back(Polygon::make({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}));
    ValidationReport rep = validate(bad);
    CHECK_FALSE(rep.ok);
    bool found = false;
    for (const auto& [d, msg] : rep.issues) found = found || d == Diag::AREA_MISMATCH;
    CHECK(found);
}

TEST_CASE("validate catches overlap") {
    // two unit squares shifted by 1/2, basis stretched to keep areas balanced
    TilingSpec bad;
    bad.name = "overlapping";
    bad.basis = {pt(2, 0), pt(0, 1)};
    bad.prototiles.push_back(Polygon::make({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}));
    bad.prototiles.push_back(Polygon::make(
        {{Rational(1, 2), Rational(0)}, {Rational(3, 2), Rational(0)},
         {Rational(3, 2), Rational(1)}, {Rational(1, 2), Rational(1)}}));
    ValidationReport rep = validate(bad);
    CHECK_FALSE(rep.ok);
    bool found = false;
    for (const auto& [d, msg] : rep.issues) found = found || d == Diag::OVERLAP;
    CHECK(found);
}

TEST_CASE("validate hexagonal tiling: shoelace equals determinant") {
    const TilingSpec& hex = catalog_get("6.6.6").spec;
    // independent check of the area identity used by the validator
    QuarticScalar det = cross(hex.basis[0], hex.basis[1]);
    if (sign(det) < 0) det = -det;
    QuarticScalar shoelace = polygon_area(hex.prototiles[0]);
    QuarticScalar expected{Rational(0), Rational(0), Rational(3, 2), Rational(0)};
    CHECK(det == expected);
    CHECK(shoelace == expected);
    CHECK(validate(hex).ok);
}

TEST_CASE("tile_polygon translation") {
    TilingSpec sq = square_tiling();
    Polygon t = tile_polygon(sq, {0, 2, 3});
    CHECK(t[0] == pt(2, 3));
    CHECK(t[2] == pt(3, 4));
    Polygon id = tile_polygon(sq, {0, 0, 0});
    CHECK(id[0] == pt(0, 0));
    const TilingSpec& hex = catalog_get("6.6.6").spec;
    Polygon h = tile_polygon(hex, {0, 1, 0});
    CHECK(h[0] == hex.prototiles[0][0] + hex.basis[0]);
}

TEST_CASE("compute_star square tiling") {
    TilingSpec sq = square_tiling();
    AdjacencyStar pt_star = compute_star(sq, AdjacencyKind::point);
    AdjacencyStar ed_star = compute_star(sq, AdjacencyKind::edge);
    CHECK(pt_star.arcs[0].size() == 8);  // Moore
    CHECK(ed_star.arcs[0].size() == 4);  // von Neumann
    CHECK(star_symmetric(pt_star));
    CHECK(star_symmetric(ed_star));
    CHECK(quotient_connected(pt_star));
}

TEST_CASE("compute_star triangular tiling vs brute-force oracle") {
    const TilingSpec& tri = catalog_get("3.3.3.3.3.3").spec;
    AdjacencyStar ed = compute_star(tri, AdjacencyKind::edge);
    AdjacencyStar pnt = compute_star(tri, AdjacencyKind::point);
    for (int i = 0; i < 2; ++i) {
        CHECK(static_cast<int>(ed.arcs[static_cast<size_t>(i)].size()) ==
              oracle_degree(tri, i, AdjacencyKind::edge));
        CHECK(static_cast<int>(pnt.arcs[static_cast<size_t>(i)].size()) ==
              oracle_degree(tri, i, AdjacencyKind::point));
    }
    CHECK(ed.arcs[0].size() == 3);
    CHECK(pnt.arcs[0].size() == 12);
}

TEST_CASE("edge star is contained in point star") {
    for (const char* key : {"4.4.4.4", "3.3.3.3.3.3", "3.3.4.3.4", "3.6.3.6"}) {
        const TilingSpec& spec = catalog_get(key).spec;
        AdjacencyStar ed = compute_star(spec, AdjacencyKind::edge);
        AdjacencyStar pnt = compute_star(spec, AdjacencyKind::point);
        for (int i = 0; i < spec.classes(); ++i)
            for (const StarArc& a : ed.arcs[static_cast<size_t>(i)])
                CHECK(std::binary_search(pnt.arcs[static_cast<size_t>(i)].begin(),
                                         pnt.arcs[static_cast<size_t>(i)].end(), a));
    }
}

TEST_CASE("neighbors") {
    TilingSpec sq = square_tiling();
    AdjacencyStar ed = compute_star(sq, AdjacencyKind::edge);
    auto ns = neighbors(ed, {0, 0, 0});
    REQUIRE(ns.size() == 4);
    std::vector<TileId> expect = {{0, -1, 0}, {0, 0, -1}, {0, 0, 1}, {0, 1, 0}};
    CHECK(ns == expect);

    AdjacencyStar pnt = compute_star(sq, AdjacencyKind::point);
    auto ns5 = neighbors(pnt, {0, 5, 5});
    CHECK(ns5.size() == 8);
    for (const TileId& n : ns5) {
        CHECK(std::max(std::llabs(n.cx - 5), std::llabs(n.cy - 5)) == 1);
        // symmetry: id is a neighbor of each of its neighbors
        auto back = neighbors(pnt, n);
        bool found = false;
        for (const TileId& b : back) found = found || (b == TileId{0, 5, 5});
        CHECK(found);
    }

    // translation equivariance
    auto n0 = neighbors(pnt, {0, 0, 0});
    auto n7 = neighbors(pnt, {0, 7, -3});
    REQUIRE(n0.size() == n7.size());
    for (size_t i = 0; i < n0.size(); ++i) {
        CHECK(n7[i].cx == n0[i].cx + 7);
        CHECK(n7[i].cy == n0[i].cy - 3);
    }
}

TEST_CASE("tiles_containing_point") {
    TilingSpec sq = square_tiling();
    Vec2 mid{QuarticScalar{Rational(1, 2)}, QuarticScalar{Rational(1, 2)}};
    auto a = tiles_containing_point(sq, mid);
    REQUIRE(a.size() == 1);
    CHECK(a[0] == TileId{0, 0, 0});

    auto corner = tiles_containing_point(sq, pt(1, 1));
    CHECK(corner.size() == 4);

    Vec2 edge_mid{qs(1), QuarticScalar{Rational(1, 2)}};
    auto e = tiles_containing_point(sq, edge_mid);
    CHECK(e.size() == 2);
}

TEST_CASE("every catalog prototile has at least 3 edge neighbors") {
    for (const auto& info : catalog_list()) {
        const TilingSpec& spec = catalog_get(info.key).spec;
        AdjacencyStar ed = compute_star(spec, AdjacencyKind::edge);
        for (int i = 0; i < spec.classes(); ++i)
            CHECK(ed.arcs[static_cast<size_t>(i)].size() >= 3);
    }
}
