#include <catch_amalgamated.hpp>

#include <map>

#include "corona/catalog.hpp"
#include "corona/limit.hpp"

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

bool same_vertex_set(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    if (a.size() != b.size()) return false;
    for (const Vec2& v : a) {
        bool found = false;
        for (const Vec2& w : b) found = found || w == v;
        if (!found) return false;
    }
    return true;
}

// independent eta oracle for the hexagonal tiling: rebuild adjacency from
// polygon contact on a 9x9 block (no star machinery), BFS from the center
std::map<std::pair<int64_t, int64_t>, int> hex_eta_oracle(const TilingSpec& spec) {
    struct Node {
        int64_t zx, zy;
    };
    const int R = 4;
    auto key = [R](int64_t zx, int64_t zy) { return (zx + R) * (2 * R + 1) + (zy + R); };
    std::vector<Polygon> polys;
    std::vector<Node> nodes;
    for (int64_t zx = -R; zx <= R; ++zx)
        for (int64_t zy = -R; zy <= R; ++zy) {
            polys.push_back(tile_polygon(spec, {0, zx, zy}));
            nodes.push_back({zx, zy});
        }
    size_t n = polys.size();
    std::vector<std::vector<size_t>> adj(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            bool hit = false;
            for (size_t a = 0; a < polys[i].size() && !hit; ++a)
                for (size_t b = 0; b < polys[j].size() && !hit; ++b)
                    hit = positive_overlap(polys[i].edge(a), polys[j].edge(b));
            if (hit) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    std::vector<int> dist(n, -1);
    size_t center = static_cast<size_t>(key(0, 0));
    dist[center] = 0;
    std::vector<size_t> frontier{center};
    while (!frontier.empty()) {
        std::vector<size_t> next;
        for (size_t u : frontier)
            for (size_t v : adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    next.push_back(v);
                }
        frontier = std::move(next);
    }
    std::map<std::pair<int64_t, int64_t>, int> eta;
    for (size_t i = 0; i < n; ++i)
        if (dist[i] > 0) eta[{nodes[i].zx, nodes[i].zy}] = dist[i];
    return eta;
}

}  // namespace

TEST_CASE("eta table for the square tiling") {
    TilingSpec sq = square_tiling();
    AdjacencyStar ed = compute_star(sq, AdjacencyKind::edge);
    EtaTable te = eta_table(sq, ed);
    CHECK(te.depth == 1);
    CHECK(te.at(1, 0) == 1);

    // Manhattan distances, via a diagnostic table deeper than 3M-2
    EtaTable deep = eta_table(sq, ed, 4);
    CHECK(deep.at(1, 1) == 2);
    CHECK(deep.at(2, 1) == 3);

    // Chebyshev distances under point adjacency
    AdjacencyStar pnt = compute_star(sq, AdjacencyKind::point);
    EtaTable tp = eta_table(sq, pnt, 4);
    CHECK(tp.at(1, 1) == 1);
    CHECK(tp.at(2, 1) == 2);
}

TEST_CASE("eta values match the brute-force geometric oracle (hexagonal)") {
    const TilingSpec& hex = catalog_get("6.6.6").spec;
    AdjacencyStar ed = compute_star(hex, AdjacencyKind::edge);
    auto oracle = hex_eta_oracle(hex);
    // depth 3M-2 = 1 only covers immediate periods; compare a deeper BFS
    // through a runway: use the oracle to check the star-based distances.
    // All periods at graph distance 1 must agree, and the star graph must
    // reproduce the oracle distances when iterated.
    EtaTable t = eta_table(hex, ed);
    for (const auto& [p, d] : t.eta) {
        auto it = oracle.find(p);
        REQUIRE(it != oracle.end());
        CHECK(it->second == d);
    }
    // iterate the star graph to the oracle's radius and compare everywhere
    std::map<std::pair<int64_t, int64_t>, int> dist;
    dist[{0, 0}] = 0;
    std::vector<std::pair<int64_t, int64_t>> frontier{{0, 0}};
    for (int d = 1; d <= 4; ++d) {
        std::vector<std::pair<int64_t, int64_t>> next;
        for (auto [zx, zy] : frontier)
            for (const StarArc& a : ed.arcs[0]) {
                auto k = std::make_pair(zx + a.ox, zy + a.oy);
                if (std::llabs(k.first) > 4 || std::llabs(k.second) > 4) continue;
                if (!dist.count(k)) {
                    dist[k] = d;
                    next.push_back(k);
                }
            }
        frontier = std::move(next);
    }
    for (const auto& [p, d] : oracle) {
        if (std::llabs(p.first) > 2 || std::llabs(p.second) > 2) continue;  // block edge effects
        REQUIRE(dist.count(p) == 1);
        CHECK(dist[p] == d);
    }
}

TEST_CASE("eta table symmetry and triangle invariants") {
    const TilingSpec& spec = catalog_get("3.3.4.3.4").spec;
    AdjacencyStar star = compute_star(spec, AdjacencyKind::edge);
    EtaTable t = eta_table(spec, star);
    CHECK(t.depth == 16);
    for (const auto& [p, e] : t.eta) {
        CHECK(t.at(-p.first, -p.second) == e);
    }
    // triangle inequality on a sample
    int checked = 0;
    for (const auto& [p, ep] : t.eta) {
        for (const auto& [q, eq] : t.eta) {
            if (std::llabs(q.first) > 1 || std::llabs(q.second) > 1) continue;
            int s = t.at(p.first + q.first, p.second + q.second);
            if (s >= 0) {
                CHECK(s <= ep + eq);
                ++checked;
            }
        }
        if (checked > 4000) break;
    }
    CHECK(checked > 100);
}

TEST_CASE("velocities from eta, square tiling") {
    TilingSpec sq = square_tiling();
    AdjacencyStar ed = compute_star(sq, AdjacencyKind::edge);
    auto vel = velocities_from_eta(sq, eta_table(sq, ed));
    bool has10 = false;
    for (const auto& r : vel) has10 = has10 || (r.v == pt(1, 0) && r.eta == 1);
    CHECK(has10);

    AdjacencyStar pnt = compute_star(sq, AdjacencyKind::point);
    auto velp = velocities_from_eta(sq, eta_table(sq, pnt));
    bool has11 = false;
    for (const auto& r : velp) has11 = has11 || (r.v == pt(1, 1) && r.eta == 1);
    CHECK(has11);
}

TEST_CASE("velocities from linear patches, square tiling") {
    TilingSpec sq = square_tiling();
    AdjacencyStar ed = compute_star(sq, AdjacencyKind::edge);
    auto vel = velocities_linear(sq, ed);
    REQUIRE(vel.size() == 4);  // M=1: single-edge walks only
    CHECK(same_vertex_set(vel, {pt(1, 0), pt(-1, 0), pt(0, 1), pt(0, -1)}));

    AdjacencyStar pnt = compute_star(sq, AdjacencyKind::point);
    auto velp = velocities_linear(sq, pnt);
    CHECK(velp.size() == 8);
}

TEST_CASE("square tiling corona limits") {
    TilingSpec sq = square_tiling();
    CoronaLimit kp = corona_limit(sq, compute_star(sq, AdjacencyKind::point));
    CHECK(same_vertex_set(kp.hull.vertices(), {pt(1, 1), pt(1, -1), pt(-1, 1), pt(-1, -1)}));
    // canonical ordering starts at the lexicographically smallest vertex
    CHECK(kp.hull[0] == pt(-1, -1));

    CoronaLimit ke = corona_limit(sq, compute_star(sq, AdjacencyKind::edge));
    CHECK(same_vertex_set(ke.hull.vertices(), {pt(1, 0), pt(-1, 0), pt(0, 1), pt(0, -1)}));
}

TEST_CASE("certify passes on a sound limit") {
    TilingSpec sq = square_tiling();
    CoronaLimit K = corona_limit(sq, compute_star(sq, AdjacencyKind::edge));
    CertificateReport rep = certify(K);
    CHECK(rep.pass);
    REQUIRE(rep.checks.size() == 5);
    for (const auto& c : rep.checks) CHECK(c.pass);
}

TEST_CASE("certify flags a corrupted limit") {
    TilingSpec sq = square_tiling();
    CoronaLimit K = corona_limit(sq, compute_star(sq, AdjacencyKind::edge));
    // shift the hull off-center: symmetry must fail
    std::vector<Vec2> shifted;
    Vec2 off{QuarticScalar{Rational(1, 10)}, QuarticScalar(0)};
    for (const Vec2& v : K.hull.vertices()) shifted.push_back(v + off);
    K.hull = Polygon::make(shifted);
    CertificateReport rep = certify(K);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.checks[0].pass);  // central_symmetry
}

TEST_CASE("scale equivariance") {
    TilingSpec sq = square_tiling();
    CoronaLimit base = corona_limit(sq, compute_star(sq, AdjacencyKind::point));

    TilingSpec scaled;
    scaled.name = "square-x3/2";
    QuarticScalar lam{Rational(3, 2)};
    scaled.basis = {lam * sq.basis[0], lam * sq.basis[1]};
    std::vector<Vec2> vs;
    for (const Vec2& v : sq.prototiles[0].vertices()) vs.push_back(lam * v);
    scaled.prototiles.push_back(Polygon::make(vs));
    CoronaLimit ks = corona_limit(scaled, compute_star(scaled, AdjacencyKind::point));
    REQUIRE(ks.hull.size() == base.hull.size());
    for (const Vec2& v : base.hull.vertices()) {
        Vec2 sv = lam * v;
        bool found = false;
        for (const Vec2& w : ks.hull.vertices()) found = found || w == sv;
        CHECK(found);
    }
}

TEST_CASE("oracle equivalence on small tilings") {
    for (const char* key : {"4.4.4.4", "3.3.3.3.3.3", "6.6.6", "3.3.4.3.4"}) {
        const TilingSpec& spec = catalog_get(key).spec;
        for (auto kind : {AdjacencyKind::point, AdjacencyKind::edge}) {
            AdjacencyStar star = compute_star(spec, kind);
            CoronaLimit K = corona_limit(spec, star);
            auto lin = velocities_linear(spec, star);
            HullResult lh = convex_hull(lin);
            REQUIRE_FALSE(lh.degenerate);
            CHECK(same_vertex_set(lh.points, K.hull.vertices()));
        }
    }
}

TEST_CASE("containment: edge limit inside point limit") {
    for (const char* key : {"4.4.4.4", "3.3.3.3.3.3", "3.3.4.3.4"}) {
        const TilingSpec& spec = catalog_get(key).spec;
        CoronaLimit kp = corona_limit(spec, compute_star(spec, AdjacencyKind::point));
        CoronaLimit ke = corona_limit(spec, compute_star(spec, AdjacencyKind::edge));
        for (const Vec2& v : ke.hull.vertices())
            CHECK(point_in_polygon(v, kp.hull) != Location::outside);
    }
}
