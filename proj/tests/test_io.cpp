#include <catch_amalgamated.hpp>

#include "corona/io.hpp"

using namespace corona;

namespace {

QuarticScalar qs(long a, long b = 0, long c = 0, long d = 0) {
    return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

}  // namespace

TEST_CASE("scalar encoding round trip") {
    uint64_t state = 7;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 33) % 41) - 20;
    };
    for (int i = 0; i < 50; ++i) {
        long den = std::abs(next()) % 9 + 1;
        QuarticScalar p{Rational(next(), den), Rational(next(), den), Rational(next(), den),
                        Rational(next(), den)};
        CHECK(parse_scalar(encode_scalar(p)) == p);
    }
}

TEST_CASE("scalar encoding shorthand") {
    CHECK(encode_scalar(qs(5)) == json(5));
    CHECK(parse_scalar(json(5)) == qs(5));
    json half = json::parse("[[1,2],0,0,0]");
    QuarticScalar p = parse_scalar(half);
    CHECK(p == QuarticScalar{Rational(1, 2), Rational(0), Rational(0), Rational(0)});
    // denominators positive, fractions reduced on output
    json enc = encode_scalar(QuarticScalar{Rational(-2, 4), Rational(0), Rational(0), Rational(0)});
    CHECK(enc[0][0] == json(-1));
    CHECK(enc[0][1] == json(2));
    CHECK_THROWS_AS(parse_scalar(json::parse("[1,2,3]")), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar(json::parse("[[1,0],0,0,0]")), std::invalid_argument);
}

TEST_CASE("tiling file round trip") {
    const TilingSpec& snub = catalog_get("3.3.4.3.4").spec;
    json j = encode_tiling(snub);
    ParsedTiling back = parse_tiling(j);
    CHECK(back.spec.name == snub.name);
    CHECK(back.spec.basis[0] == snub.basis[0]);
    CHECK(back.spec.basis[1] == snub.basis[1]);
    REQUIRE(back.spec.classes() == snub.classes());
    for (int i = 0; i < snub.classes(); ++i) {
        const auto& a = back.spec.prototiles[static_cast<size_t>(i)].vertices();
        const auto& b = snub.prototiles[static_cast<size_t>(i)].vertices();
        REQUIRE(a.size() == b.size());
        for (size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
    }
    CHECK(validate(back.spec).ok);
}

TEST_CASE("tiling parser rejects malformed input") {
    CHECK_THROWS_AS(parse_tiling(json::parse("{}")), std::invalid_argument);
    // self-intersecting prototile
    json bad = json::parse(R"({
        "name": "bowtie",
        "basis": [[1, 0], [0, 1]],
        "prototiles": [{"vertices": [[0,0],[1,1],[1,0],[0,1]]}]
    })");
    CHECK_THROWS_WITH(parse_tiling(bad), Catch::Matchers::ContainsSubstring("NONSIMPLE_POLYGON"));
}

TEST_CASE("user adjacency stars are accepted when symmetric") {
    json j = json::parse(R"({
        "name": "square",
        "basis": [[1, 0], [0, 1]],
        "prototiles": [{"vertices": [[0,0],[1,0],[1,1],[0,1]]}],
        "adjacency": {"edge": [[0,0,1,0],[0,0,-1,0],[0,0,0,1],[0,0,0,-1]]}
    })");
    ParsedTiling p = parse_tiling(j);
    REQUIRE(p.stars.count(AdjacencyKind::edge) == 1);
    CHECK(p.stars.at(AdjacencyKind::edge).arcs[0].size() == 4);

    json bad = j;
    bad["adjacency"]["edge"] = json::parse("[[0,0,1,0]]");
    CHECK_THROWS_WITH(parse_tiling(bad), Catch::Matchers::ContainsSubstring("symmetric"));
}

TEST_CASE("result document json round trips exact vertices") {
    const TilingSpec& sq = catalog_get("4.4.4.4").spec;
    AdjacencyStar star = compute_star(sq, AdjacencyKind::point);
    CoronaLimit K = corona_limit(sq, star);
    ResultDocument doc = make_result(K, certify(K));
    json j = encode_result(doc);
    CHECK(j["tiling"] == "4.4.4.4");
    CHECK(j["adjacency"] == "point");
    CHECK(j["M"] == 1);
    REQUIRE(j["vertices_exact"].size() == 4);
    for (size_t i = 0; i < 4; ++i) {
        Vec2 v = parse_vec(j["vertices_exact"][i]);
        CHECK(v == doc.vertices[i]);
    }
    // approx values match the exact ones to 12 significant digits
    for (size_t i = 0; i < 4; ++i) {
        CHECK(j["vertices_approx"][i][0].get<std::string>() == render_decimal(doc.vertices[i].x));
    }
    CHECK(j["certificate"]["pass"] == true);
}

TEST_CASE("result document csv") {
    const TilingSpec& sq = catalog_get("4.4.4.4").spec;
    CoronaLimit K = corona_limit(sq, compute_star(sq, AdjacencyKind::edge));
    ResultDocument doc = make_result(K, certify(K));
    std::string csv = encode_result_csv(doc);
    size_t lines = static_cast<size_t>(std::count(csv.begin(), csv.end(), '\n'));
    CHECK(lines == 5);  // header + 4 vertices
    CHECK(csv.find("x_1,x_sqrt2") == 0);
}

TEST_CASE("svg output is deterministic") {
    auto render = [] {
        SvgWriter w(-1, -1, 1, 1);
        Polygon sq = Polygon::make({{qs(0), qs(0)}, {qs(1), qs(0)}, {qs(1), qs(1)}, {qs(0), qs(1)}});
        w.polygon(sq, "#4e79a7", "#333333", 0.02);
        w.circle(0.25, 0.5, 0.05, "#e15759");
        return w.finish();
    };
    std::string a = render(), b = render();
    CHECK(a == b);
    CHECK(a.find("<svg") != std::string::npos);
    CHECK(a.find("</svg>") != std::string::npos);
}
