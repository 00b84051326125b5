#include <catch_amalgamated.hpp>

#include "corona/catalog.hpp"

using namespace corona;

TEST_CASE("catalog lookup") {
    const CatalogEntry& sq = catalog_get("4.4.4.4");
    CHECK(sq.spec.classes() == 1);
    const CatalogEntry& hex = catalog_get("6.6.6");
    QuarticScalar expected{Rational(0), Rational(0), Rational(3, 2), Rational(0)};
    CHECK(polygon_area(hex.spec.prototiles[0]) == expected);
    CHECK_THROWS_AS(catalog_get("3.14.15"), std::out_of_range);
}

TEST_CASE("catalog listing") {
    auto infos = catalog_list();
    CHECK(infos.size() == 14);
    int archimedean = 0;
    bool snub_golden_both = false, has_488 = false;
    for (const auto& e : infos) {
        if (e.key.find('-') == std::string::npos) ++archimedean;
        if (e.key == "3.3.4.3.4") snub_golden_both = e.golden_point && e.golden_edge;
        if (e.key == "4.8.8") has_488 = true;
    }
    CHECK(archimedean == 11);
    CHECK(snub_golden_both);
    CHECK(has_488);
    // stable ordering
    auto again = catalog_list();
    for (size_t i = 0; i < infos.size(); ++i) CHECK(infos[i].key == again[i].key);
}

TEST_CASE("octagon coordinates exercise sqrt2") {
    const CatalogEntry& e = catalog_get("4.8.8");
    bool has_sqrt2 = false;
    for (const Polygon& p : e.spec.prototiles)
        for (const Vec2& v : p.vertices())
            has_sqrt2 = has_sqrt2 || !v.x.b.is_zero() || !v.y.b.is_zero();
    CHECK(has_sqrt2);
}

TEST_CASE("every catalog entry validates with unit edges") {
    for (const auto& info : catalog_list()) {
        const CatalogEntry& e = catalog_get(info.key);
        ValidationReport rep = validate(e.spec);
        INFO(info.key);
        CHECK(rep.ok);
        for (const Polygon& p : e.spec.prototiles) {
            size_t n = p.size();
            for (size_t i = 0; i < n; ++i) {
                QuarticScalar len2 = norm2(p[(i + 1) % n] - p[i]);
                CHECK(len2 == QuarticScalar(1));
            }
        }
    }
}

TEST_CASE("prototile 0 contains the origin (default seed convention)") {
    Vec2 origin{QuarticScalar(0), QuarticScalar(0)};
    for (const auto& info : catalog_list()) {
        const CatalogEntry& e = catalog_get(info.key);
        INFO(info.key);
        CHECK(point_in_polygon(origin, e.spec.prototiles[0]) != Location::outside);
    }
}

TEST_CASE("alias 1-09 resolves to the snub square tiling") {
    CHECK(catalog_get("1-09").key == "3.3.4.3.4");
}

TEST_CASE("catalog entries export and re-validate") {
    const CatalogEntry& e = catalog_get("3.6.3.6");
    TilingSpec copy = e.spec;  // value semantics round-trip
    CHECK(validate(copy).ok);
}
