#include <catch2/catch_amalgamated.hpp>

#include "parareeb/emit.hpp"
#include "parareeb/lift.hpp"
#include "parareeb/oracle.hpp"

using namespace parareeb;

namespace {

Arrangement lens() {
    Arrangement a;
    a.label = "lens";
    a.halves.push_back({Curve::parabola_x(Rational(1), Rational(0), Rational(0)), false});
    a.halves.push_back({Curve::parabola_x(Rational(-1), Rational(0), Rational(2)), true});
    return a;
}

Arrangement unit_disk() {
    Arrangement a;
    a.label = "disk";
    a.halves.push_back({Curve::circle(Rational(0), Rational(0), Rational(1)), true});
    return a;
}

}  // namespace

TEST_CASE("raster oracle: lens and disk") {
    RasterGraph rl = raster_reeb(lens(), 512, 512);
    REQUIRE(rl.is_tree);
    CHECK(canonical_code(rl.tree) == canonical_code(Tree::path(2)));  // birth-death chain
    CHECK(agree(build_reeb(lens()), rl).agree);

    RasterGraph rd = raster_reeb(unit_disk(), 256, 256);
    REQUIRE(rd.is_tree);
    CHECK(agree(build_reeb(unit_disk()), rd).agree);
}

TEST_CASE("raster oracle: theorem2 window K=2") {
    Arrangement a = theorem2_arrangement(2, Rational(1));
    RasterGraph r = raster_reeb_stable(a, 256, 256);
    REQUIRE(r.is_tree);
    CHECK(r.stable_at > 0);
    CHECK(agree(build_reeb(a), r).agree);
}

TEST_CASE("raster oracle: resolution stability gate") {
    RasterGraph r = raster_reeb_stable(lens(), 128, 128);
    CHECK(r.stable_at > 0);
}

TEST_CASE("under-resolved raster may disagree but reports diagnostics") {
    RasterGraph r = raster_reeb(theorem2_arrangement(2, Rational(1)), 64, 64);
    auto v = agree(build_reeb(theorem2_arrangement(2, Rational(1))), r);
    if (!v.agree) CHECK(!v.diagnostics.empty());
}

TEST_CASE("arrangement JSON round trip is bit exact") {
    Arrangement a = theorem2_arrangement(1, Rational(3, 7));
    Json j = arrangement_to_json(a);
    Arrangement b = arrangement_from_json(j);
    Json j2 = arrangement_to_json(b);
    CHECK(j.dump() == j2.dump());
    REQUIRE(b.halves.size() == a.halves.size());
    for (size_t i = 0; i < a.halves.size(); ++i) {
        CHECK(a.halves[i].curve == b.halves[i].curve);
        CHECK(a.halves[i].f_positive == b.halves[i].f_positive);
    }
}

TEST_CASE("graph JSON schema round trip") {
    ReebGraph g = build_reeb(lens());
    Json j = graph_to_json(g);
    auto [vs, es] = graph_from_json(j);
    CHECK(vs.size() == 3);
    CHECK(es.size() == 2);
    // algebraic scalar serialization round-trips as an equal value
    Scalar s2 = real_roots(UniPoly({Rational(-2), Rational(0), Rational(1)}))[1];
    Scalar back = scalar_from_json(scalar_to_json(s2));
    CHECK(scalar_eq(s2, back));
}

TEST_CASE("emit determinism and content") {
    ReebGraph g = build_reeb(lens());
    std::string d1 = emit_dot(g), d2 = emit_dot(g);
    CHECK(d1 == d2);
    CHECK(d1.find("n0 -- n1") != std::string::npos);
    std::string s1 = emit_svg(g, lens()), s2 = emit_svg(g, lens());
    CHECK(s1 == s2);
    // one path element per curve
    size_t paths = 0, at = 0;
    while ((at = s1.find("<path", at)) != std::string::npos) {
        ++paths;
        at += 5;
    }
    CHECK(paths == lens().all().size());
    std::string gj1 = emit_graph_json(g), gj2 = emit_graph_json(g);
    CHECK(gj1 == gj2);
}
