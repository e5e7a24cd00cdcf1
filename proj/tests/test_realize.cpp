#include <catch2/catch_amalgamated.hpp>

#include "parareeb/emit.hpp"
#include "parareeb/realize.hpp"

using namespace parareeb;

namespace {

/// (x, y) -> (r x, y): parabola arrangements stay parabola arrangements.
Arrangement scale_x(const Arrangement& arr, const Rational& r) {
    Arrangement out;
    out.label = arr.label + "-scaled";
    auto conv = [&](const HalfRegion& h) -> HalfRegion {
        const Curve& c = h.curve;
        switch (c.kind) {
            case CurveKind::ParabolaX:
                return {Curve::parabola_x(r * c.p1, c.p2, r * c.p3), h.f_positive};
            case CurveKind::ParabolaY:
                return {Curve::parabola_y(c.p1 / (r * r), r * c.p2, c.p3), h.f_positive};
            case CurveKind::Line:
                return {Curve::line(c.p1 / r, c.p2, c.p3), h.f_positive};
            case CurveKind::Circle:
                throw std::invalid_argument("circles are not closed under x-scaling");
        }
        throw std::logic_error("unreachable");
    };
    for (const auto& h : arr.halves) out.halves.push_back(conv(h));
    for (const auto& h : arr.clip) out.clip.push_back(conv(h));
    return out;
}

}  // namespace

TEST_CASE("P2: parabolas refuse, circles give the disk") {
    CHECK_THROWS_AS(realize_tree(Tree::path(2), Family::Parabola), NotRealizable);
    auto res = realize_circles(Tree::path(2));
    CHECK(res.certified);
    CHECK(res.graph.vertices.size() == 2);
}

TEST_CASE("P3 with parabolas is the lens") {
    auto res = realize_tree(Tree::path(3), Family::Parabola);
    REQUIRE(res.certified);
    CHECK(res.arrangement.halves.size() == 2);
    CHECK(res.graph.vertices[1].kind == VertexKind::CornerPass);
}

TEST_CASE("K13 realization: one split, three leaves") {
    auto res = realize_tree(Tree::star(3), Family::Parabola);
    REQUIRE(res.certified);
    int splits = 0, leaves = 0;
    for (const auto& v : res.graph.vertices) {
        if (v.kind == VertexKind::Split) ++splits;
        if (v.kind == VertexKind::Leaf) ++leaves;
    }
    CHECK(splits == 1);
    CHECK(leaves == 3);
    CHECK(validate(res.arrangement).empty());
}

TEST_CASE("star K14: coincident-x horn apexes make one degree-4 split") {
    auto res = realize_tree(Tree::star(4), Family::Parabola);
    REQUIRE(res.certified);
    int deg4 = 0;
    std::vector<int> deg(res.graph.vertices.size(), 0);
    for (const auto& e : res.graph.edges) {
        ++deg[static_cast<size_t>(e.a)];
        ++deg[static_cast<size_t>(e.b)];
    }
    for (int d : deg)
        if (d == 4) ++deg4;
    CHECK(deg4 == 1);
}

TEST_CASE("realization is deterministic for fixed inputs") {
    auto r1 = realize_tree(parse_tree_edges("0-1,1-2,1-3,3-4"), Family::Parabola);
    auto r2 = realize_tree(parse_tree_edges("0-1,1-2,1-3,3-4"), Family::Parabola);
    CHECK(arrangement_to_json(r1.arrangement).dump() == arrangement_to_json(r2.arrangement).dump());
    CHECK(r1.attempts == r2.attempts);
}

TEST_CASE("two congruence classes, one equal to the requested one") {
    Rational klass(3, 2);
    auto res = realize_tree(parse_tree_edges("0-1,1-2,2-3,1-4,4-5,1-6,6-7"), Family::Parabola, klass);
    REQUIRE(res.certified);
    auto classes = congruence_classes(res.arrangement);
    CHECK(classes.size() <= 2);
    bool has_requested = false;
    for (const auto& c : classes)
        if ((c.kind == CurveKind::ParabolaX || c.kind == CurveKind::ParabolaY) &&
            rat_abs(c.p1) == klass)
            has_requested = true;
    CHECK(has_requested);
}

TEST_CASE("scale equivariance: x-stretch preserves the code, scales vertex x") {
    Tree t = Tree::star(3);
    auto res = realize_tree(t, Family::Parabola);
    Rational r(5, 2);
    Arrangement scaled = scale_x(res.arrangement, r);
    ReebGraph g2 = build_reeb(scaled);
    CHECK(canonical_code(as_tree(g2)) == canonical_code(t));
    // vertex x multiset scales by r
    REQUIRE(g2.vertices.size() == res.graph.vertices.size());
    std::vector<Scalar> orig, scl;
    for (const auto& v : res.graph.vertices) orig.push_back(scalar_affine(v.x, r, Rational(0)));
    for (const auto& v : g2.vertices) scl.push_back(v.x);
    std::sort(orig.begin(), orig.end(), scalar_lt);
    std::sort(scl.begin(), scl.end(), scalar_lt);
    for (size_t i = 0; i < orig.size(); ++i) CHECK(scalar_eq(orig[i], scl[i]));
}

TEST_CASE("bump operations add exactly the requested degree-2 vertices") {
    // K13 core vs K13 with one and two subdivisions on a leg
    auto base = realize_tree(Tree::star(3), Family::Parabola);
    auto one = realize_tree(parse_tree_edges("0-1,1-2,1-3,3-4"), Family::Parabola);
    auto two = realize_tree(parse_tree_edges("0-1,1-2,1-3,3-4,4-5"), Family::Parabola);
    REQUIRE(base.certified);
    REQUIRE(one.certified);
    REQUIRE(two.certified);
    CHECK(one.graph.vertices.size() == base.graph.vertices.size() + 1);
    CHECK(two.graph.vertices.size() == base.graph.vertices.size() + 2);
    // smoothed cores agree
    std::string c0 = canonical_code(smooth_tree(as_tree(base.graph)).core);
    CHECK(canonical_code(smooth_tree(as_tree(one.graph)).core) == c0);
    CHECK(canonical_code(smooth_tree(as_tree(two.graph)).core) == c0);
}

TEST_CASE("circle realization of a random 15-vertex tree") {
    // deterministic "random": a caterpillar-ish tree on 15 vertices
    Tree t = parse_tree_edges("0-1,1-2,2-3,3-4,4-5,5-6,2-7,3-8,8-9,4-10,10-11,11-12,5-13,13-14");
    auto res = realize_circles(t);
    CHECK(res.certified);
    auto classes = congruence_classes(res.arrangement);
    CHECK(classes.size() <= 2);
}

TEST_CASE("attempts stay within the budget and failures carry diagnostics") {
    auto res = realize_tree(Tree::star(5), Family::Parabola, Rational(1), 12, 3);
    CHECK(res.attempts <= 12);
    try {
        realize_tree(Tree::path(2), Family::Parabola);
        FAIL("expected NotRealizable");
    } catch (const NotRealizable& e) {
        CHECK(std::string(e.what()).find("circle") != std::string::npos);
    }
}
