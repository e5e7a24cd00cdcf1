#include <catch2/catch_amalgamated.hpp>

#include "parareeb/region.hpp"

using namespace parareeb;

namespace {

// lens {x > y^2, x < -y^2 + 2}
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

TEST_CASE("classify lens") {
    Arrangement a = lens();
    CHECK(classify(a, Rational(1), Rational(0)).cls == PointClass::Interior);
    auto b = classify(a, Rational(0), Rational(0));
    CHECK(b.cls == PointClass::Boundary);
    REQUIRE(b.on.size() == 1);
    CHECK(b.on[0] == 0);
    CHECK(classify(a, Rational(3), Rational(0)).cls == PointClass::Exterior);
    // corner point (1, 1) is boundary on both curves
    auto c = classify(a, Rational(1), Rational(1));
    CHECK(c.cls == PointClass::Boundary);
    CHECK(c.on.size() == 2);
    // a point on the first parabola but outside the region
    CHECK(classify(a, Rational(4), Rational(2)).cls == PointClass::Exterior);
}

TEST_CASE("classify partitions a rational grid") {
    Arrangement a = lens();
    int interior = 0, boundary = 0, exterior = 0;
    for (int ix = -4; ix <= 12; ++ix) {
        for (int iy = -6; iy <= 6; ++iy) {
            Rational x(ix, 4), y(iy, 4);
            switch (classify(a, x, y).cls) {
                case PointClass::Interior: ++interior; break;
                case PointClass::Boundary: ++boundary; break;
                case PointClass::Exterior: ++exterior; break;
            }
        }
    }
    CHECK(interior > 0);
    CHECK(exterior > 0);
    CHECK(interior + boundary + exterior == 17 * 13);
}

TEST_CASE("validate: lens is a valid RA-region") {
    CHECK(validate(lens()).empty());
    CHECK(validate(unit_disk()).empty());
}

TEST_CASE("validate: externally tangent parabolas violate transversality") {
    Arrangement a;
    a.halves.push_back({Curve::parabola_x(Rational(1), Rational(0), Rational(0)), false});  // x > y^2
    a.halves.push_back({Curve::parabola_x(Rational(-1), Rational(0), Rational(0)), true});  // x < -y^2
    auto v = validate(a);
    REQUIRE(!v.empty());
    bool tangential = false;
    for (const auto& viol : v)
        if (viol.what.find("tangential") != std::string::npos) tangential = true;
    CHECK(tangential);
}

TEST_CASE("validate: three congruent parabolas through one point") {
    // All pass through (5, 5): u_i = 5 - (5 - v_i)^2, region left of each.
    Arrangement a;
    for (long v : {0L, 1L, 2L}) {
        Rational vv(v);
        Rational u = Rational(5) - (Rational(5) - vv) * (Rational(5) - vv);
        a.halves.push_back({Curve::parabola_x(Rational(1), vv, u), true});
    }
    auto viols = validate(a);
    bool triple = false;
    for (const auto& viol : viols)
        if (viol.what.find("3 curves") != std::string::npos) triple = true;
    CHECK(triple);
}

TEST_CASE("singular points of the lens") {
    auto sp = singular_points(lens());
    REQUIRE(sp.size() == 4);
    // sorted by x: tangency at 0, corners at 1 (y = -1, 1), tangency at 2
    CHECK(sp[0].kind == SingularPoint::Kind::Tangency);
    CHECK(as_rational(sp[0].point.x) == 0);
    CHECK(sp[1].kind == SingularPoint::Kind::Corner);
    CHECK(as_rational(sp[1].point.x) == 1);
    CHECK(as_rational(sp[1].point.y) == -1);
    CHECK(sp[2].kind == SingularPoint::Kind::Corner);
    CHECK(as_rational(sp[2].point.x) == 1);
    CHECK(as_rational(sp[2].point.y) == 1);
    CHECK(sp[3].kind == SingularPoint::Kind::Tangency);
    CHECK(as_rational(sp[3].point.x) == 2);
    // 3 distinct x values
    CHECK(scalar_eq(sp[1].point.x, sp[2].point.x));
}

TEST_CASE("singular points of the unit disk") {
    auto sp = singular_points(unit_disk());
    REQUIRE(sp.size() == 2);
    CHECK(sp[0].kind == SingularPoint::Kind::Tangency);
    CHECK(as_rational(sp[0].point.x) == -1);
    CHECK(as_rational(sp[1].point.x) == 1);
}

TEST_CASE("every singular point classifies as boundary") {
    for (const auto& sp : singular_points(lens())) {
        if (is_rational(sp.point.x) && is_rational(sp.point.y)) {
            auto c = classify(lens(), as_rational(sp.point.x), as_rational(sp.point.y));
            CHECK(c.cls == PointClass::Boundary);
        }
    }
}
