#include <catch2/catch_amalgamated.hpp>

#include "parareeb/algebraic.hpp"

using namespace parareeb;

TEST_CASE("rational canonical strings") {
    CHECK(rat_to_string(Rational(7, 2)) == "7/2");
    CHECK(rat_to_string(Rational(-4, 2)) == "-2");
    CHECK(rat_from_string("7/2") == Rational(7, 2));
    CHECK(rat_from_string("-3") == Rational(-3));
    CHECK(rat_from_string("-23/4") == Rational(-23, 4));
}

TEST_CASE("perfect squares and sqrt intervals") {
    CHECK(*rat_exact_sqrt(Rational(49, 4)) == Rational(7, 2));
    CHECK(!rat_exact_sqrt(Rational(2)).has_value());
    auto [lo, hi] = rat_sqrt_interval(Rational(2), 30);
    CHECK(lo * lo <= 2);
    CHECK(hi * hi >= 2);
    CHECK(hi - lo <= Rational(1, 1 << 29));
}

TEST_CASE("simplest rational in interval") {
    CHECK(simplest_in_interval(Rational(31, 10), Rational(36, 10)) == Rational(7, 2));
    CHECK(simplest_in_interval(Rational(-1, 3), Rational(1, 5)) == 0);
    CHECK(simplest_in_interval(Rational(2), Rational(23, 10)) == Rational(2));
}

TEST_CASE("polynomial arithmetic and gcd") {
    UniPoly p({Rational(-2), Rational(0), Rational(1)});   // t^2 - 2
    UniPoly q({Rational(-4), Rational(0), Rational(0), Rational(0), Rational(1)});  // t^4 - 4
    UniPoly g = poly_gcd(p, q);
    CHECK(g.degree() == 2);
    CHECK(g.eval(Rational(0)) == Rational(-2));
    auto [quo, rem] = divmod(q, p);
    CHECK(rem.is_zero());
    CHECK((quo * p) == q);
}

TEST_CASE("isolate_roots: t^2 - 2 gives two brackets") {
    UniPoly p({Rational(-2), Rational(0), Rational(1)});
    auto roots = isolate_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].hi <= roots[1].lo);
    // each bracket certifies its root via a sign change
    CHECK(sign(p.eval(roots[0].lo)) * sign(p.eval(roots[0].hi)) < 0);
    CHECK(sign(p.eval(roots[1].lo)) * sign(p.eval(roots[1].hi)) < 0);
}

TEST_CASE("isolate_roots: (t - 1/2)^2 has one double root") {
    // 4t^2 - 4t + 1
    UniPoly p({Rational(1), Rational(-4), Rational(4)});
    auto roots = isolate_roots(p);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].multiplicity == 2);
    if (roots[0].exact()) {
        CHECK(roots[0].lo == Rational(1, 2));
    } else {
        CHECK(roots[0].lo < Rational(1, 2));
        CHECK(roots[0].hi > Rational(1, 2));
    }
}

TEST_CASE("isolate_roots: t^4 - 5t^2 + 4 isolates -2,-1,1,2") {
    // hand oracle: (t^2-1)(t^2-4)
    UniPoly p({Rational(4), Rational(0), Rational(-5), Rational(0), Rational(1)});
    auto roots = isolate_roots(p);
    REQUIRE(roots.size() == 4);
    Rational expected[4] = {Rational(-2), Rational(-1), Rational(1), Rational(2)};
    for (int i = 0; i < 4; ++i) {
        CHECK(roots[static_cast<size_t>(i)].lo <= expected[i]);
        CHECK(roots[static_cast<size_t>(i)].hi >= expected[i]);
        CHECK(p.eval(expected[i]) == 0);
    }
}

TEST_CASE("scalar normalization: quadratics become QuadNum or Rational") {
    UniPoly p({Rational(-2), Rational(0), Rational(1)});  // t^2 - 2
    auto roots = real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(std::holds_alternative<QuadNum>(roots[1]));
    // t^2 - 9/4 has rational roots
    UniPoly q({Rational(-9, 4), Rational(0), Rational(1)});
    auto qr = real_roots(q);
    REQUIRE(qr.size() == 2);
    CHECK(is_rational(qr[0]));
    CHECK(as_rational(qr[1]) == Rational(3, 2));
}

TEST_CASE("alg_compare: sqrt2 vs 3/2") {
    Scalar s2 = real_roots(UniPoly({Rational(-2), Rational(0), Rational(1)}))[1];
    CHECK(compare(s2, Scalar(Rational(3, 2))) == Ordering::Less);
    CHECK(compare(s2, Scalar(Rational(7, 5))) == Ordering::Greater);
}

TEST_CASE("alg_compare equality via shared defining root") {
    // root of t^2-2 in (1,2) vs root of t^4-4 in (1,2) are equal
    Scalar a = make_algebraic(UniPoly({Rational(-2), Rational(0), Rational(1)}),
                              {Rational(1), Rational(2), 1});
    Scalar b = make_algebraic(UniPoly({Rational(-4), Rational(0), Rational(0), Rational(0), Rational(1)}),
                              {Rational(1), Rational(2), 1});
    CHECK(compare(a, b) == Ordering::Equal);
}

TEST_CASE("window constants sort: -7/2 < -1/2 < 1/2 < 7/2") {
    std::vector<Scalar> xs = {Scalar(Rational(7, 2)), Scalar(Rational(-1, 2)),
                              Scalar(Rational(1, 2)), Scalar(Rational(-7, 2))};
    std::sort(xs.begin(), xs.end(), scalar_lt);
    CHECK(as_rational(xs[0]) == Rational(-7, 2));
    CHECK(as_rational(xs[3]) == Rational(7, 2));
}

TEST_CASE("scalar_sqrt") {
    Scalar r = scalar_sqrt(Scalar(Rational(49, 4)));
    CHECK(as_rational(r) == Rational(7, 2));
    Scalar s = scalar_sqrt(Scalar(Rational(1, 2)));
    CHECK(std::holds_alternative<QuadNum>(s));
    // (sqrt(1/2))^2 == 1/2 via sign_at of t^2 - 1/2
    CHECK(sign_at(UniPoly({Rational(-1, 2), Rational(0), Rational(1)}), s) == 0);
    // sqrt of 3 + 2 sqrt(2) = 1 + sqrt(2), stays quadratic
    Scalar q = make_quad(Rational(3), Rational(2), Rational(2));
    Scalar rq = scalar_sqrt(q);
    REQUIRE(std::holds_alternative<QuadNum>(rq));
    const QuadNum& qq = std::get<QuadNum>(rq);
    CHECK(qq.c0 == 1);
    CHECK(qq.c1 == 1);
    CHECK(qq.d == 2);
}

TEST_CASE("poly_image: square of sqrt2 is 2") {
    Scalar s2 = real_roots(UniPoly({Rational(-2), Rational(0), Rational(1)}))[1];
    Scalar sq = poly_image(s2, UniPoly({Rational(0), Rational(0), Rational(1)}));
    CHECK(is_rational(sq));
    CHECK(as_rational(sq) == 2);
}

TEST_CASE("poly_image on a degree-4 number") {
    // alpha = positive root of t^4 - 10t^2 + 1 (= sqrt2 + sqrt3, deg 4)
    UniPoly p({Rational(1), Rational(0), Rational(-10), Rational(0), Rational(1)});
    auto roots = real_roots(p);
    REQUIRE(roots.size() == 4);
    Scalar alpha = roots[3];
    // alpha^2 = 5 + 2 sqrt(6): check against defining (t-5)^2 - 24
    Scalar img = poly_image(alpha, UniPoly({Rational(0), Rational(0), Rational(1)}));
    CHECK(sign_at(UniPoly({Rational(1), Rational(-10), Rational(1)}), img) == 0);
    CHECK(compare(img, Scalar(Rational(9))) == Ordering::Greater);
    CHECK(compare(img, Scalar(Rational(10))) == Ordering::Less);
}

TEST_CASE("separating_rational") {
    CHECK(separating_rational(Scalar(Rational(-7, 2)), Scalar(Rational(-1, 2))) == Rational(-1));
    Scalar s2 = real_roots(UniPoly({Rational(-2), Rational(0), Rational(1)}))[1];
    Rational q = separating_rational(s2, Scalar(Rational(3, 2)));
    CHECK(scalar_lt(s2, Scalar(q)));
    CHECK(q < Rational(3, 2));
    CHECK(separating_rational(Scalar(Rational(-1, 2)), Scalar(Rational(1, 2))) == 0);
}

TEST_CASE("sign_at certified") {
    Scalar s2 = real_roots(UniPoly({Rational(-2), Rational(0), Rational(1)}))[1];
    // f(t) = t - 1 is positive at sqrt2
    CHECK(sign_at(UniPoly::linear(Rational(-1), Rational(1)), s2) == 1);
    // f(t) = t^2 - 2 is zero
    CHECK(sign_at(UniPoly({Rational(-2), Rational(0), Rational(1)}), s2) == 0);
    // f(t) = t - 2 negative
    CHECK(sign_at(UniPoly::linear(Rational(-2), Rational(1)), s2) == -1);
}

TEST_CASE("resultant basics") {
    // res(t^2-2, t^2-3) = 1 (no common roots, value = prod (a_i - b_j) = ... = 1)
    UniPoly p({Rational(-2), Rational(0), Rational(1)});
    UniPoly q({Rational(-3), Rational(0), Rational(1)});
    CHECK(resultant(p, q) == 1);
    CHECK(resultant(p, p) == 0);
}
