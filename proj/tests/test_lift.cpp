#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "parareeb/lift.hpp"

using namespace parareeb;

TEST_CASE("theorem2 window is a valid arrangement with the expected x-values") {
    Arrangement a = theorem2_arrangement(2, Rational(1));
    CHECK(validate(a).empty());
    auto xs = critical_xs(a);
    REQUIRE(xs.size() == 4);
    CHECK(as_rational(xs[0]) == Rational(-7, 2));
    CHECK(as_rational(xs[1]) == Rational(-1, 2));
    CHECK(as_rational(xs[2]) == Rational(1, 2));
    CHECK(as_rational(xs[3]) == Rational(7, 2));
}

TEST_CASE("theorem2 K=1 graph shape: split/merge caterpillar") {
    ReebGraph g = build_reeb(theorem2_arrangement(1, Rational(1)));
    CHECK(g.vertices.size() == 14);
    CHECK(g.edges.size() == 13);
    CHECK(canonical_code(as_tree(g)) == canonical_code(expected_theorem2_tree(1)));
    // splits at -1/2 with pendant leaf at -7/2; merges at 1/2 pendant at 7/2
    int splits = 0, merges = 0;
    for (const auto& v : g.vertices) {
        if (v.kind == VertexKind::Split) {
            ++splits;
            CHECK(as_rational(v.x) == Rational(-1, 2));
            bool pendant = false;
            for (const auto& e : g.edges) {
                int other = e.a == v.id ? e.b : (e.b == v.id ? e.a : -1);
                if (other < 0) continue;
                const auto& o = g.vertices[static_cast<size_t>(other)];
                if (o.kind == VertexKind::Leaf && scalar_eq(o.x, Scalar(Rational(-7, 2))))
                    pendant = true;
            }
            CHECK(pendant);
        }
        if (v.kind == VertexKind::Merge) {
            ++merges;
            CHECK(as_rational(v.x) == Rational(1, 2));
        }
    }
    CHECK(splits == 3);
    CHECK(merges == 2);
}

TEST_CASE("theorem2 K=2 matches the expected caterpillar") {
    ReebGraph g = build_reeb(theorem2_arrangement(2, Rational(1)));
    CHECK(g.vertices.size() == 22);
    CHECK(canonical_code(as_tree(g)) == canonical_code(expected_theorem2_tree(2)));
}

TEST_CASE("K and K+1 windows agree on the interior") {
    ReebGraph g1 = build_reeb(theorem2_arrangement(1, Rational(1)));
    ReebGraph g2 = build_reeb(theorem2_arrangement(2, Rational(1)));
    Tree i1 = interior_tree(g1, Rational(4));
    Tree i2 = interior_tree(g2, Rational(4));
    CHECK(canonical_code(i1) == canonical_code(i2));
}

TEST_CASE("x-stretch equivariance: K=1 with r=2") {
    ReebGraph g = build_reeb(theorem2_arrangement(1, Rational(2)));
    CHECK(canonical_code(as_tree(g)) == canonical_code(expected_theorem2_tree(1)));
    auto xs = critical_xs(theorem2_arrangement(1, Rational(2)));
    REQUIRE(xs.size() == 4);
    CHECK(as_rational(xs[0]) == Rational(-7));
    CHECK(as_rational(xs[3]) == Rational(7));
}

TEST_CASE("literal-sign variant is unbounded as written") {
    Arrangement lit = theorem2_arrangement(1, Rational(1), true);
    CHECK_THROWS_AS(build_reeb(lit), Unbounded);
}

TEST_CASE("eval_c window values") {
    CHECK(eval_c(0, 0.0) == -0.5);
    CHECK(eval_c(0, 2.0) == 3.5);
    CHECK(std::fabs(eval_c(0, 4.0)) > 23.0 / 4.0);
    // exact window polynomial inside |u| <= 5/2
    for (double u = -2.5; u <= 2.5; u += 0.125) {
        CHECK(eval_c(0, u) == u * u - 0.5);
        CHECK(eval_c(2, 2.0 + u) == 0.5 - u * u);
    }
    // plateau magnitude beyond the blend
    for (double u = 3.0; u <= 4.0; u += 0.25) {
        CHECK(std::fabs(eval_c(1, 4.0 + u)) > 23.0 / 4.0);
        CHECK(std::fabs(eval_c(3, 6.0 + u)) > 23.0 / 4.0);
    }
}

TEST_CASE("eval_c equivalence: |c| <= 7/2 iff within 2 of the family lattice") {
    const double off[4] = {0.0, 4.0, 2.0, 6.0};
    for (int k = 0; k < 4; ++k) {
        for (double x2 = -20.0; x2 <= 20.0; x2 += 0.0625) {
            double c = eval_c(k, x2);
            double j = std::round((x2 - off[k]) / 8.0);
            double dist = std::fabs(x2 - off[k] - 8.0 * j);
            bool in_range = c >= -3.5 && c <= 3.5;
            CHECK(in_range == (dist <= 2.0));
        }
    }
}

TEST_CASE("eval_e symmetries") {
    std::vector<double> p = {1.0, 2.3, 0.7, 0.2, -0.4};
    auto [w1, w2] = eval_e(3, p);
    std::vector<double> q = p;
    q[2] = -q[2];
    auto [v1, v2] = eval_e(3, q);
    CHECK(w1 == v1);
    CHECK(w2 == v2);
    // rotate (y2, y3) by an angle: w2 invariant
    double th = 0.83;
    std::vector<double> r = p;
    r[3] = std::cos(th) * p[3] - std::sin(th) * p[4];
    r[4] = std::sin(th) * p[3] + std::cos(th) * p[4];
    auto [u1, u2] = eval_e(3, r);
    CHECK(u1 == w1);
    CHECK(std::fabs(u2 - w2) < 1e-12);
}

TEST_CASE("eval_e vanishing factor") {
    double x2 = 5.0;
    double x1 = eval_c(1, x2);
    std::vector<double> p = {x1, x2, 0.0, 0.0, 0.0};
    auto [w1, w2] = eval_e(3, p);
    CHECK(w1 == 0.0);
    (void)w2;
}

TEST_CASE("finite differences match analytic partials inside windows") {
    // x2 = 2.8: c1 inside its window (dist to 8Z+4 is 1.2 <= 5/2), c3 on its
    // plateau (dist to 8Z+6 is 3.2 >= 3, derivative 0)
    double x2 = 2.8;
    double x1 = 1.1, y1 = 0.4;
    double c1 = eval_c(1, x2), c3 = eval_c(3, x2);
    double dw1_dx1 = -(x1 - c3) + (c1 - x1);
    double dw1_dx2 = eval_c_prime_window(1, x2) * (x1 - c3);
    double dw1_dy1 = -2 * y1;
    auto w1_at = [&](double a, double b, double c) {
        return (eval_c(1, b) - a) * (a - eval_c(3, b)) - c * c;
    };
    for (double h : {1e-4, 5e-5}) {
        double fd_x1 = (w1_at(x1 + h, x2, y1) - w1_at(x1 - h, x2, y1)) / (2 * h);
        double fd_x2 = (w1_at(x1, x2 + h, y1) - w1_at(x1, x2 - h, y1)) / (2 * h);
        double fd_y1 = (w1_at(x1, x2, y1 + h) - w1_at(x1, x2, y1 - h)) / (2 * h);
        CHECK(std::fabs(fd_x1 - dw1_dx1) < 1e-7);
        CHECK(std::fabs(fd_x2 - dw1_dx2) < 1e-7);
        CHECK(std::fabs(fd_y1 - dw1_dy1) < 1e-7);
    }
}

TEST_CASE("sampled zero set has tiny residuals and full rank") {
    int skipped = 0;
    auto samples = sample_zero_set(3, 200, 7, 2, &skipped);
    REQUIRE(static_cast<int>(samples.size()) == 200);
    int rank_ok = 0;
    bool saw_corner = false, saw_single = false;
    for (const auto& s : samples) {
        auto [w1, w2] = eval_e(3, s.p);
        CHECK(std::fabs(w1) < 1e-10);
        CHECK(std::fabs(w2) < 1e-10);
        if (rank_check(3, s.p, 1e-5).rank2) ++rank_ok;
        if (s.boundary_case == 2) saw_corner = true;
        if (s.boundary_case == 1) saw_single = true;
    }
    CHECK(saw_corner);
    CHECK(saw_single);
    CHECK(rank_ok >= 199);
}

TEST_CASE("negative control is rank deficient") {
    std::vector<double> p = {6.0, 0.0, 0.0, 0.0, 0.0};
    auto v = rank_check_fn(3, p, 1e-5, [](int m, const std::vector<double>& q) {
        return eval_e_degenerate(m, q);
    });
    CHECK(!v.rank2);
}

TEST_CASE("small verify_lift run") {
    LiftReport rep = verify_lift(3, 500, 11, 1e-5, 2, 0.25);
    CHECK(rep.samples == 500);
    CHECK(rep.max_residual < 1e-10);
    CHECK(rep.rank2_fraction >= 0.999);
    CHECK(rep.membership_fraction == 1.0);
    CHECK(rep.negative_control_flagged);
    CHECK(rep.coverage > 0.5);  // loose at 500 samples; acceptance runs 1e4
}

TEST_CASE("verify_projection standalone, including the empty list") {
    auto empty = verify_projection(3, {});
    CHECK(empty.membership_fraction == 1.0);
    CHECK(empty.coverage == 0.0);
    auto samples = sample_zero_set(3, 300, 5, 2);
    auto rep = verify_projection(3, samples, 2, 0.3);
    CHECK(rep.membership_fraction == 1.0);
    CHECK(rep.coverage > 0.4);
}
