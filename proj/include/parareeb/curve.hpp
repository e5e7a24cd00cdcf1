#pragma once

// Canonical degree-1/2 curves, their fixed implicit sign conventions, exact
// intersection, vertical slicing, projection-critical points and congruence.
//
// Sign conventions (f > 0 picks a side):
//   Line       f = alpha x + beta y + gamma
//   ParabolaX  f = a (y - v)^2 + u - x        (x = a(y-v)^2 + u)
//   ParabolaY  f = a (x - h)^2 + k - y        (y = a(x-h)^2 + k)
//   Circle     f = r2 - (x - cx)^2 - (y - cy)^2

#include <array>
#include <optional>
#include <vector>

#include "parareeb/algebraic.hpp"

namespace parareeb {

struct OverlappingCurves : std::runtime_error {
    OverlappingCurves() : std::runtime_error("curves share a component") {}
};
struct VerticalLineOverlap : std::runtime_error {
    VerticalLineOverlap() : std::runtime_error("curve contains the whole vertical line") {}
};

enum class CurveKind { Line, ParabolaX, ParabolaY, Circle };

struct Curve {
    CurveKind kind;
    Rational p1, p2, p3;

    static Curve line(const Rational& alpha, const Rational& beta, const Rational& gamma) {
        if (alpha == 0 && beta == 0) throw std::invalid_argument("degenerate line");
        return {CurveKind::Line, alpha, beta, gamma};
    }
    static Curve parabola_x(const Rational& a, const Rational& v, const Rational& u) {
        if (a == 0) throw std::invalid_argument("parabola needs a != 0");
        return {CurveKind::ParabolaX, a, v, u};
    }
    static Curve parabola_y(const Rational& a, const Rational& h, const Rational& k) {
        if (a == 0) throw std::invalid_argument("parabola needs a != 0");
        return {CurveKind::ParabolaY, a, h, k};
    }
    static Curve circle(const Rational& cx, const Rational& cy, const Rational& r2) {
        if (r2 <= 0) throw std::invalid_argument("circle needs r2 > 0");
        return {CurveKind::Circle, cx, cy, r2};
    }

    bool operator==(const Curve& o) const {
        return kind == o.kind && p1 == o.p1 && p2 == o.p2 && p3 == o.p3;
    }
};

/// Intersection / singular points. Coordinates are exact; when both are
/// irrational the `link` records the dependent coordinate as a polynomial of
/// the other, which downstream sign evaluations rely on.
struct PointLink {
    bool y_of_x;  // true: y = g(x); false: x = g(y)
    UniPoly g;
};

struct PlanePoint {
    Scalar x, y;
    std::optional<PointLink> link;

    PlanePoint() : x(Rational(0)), y(Rational(0)) {}
    PlanePoint(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}
    PlanePoint(Scalar px, Scalar py, PointLink l)
        : x(std::move(px)), y(std::move(py)), link(std::move(l)) {}
};

inline bool point_eq(const PlanePoint& a, const PlanePoint& b) {
    return scalar_eq(a.x, b.x) && scalar_eq(a.y, b.y);
}

/// f(x, y) at a rational point under the fixed sign convention.
inline Rational implicit_eval(const Curve& c, const Rational& x, const Rational& y) {
    switch (c.kind) {
        case CurveKind::Line:
            return c.p1 * x + c.p2 * y + c.p3;
        case CurveKind::ParabolaX:
            return c.p1 * (y - c.p2) * (y - c.p2) + c.p3 - x;
        case CurveKind::ParabolaY:
            return c.p1 * (x - c.p2) * (x - c.p2) + c.p3 - y;
        case CurveKind::Circle:
            return c.p3 - (x - c.p1) * (x - c.p1) - (y - c.p2) * (y - c.p2);
    }
    throw std::logic_error("unreachable");
}

inline Rational implicit_eval(const Curve& c, const PlanePoint& p) {
    return implicit_eval(c, as_rational(p.x), as_rational(p.y));
}

inline double implicit_eval_d(const Curve& c, double x, double y) {
    double p1 = rat_to_double(c.p1), p2 = rat_to_double(c.p2), p3 = rat_to_double(c.p3);
    switch (c.kind) {
        case CurveKind::Line: return p1 * x + p2 * y + p3;
        case CurveKind::ParabolaX: return p1 * (y - p2) * (y - p2) + p3 - x;
        case CurveKind::ParabolaY: return p1 * (x - p2) * (x - p2) + p3 - y;
        case CurveKind::Circle: return p3 - (x - p1) * (x - p1) - (y - p2) * (y - p2);
    }
    return 0.0;
}

/// f as a polynomial in y whose coefficients are polynomials in x
/// (ascending y-degree).
inline std::array<UniPoly, 3> poly_in_y(const Curve& c) {
    switch (c.kind) {
        case CurveKind::Line:
            return {UniPoly::linear(c.p3, c.p1), UniPoly::constant(c.p2), UniPoly()};
        case CurveKind::ParabolaX:
            return {UniPoly::linear(c.p1 * c.p2 * c.p2 + c.p3, Rational(-1)),
                    UniPoly::constant(-2 * c.p1 * c.p2), UniPoly::constant(c.p1)};
        case CurveKind::ParabolaY: {
            // a(x-h)^2 + k - y
            UniPoly c0({c.p1 * c.p2 * c.p2 + c.p3, -2 * c.p1 * c.p2, c.p1});
            return {c0, UniPoly::constant(Rational(-1)), UniPoly()};
        }
        case CurveKind::Circle: {
            UniPoly c0({c.p3 - c.p1 * c.p1 - c.p2 * c.p2, 2 * c.p1, Rational(-1)});
            return {c0, UniPoly::constant(2 * c.p2), UniPoly::constant(Rational(-1))};
        }
    }
    throw std::logic_error("unreachable");
}

/// f as a polynomial in x with coefficients in y (ascending x-degree).
inline std::array<UniPoly, 3> poly_in_x(const Curve& c) {
    switch (c.kind) {
        case CurveKind::Line:
            return {UniPoly::linear(c.p3, c.p2), UniPoly::constant(c.p1), UniPoly()};
        case CurveKind::ParabolaX: {
            UniPoly c0({c.p1 * c.p2 * c.p2 + c.p3, -2 * c.p1 * c.p2, c.p1});
            return {c0, UniPoly::constant(Rational(-1)), UniPoly()};
        }
        case CurveKind::ParabolaY:
            return {UniPoly::linear(c.p1 * c.p2 * c.p2 + c.p3, Rational(-1)),
                    UniPoly::constant(-2 * c.p1 * c.p2), UniPoly::constant(c.p1)};
        case CurveKind::Circle: {
            UniPoly c0({c.p3 - c.p1 * c.p1 - c.p2 * c.p2, 2 * c.p2, Rational(-1)});
            return {c0, UniPoly::constant(2 * c.p1), UniPoly::constant(Rational(-1))};
        }
    }
    throw std::logic_error("unreachable");
}

/// f restricted to the vertical line x = b, as a polynomial in y.
inline UniPoly poly_in_y_at(const Curve& c, const Rational& b) {
    auto cs = poly_in_y(c);
    return UniPoly({cs[0].eval(b), cs[1].is_zero() ? Rational(0) : cs[1].eval(b),
                    cs[2].is_zero() ? Rational(0) : cs[2].eval(b)});
}

/// Substitute a link into f: returns the univariate restriction of f to the
/// curve of the link (variable = the link's base coordinate).
inline UniPoly compose_with_link(const Curve& c, const PointLink& link) {
    auto cs = link.y_of_x ? poly_in_y(c) : poly_in_x(c);
    UniPoly out = cs[0];
    UniPoly gp = link.g;
    out = out + cs[1] * gp;
    out = out + cs[2] * (gp * gp);
    return out;
}

/// Certified sign of f at an exact point.
inline int sign_at_point(const Curve& c, const PlanePoint& p) {
    bool xr = is_rational(p.x), yr = is_rational(p.y);
    if (xr && yr) return sign(implicit_eval(c, as_rational(p.x), as_rational(p.y)));
    if (xr) return sign_at(poly_in_y_at(c, as_rational(p.x)), p.y);
    if (yr) {
        auto cs = poly_in_x(c);
        const Rational& y0 = as_rational(p.y);
        UniPoly f({cs[0].eval(y0), cs[1].is_zero() ? Rational(0) : cs[1].eval(y0),
                   cs[2].is_zero() ? Rational(0) : cs[2].eval(y0)});
        return sign_at(f, p.x);
    }
    if (!p.link) {
        // both quadratic in the same field: evaluate via QuadNum arithmetic
        if (std::holds_alternative<QuadNum>(p.x) && std::holds_alternative<QuadNum>(p.y) &&
            std::get<QuadNum>(p.x).d == std::get<QuadNum>(p.y).d) {
            const QuadNum &qx = std::get<QuadNum>(p.x), &qy = std::get<QuadNum>(p.y);
            const Rational& d = qx.d;
            // evaluate f treating values as (c0, c1) pairs over sqrt(d)
            auto mul = [&](std::pair<Rational, Rational> a, std::pair<Rational, Rational> b) {
                return std::make_pair(a.first * b.first + a.second * b.second * d,
                                      a.first * b.second + a.second * b.first);
            };
            auto sub = [&](std::pair<Rational, Rational> a, std::pair<Rational, Rational> b) {
                return std::make_pair(a.first - b.first, a.second - b.second);
            };
            std::pair<Rational, Rational> X{qx.c0, qx.c1}, Y{qy.c0, qy.c1};
            std::pair<Rational, Rational> val{Rational(0), Rational(0)};
            switch (c.kind) {
                case CurveKind::Line: {
                    val = {c.p1 * X.first + c.p2 * Y.first + c.p3, c.p1 * X.second + c.p2 * Y.second};
                    break;
                }
                case CurveKind::ParabolaX: {
                    auto t = sub(Y, {c.p2, Rational(0)});
                    auto t2 = mul(t, t);
                    val = sub({c.p1 * t2.first + c.p3, c.p1 * t2.second}, X);
                    break;
                }
                case CurveKind::ParabolaY: {
                    auto t = sub(X, {c.p2, Rational(0)});
                    auto t2 = mul(t, t);
                    val = sub({c.p1 * t2.first + c.p3, c.p1 * t2.second}, Y);
                    break;
                }
                case CurveKind::Circle: {
                    auto dx = sub(X, {c.p1, Rational(0)});
                    auto dy = sub(Y, {c.p2, Rational(0)});
                    auto dx2 = mul(dx, dx), dy2 = mul(dy, dy);
                    val = {c.p3 - dx2.first - dy2.first, -dx2.second - dy2.second};
                }
            }
            return QuadNum{val.first, val.second, d}.sign_value();
        }
        throw std::logic_error("sign_at_point: unlinked irrational point");
    }
    UniPoly f = compose_with_link(c, *p.link);
    return sign_at(f, p.link->y_of_x ? p.x : p.y);
}

/// Critical points of the projection to x restricted to the curve.
inline std::vector<std::pair<Scalar, PlanePoint>> x_extremes(const Curve& c) {
    std::vector<std::pair<Scalar, PlanePoint>> out;
    switch (c.kind) {
        case CurveKind::Line:
        case CurveKind::ParabolaY:
            break;
        case CurveKind::ParabolaX: {
            Scalar x(c.p3);
            out.push_back({x, PlanePoint(Scalar(c.p3), Scalar(c.p2))});
            break;
        }
        case CurveKind::Circle: {
            Scalar r = scalar_sqrt(Scalar(c.p3));
            Scalar xl = scalar_affine(r, Rational(-1), c.p1);
            Scalar xr = scalar_affine(r, Rational(1), c.p1);
            out.push_back({xl, PlanePoint(xl, Scalar(c.p2))});
            out.push_back({xr, PlanePoint(xr, Scalar(c.p2))});
            break;
        }
    }
    return out;
}

/// All y with (b, y) on the curve, ascending. At most 2.
inline std::vector<Scalar> vertical_slice(const Curve& c, const Rational& b) {
    std::vector<Scalar> out;
    switch (c.kind) {
        case CurveKind::Line: {
            if (c.p2 == 0) {
                if (c.p1 * b + c.p3 == 0) throw VerticalLineOverlap();
                return out;
            }
            out.push_back(Scalar(Rational(-(c.p1 * b + c.p3) / c.p2)));
            return out;
        }
        case CurveKind::ParabolaX: {
            Rational w = (b - c.p3) / c.p1;
            if (w < 0) return out;
            if (w == 0) {
                out.push_back(Scalar(c.p2));
                return out;
            }
            Scalar s = scalar_sqrt(Scalar(w));
            out.push_back(scalar_affine(s, Rational(-1), c.p2));
            out.push_back(scalar_affine(s, Rational(1), c.p2));
            return out;
        }
        case CurveKind::ParabolaY: {
            out.push_back(Scalar(Rational(c.p1 * (b - c.p2) * (b - c.p2) + c.p3)));
            return out;
        }
        case CurveKind::Circle: {
            Rational w = c.p3 - (b - c.p1) * (b - c.p1);
            if (w < 0) return out;
            if (w == 0) {
                out.push_back(Scalar(c.p2));
                return out;
            }
            Scalar s = scalar_sqrt(Scalar(w));
            out.push_back(scalar_affine(s, Rational(-1), c.p2));
            out.push_back(scalar_affine(s, Rational(1), c.p2));
            return out;
        }
    }
    return out;
}

/// Congruence: rotations, translations, reflections allowed.
inline bool is_congruent(const Curve& a, const Curve& b) {
    bool a_par = a.kind == CurveKind::ParabolaX || a.kind == CurveKind::ParabolaY;
    bool b_par = b.kind == CurveKind::ParabolaX || b.kind == CurveKind::ParabolaY;
    if (a_par && b_par) return rat_abs(a.p1) == rat_abs(b.p1);
    if (a.kind == CurveKind::Circle && b.kind == CurveKind::Circle) return a.p3 == b.p3;
    if (a.kind == CurveKind::Line && b.kind == CurveKind::Line) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Intersection
// ---------------------------------------------------------------------------

struct Intersection {
    PlanePoint point;
    bool tangential = false;
};

namespace detail {

inline bool lines_proportional(const Curve& a, const Curve& b) {
    return a.p1 * b.p2 - a.p2 * b.p1 == 0 && a.p1 * b.p3 - a.p3 * b.p1 == 0 &&
           a.p2 * b.p3 - a.p3 * b.p2 == 0;
}

/// Gradient components as affine forms c_x * x + c_y * y + c_0.
struct Affine2 {
    Rational ax, ay, c;
};

inline std::pair<Affine2, Affine2> gradient(const Curve& c) {
    switch (c.kind) {
        case CurveKind::Line:
            return {{Rational(0), Rational(0), c.p1}, {Rational(0), Rational(0), c.p2}};
        case CurveKind::ParabolaX:
            return {{Rational(0), Rational(0), Rational(-1)},
                    {Rational(0), 2 * c.p1, -2 * c.p1 * c.p2}};
        case CurveKind::ParabolaY:
            return {{2 * c.p1, Rational(0), -2 * c.p1 * c.p2},
                    {Rational(0), Rational(0), Rational(-1)}};
        case CurveKind::Circle:
            return {{Rational(-2), Rational(0), 2 * c.p1},
                    {Rational(0), Rational(-2), 2 * c.p2}};
    }
    throw std::logic_error("unreachable");
}

/// Cross of the two gradients as a bivariate quadratic, stored by
/// coefficients of {1, x, y, x^2, xy, y^2}.
struct Quad2 {
    std::array<Rational, 6> q{};
};

inline Quad2 affine_product_diff(const Affine2& a, const Affine2& b, const Affine2& c,
                                 const Affine2& d) {
    // a*b - c*d
    Quad2 r;
    auto acc = [&](const Affine2& u, const Affine2& v, int s) {
        Rational sg(s);
        r.q[0] += sg * u.c * v.c;
        r.q[1] += sg * (u.ax * v.c + u.c * v.ax);
        r.q[2] += sg * (u.ay * v.c + u.c * v.ay);
        r.q[3] += sg * u.ax * v.ax;
        r.q[4] += sg * (u.ax * v.ay + u.ay * v.ax);
        r.q[5] += sg * u.ay * v.ay;
    };
    acc(a, b, 1);
    acc(c, d, -1);
    return r;
}

inline Quad2 gradient_cross(const Curve& c1, const Curve& c2) {
    auto [fx1, fy1] = gradient(c1);
    auto [fx2, fy2] = gradient(c2);
    return affine_product_diff(fx1, fy2, fy1, fx2);
}

inline Rational quad2_eval(const Quad2& t, const Rational& x, const Rational& y) {
    return t.q[0] + t.q[1] * x + t.q[2] * y + t.q[3] * x * x + t.q[4] * x * y + t.q[5] * y * y;
}

/// Substitute the dependent coordinate: if y_of_x, returns T(x, g(x)).
inline UniPoly quad2_compose(const Quad2& t, const PointLink& link) {
    const UniPoly& g = link.g;
    UniPoly base({t.q[0]});
    if (link.y_of_x) {
        base = base + UniPoly::linear(Rational(0), t.q[1]);                     // x
        base = base + g * t.q[2];                                               // y
        base = base + UniPoly({Rational(0), Rational(0), t.q[3]});              // x^2
        base = base + g * UniPoly::linear(Rational(0), t.q[4]);                 // x y
        base = base + g * g * t.q[5];                                           // y^2
    } else {
        base = base + g * t.q[1];
        base = base + UniPoly::linear(Rational(0), t.q[2]);
        base = base + g * g * t.q[3];
        base = base + g * UniPoly::linear(Rational(0), t.q[4]);
        base = base + UniPoly({Rational(0), Rational(0), t.q[5]});
    }
    return base;
}

inline bool tangential_at(const Curve& c1, const Curve& c2, const PlanePoint& p) {
    Quad2 t = gradient_cross(c1, c2);
    bool xr = is_rational(p.x), yr = is_rational(p.y);
    if (xr && yr) return quad2_eval(t, as_rational(p.x), as_rational(p.y)) == 0;
    if (xr) {
        const Rational& x0 = as_rational(p.x);
        UniPoly f({t.q[0] + t.q[1] * x0 + t.q[3] * x0 * x0, t.q[2] + t.q[4] * x0, t.q[5]});
        return sign_at(f, p.y) == 0;
    }
    if (yr) {
        const Rational& y0 = as_rational(p.y);
        UniPoly f({t.q[0] + t.q[2] * y0 + t.q[5] * y0 * y0, t.q[1] + t.q[4] * y0, t.q[3]});
        return sign_at(f, p.x) == 0;
    }
    if (!p.link) throw std::logic_error("tangential_at: unlinked irrational point");
    UniPoly f = quad2_compose(t, *p.link);
    return sign_at(f, p.link->y_of_x ? p.x : p.y) == 0;
}

/// Roots of A t^2 + B t + C as Scalars (ascending); empty when no real root.
inline std::vector<Scalar> solve_quadratic(const Rational& A, const Rational& B,
                                           const Rational& C) {
    std::vector<Scalar> out;
    if (A == 0) {
        if (B == 0) return out;  // constant: no isolated roots (or all of R, caller guards)
        out.push_back(Scalar(Rational(-C / B)));
        return out;
    }
    Rational disc = B * B - 4 * A * C;
    if (disc < 0) return out;
    if (disc == 0) {
        out.push_back(Scalar(Rational(-B / (2 * A))));
        return out;
    }
    Scalar lo = make_quad(-B / (2 * A), A > 0 ? Rational(-1) / (2 * A) : Rational(1) / (2 * A), disc);
    Scalar hi = make_quad(-B / (2 * A), A > 0 ? Rational(1) / (2 * A) : Rational(-1) / (2 * A), disc);
    out.push_back(lo);
    out.push_back(hi);
    return out;
}

}  // namespace detail

/// All common real points of two distinct curves with tangency flags.
inline std::vector<Intersection> intersect(const Curve& c1, const Curve& c2) {
    using namespace detail;
    if (c1.kind == c2.kind) {
        if (c1.kind == CurveKind::Line) {
            if (lines_proportional(c1, c2)) throw OverlappingCurves();
        } else if (c1 == c2) {
            throw OverlappingCurves();
        }
    }
    std::vector<Intersection> out;
    auto finish = [&](PlanePoint p) {
        bool tang = tangential_at(c1, c2, p);
        out.push_back({std::move(p), tang});
    };

    auto order = [](CurveKind k) {
        switch (k) {
            case CurveKind::Line: return 0;
            case CurveKind::ParabolaX: return 1;
            case CurveKind::ParabolaY: return 2;
            case CurveKind::Circle: return 3;
        }
        return 4;
    };
    const Curve& a = order(c1.kind) <= order(c2.kind) ? c1 : c2;
    const Curve& b = order(c1.kind) <= order(c2.kind) ? c2 : c1;

    if (a.kind == CurveKind::Line && b.kind == CurveKind::Line) {
        Rational det = a.p1 * b.p2 - b.p1 * a.p2;
        if (det == 0) return out;  // parallel, overlap handled above
        Rational x = (a.p2 * b.p3 - b.p2 * a.p3) / det;
        Rational y = (b.p1 * a.p3 - a.p1 * b.p3) / det;
        finish(PlanePoint(Scalar(x), Scalar(y)));
        return out;
    }

    if (a.kind == CurveKind::Line) {
        // substitute the line into the conic
        if (a.p2 == 0) {
            // vertical line x = x0
            Rational x0 = -a.p3 / a.p1;
            for (Scalar& y : vertical_slice(b, x0)) finish(PlanePoint(Scalar(x0), std::move(y)));
            return out;
        }
        // y = g(x) linear
        UniPoly g = UniPoly::linear(-a.p3 / a.p2, -a.p1 / a.p2);
        PointLink link{true, g};
        UniPoly f = compose_with_link(b, link);
        if (f.degree() <= 0) return out;
        if (f.degree() == 1) {
            Rational x = -f.c[0] / f.c[1];
            finish(PlanePoint(Scalar(x), Scalar(g.eval(x)), link));
            return out;
        }
        for (Scalar& x : solve_quadratic(f.c[2], f.c[1], f.c[0])) {
            Scalar y = poly_image(x, g);
            finish(PlanePoint(std::move(x), std::move(y), link));
        }
        return out;
    }

    if (a.kind == CurveKind::ParabolaX && b.kind == CurveKind::ParabolaX) {
        // x cancels: D(y) = f2 - f1 restricted
        Rational A = a.p1 - b.p1;
        Rational B = -2 * (a.p1 * a.p2 - b.p1 * b.p2);
        Rational C = a.p1 * a.p2 * a.p2 + a.p3 - b.p1 * b.p2 * b.p2 - b.p3;
        UniPoly g({a.p1 * a.p2 * a.p2 + a.p3, -2 * a.p1 * a.p2, a.p1});  // x = g(y)
        PointLink link{false, g};
        for (Scalar& y : solve_quadratic(A, B, C)) {
            Scalar x = poly_image(y, g);
            finish(PlanePoint(std::move(x), std::move(y), link));
        }
        return out;
    }

    if (a.kind == CurveKind::ParabolaY && b.kind == CurveKind::ParabolaY) {
        Rational A = a.p1 - b.p1;
        Rational B = -2 * (a.p1 * a.p2 - b.p1 * b.p2);
        Rational C = a.p1 * a.p2 * a.p2 + a.p3 - b.p1 * b.p2 * b.p2 - b.p3;
        UniPoly g({a.p1 * a.p2 * a.p2 + a.p3, -2 * a.p1 * a.p2, a.p1});  // y = g(x)
        PointLink link{true, g};
        for (Scalar& x : solve_quadratic(A, B, C)) {
            Scalar y = poly_image(x, g);
            finish(PlanePoint(std::move(x), std::move(y), link));
        }
        return out;
    }

    if (a.kind == CurveKind::Circle && b.kind == CurveKind::Circle) {
        Rational lx = 2 * (a.p1 - b.p1);
        Rational ly = 2 * (a.p2 - b.p2);
        Rational lc = (a.p3 - b.p3) + b.p1 * b.p1 - a.p1 * a.p1 + b.p2 * b.p2 - a.p2 * a.p2;
        if (lx == 0 && ly == 0) return out;  // concentric, distinct radii
        Curve radical = Curve::line(lx, ly, lc);
        auto pts = intersect(radical, a);
        for (auto& ip : pts) {
            // tangency must be judged between the two circles, not the line
            bool tang = tangential_at(c1, c2, ip.point);
            out.push_back({std::move(ip.point), tang});
        }
        return out;
    }

    if (a.kind == CurveKind::ParabolaX && b.kind == CurveKind::ParabolaY) {
        // y = g2(x) into x = g1(y): R(x) = a1 (g2(x) - v)^2 + u - x
        UniPoly g2({b.p1 * b.p2 * b.p2 + b.p3, -2 * b.p1 * b.p2, b.p1});
        PointLink link{true, g2};
        UniPoly r = compose_with_link(a, link);
        for (const auto& rb : isolate_roots(r)) {
            Scalar x = make_algebraic(r, rb);
            Scalar y = poly_image(x, g2);
            finish(PlanePoint(std::move(x), std::move(y), link));
        }
        return out;
    }

    if (a.kind == CurveKind::ParabolaX && b.kind == CurveKind::Circle) {
        // x = g1(y) into the circle: quartic in y
        UniPoly g1({a.p1 * a.p2 * a.p2 + a.p3, -2 * a.p1 * a.p2, a.p1});
        PointLink link{false, g1};
        UniPoly r = compose_with_link(b, link);
        for (const auto& rb : isolate_roots(r)) {
            Scalar y = make_algebraic(r, rb);
            Scalar x = poly_image(y, g1);
            finish(PlanePoint(std::move(x), std::move(y), link));
        }
        return out;
    }

    if (a.kind == CurveKind::ParabolaY && b.kind == CurveKind::Circle) {
        UniPoly g1({a.p1 * a.p2 * a.p2 + a.p3, -2 * a.p1 * a.p2, a.p1});  // y = g1(x)
        PointLink link{true, g1};
        UniPoly r = compose_with_link(b, link);
        for (const auto& rb : isolate_roots(r)) {
            Scalar x = make_algebraic(r, rb);
            Scalar y = poly_image(x, g1);
            finish(PlanePoint(std::move(x), std::move(y), link));
        }
        return out;
    }

    throw std::logic_error("intersect: unhandled curve pair");
}

}  // namespace parareeb
