#pragma once

// RA-regions: a finite list of signed curves cutting out an open region
// D = intersection of { g > 0 }, plus point classification, validation of
// the transversality/incidence conditions, and singular point enumeration.

#include <string>
#include <vector>

#include "parareeb/curve.hpp"

namespace parareeb {

struct InvalidRegion : std::runtime_error {
    explicit InvalidRegion(const std::string& msg) : std::runtime_error(msg) {}
};

/// One signed curve. The region lies where g = (f_positive ? f : -f) > 0.
struct HalfRegion {
    Curve curve;
    bool f_positive = true;

    int region_sign() const { return f_positive ? 1 : -1; }
};

struct Arrangement {
    std::vector<HalfRegion> halves;
    std::vector<HalfRegion> clip;  // optional window bounds (line-based)
    std::string label;

    std::vector<HalfRegion> all() const {
        std::vector<HalfRegion> v = halves;
        v.insert(v.end(), clip.begin(), clip.end());
        return v;
    }
};

inline Rational g_eval(const HalfRegion& h, const Rational& x, const Rational& y) {
    Rational f = implicit_eval(h.curve, x, y);
    return h.f_positive ? f : Rational(-f);
}

inline int g_sign_at_point(const HalfRegion& h, const PlanePoint& p) {
    return h.region_sign() * sign_at_point(h.curve, p);
}

enum class PointClass { Interior, Boundary, Exterior };

struct Classification {
    PointClass cls;
    std::vector<int> on;  // indices of curves through the point (Boundary only)
};

namespace detail {

struct Vec2 {
    Rational x, y;
};

inline Vec2 grad_g(const HalfRegion& h, const Rational& px, const Rational& py) {
    Rational s(h.region_sign());
    const Curve& c = h.curve;
    switch (c.kind) {
        case CurveKind::Line: return {s * c.p1, s * c.p2};
        case CurveKind::ParabolaX: return {-s, s * 2 * c.p1 * (py - c.p2)};
        case CurveKind::ParabolaY: return {s * 2 * c.p1 * (px - c.p2), -s};
        case CurveKind::Circle: return {-s * 2 * (px - c.p1), -s * 2 * (py - c.p2)};
    }
    throw std::logic_error("unreachable");
}

/// g(p + t*d1 + t^2*d2) as an exact polynomial in t (degree <= 4).
inline UniPoly g_along(const HalfRegion& h, const Rational& px, const Rational& py, const Vec2& d1,
                       const Vec2& d2) {
    // coordinates as polynomials in t
    UniPoly xt({px, d1.x, d2.x});
    UniPoly yt({py, d1.y, d2.y});
    const Curve& c = h.curve;
    UniPoly f;
    switch (c.kind) {
        case CurveKind::Line:
            f = xt * c.p1 + yt * c.p2 + UniPoly::constant(c.p3);
            break;
        case CurveKind::ParabolaX: {
            UniPoly dy = yt - UniPoly::constant(c.p2);
            f = dy * dy * c.p1 + UniPoly::constant(c.p3) - xt;
            break;
        }
        case CurveKind::ParabolaY: {
            UniPoly dx = xt - UniPoly::constant(c.p2);
            f = dx * dx * c.p1 + UniPoly::constant(c.p3) - yt;
            break;
        }
        case CurveKind::Circle: {
            UniPoly dx = xt - UniPoly::constant(c.p1);
            UniPoly dy = yt - UniPoly::constant(c.p2);
            f = UniPoly::constant(c.p3) - dx * dx - dy * dy;
            break;
        }
    }
    return h.f_positive ? f : -f;
}

inline int lowest_nonzero_sign(const UniPoly& p) {
    for (const Rational& c : p.c)
        if (c != 0) return sign(c);
    return 0;
}

/// Does some probe curve starting at p enter the open region to first
/// sufficiently small t > 0? Sound: a passing candidate certifies p in the
/// closure of D.
inline bool probe_certifies(const std::vector<HalfRegion>& halves, const Rational& px,
                            const Rational& py, const Vec2& d1, const Vec2& d2) {
    for (const auto& h : halves) {
        UniPoly q = g_along(h, px, py, d1, d2);
        if (lowest_nonzero_sign(q) <= 0) return false;
    }
    return true;
}

inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

}  // namespace detail

/// Exact classification of a rational point. Boundary means: on at least one
/// curve, no curve strictly negative, and certified to be a limit of interior
/// points by a local probe.
inline Classification classify(const Arrangement& arr, const Rational& px, const Rational& py) {
    using namespace detail;
    auto halves = arr.all();
    std::vector<int> zero;
    for (size_t i = 0; i < halves.size(); ++i) {
        int s = sign(g_eval(halves[i], px, py));
        if (s < 0) return {PointClass::Exterior, {}};
        if (s == 0) zero.push_back(static_cast<int>(i));
    }
    if (zero.empty()) return {PointClass::Interior, {}};

    // candidate probe directions
    std::vector<std::pair<Vec2, Vec2>> cands;
    std::vector<Vec2> grads;
    for (int i : zero) grads.push_back(grad_g(halves[static_cast<size_t>(i)], px, py));
    for (const auto& gv : grads) {
        cands.push_back({gv, Vec2{Rational(0), Rational(0)}});
        Vec2 t{-gv.y, gv.x};
        cands.push_back({t, Vec2{Rational(0), Rational(0)}});
        cands.push_back({Vec2{-t.x, -t.y}, Vec2{Rational(0), Rational(0)}});
    }
    for (size_t i = 0; i < grads.size(); ++i) {
        for (size_t j = i + 1; j < grads.size(); ++j) {
            const Vec2 &gi = grads[i], &gj = grads[j];
            if (cross(gi, gj) != 0) {
                Rational c = dot(gi, gj);
                Rational lam(1);
                if (c < 0) {
                    Rational lo = (-c) / dot(gj, gj);
                    Rational hi = dot(gi, gi) / (-c);
                    lam = (lo + hi) / 2;
                }
                cands.push_back({Vec2{gi.x + lam * gj.x, gi.y + lam * gj.y},
                                 Vec2{Rational(0), Rational(0)}});
            }
        }
    }
    // second-order candidates: along a tangent with a solved normal bend
    // d2 = c * gv; the t^2 coefficient of each zero constraint is affine in c
    for (const auto& gv : grads) {
        Vec2 t{-gv.y, gv.x};
        for (const Vec2& tt : {t, Vec2{-t.x, -t.y}}) {
            Rational lo_inf(-1024), hi_sup(1024);
            bool feasible = true;
            for (int zi : zero) {
                const auto& h = halves[static_cast<size_t>(zi)];
                UniPoly q0 = detail::g_along(h, px, py, tt, Vec2{Rational(0), Rational(0)});
                UniPoly q1 = detail::g_along(h, px, py, tt, gv);
                if (q0.c.size() > 1 && q0.c[1] != 0) continue;  // first order decides
                Rational base = q0.c.size() > 2 ? q0.c[2] : Rational(0);
                Rational at1 = q1.c.size() > 2 ? q1.c[2] : Rational(0);
                Rational slope = at1 - base;
                if (slope == 0) {
                    if (base <= 0) feasible = false;
                    continue;
                }
                if (slope > 0)
                    lo_inf = rat_max(lo_inf, (-base) / slope);
                else
                    hi_sup = rat_min(hi_sup, (-base) / slope);
            }
            if (!feasible || lo_inf >= hi_sup) continue;
            Rational c = (lo_inf + hi_sup) / 2;
            cands.push_back({tt, Vec2{c * gv.x, c * gv.y}});
        }
    }

    for (const auto& [d1, d2] : cands) {
        if (d1.x == 0 && d1.y == 0) continue;
        if (detail::probe_certifies(halves, px, py, d1, d2)) return {PointClass::Boundary, zero};
    }
    return {PointClass::Exterior, {}};
}

/// True when all curves outside `vanishing` are strictly positive at p.
/// For transversal corners and free tangency points this is exactly
/// membership in the closure of D.
inline bool others_strictly_positive(const std::vector<HalfRegion>& halves, const PlanePoint& p,
                                     const std::vector<int>& vanishing) {
    for (size_t i = 0; i < halves.size(); ++i) {
        bool skip = false;
        for (int v : vanishing)
            if (v == static_cast<int>(i)) skip = true;
        if (skip) continue;
        if (g_sign_at_point(halves[i], p) <= 0) return false;
    }
    return true;
}

struct Violation {
    std::string what;
    PlanePoint where;
};

struct SingularPoint {
    PlanePoint point;
    enum class Kind { Tangency, Corner } kind;
    std::vector<int> curves;  // indices into Arrangement::all()
};

/// Indices of all curves vanishing at p.
inline std::vector<int> curves_through(const std::vector<HalfRegion>& halves, const PlanePoint& p) {
    std::vector<int> out;
    for (size_t i = 0; i < halves.size(); ++i)
        if (sign_at_point(halves[i].curve, p) == 0) out.push_back(static_cast<int>(i));
    return out;
}

/// Check the RA-region conditions over the closure of D. Empty result means
/// Valid. Violations carry witness points.
inline std::vector<Violation> validate(const Arrangement& arr) {
    auto halves = arr.all();
    std::vector<Violation> out;
    size_t n = halves.size();

    struct Meet {
        PlanePoint p;
        bool tangential;
        size_t i, j;
    };
    std::vector<Meet> meets;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            std::vector<Intersection> ips;
            try {
                ips = intersect(halves[i].curve, halves[j].curve);
            } catch (const OverlappingCurves&) {
                out.push_back({"curves " + std::to_string(i) + "," + std::to_string(j) +
                                   " share a component",
                               PlanePoint()});
                continue;
            }
            for (auto& ip : ips) meets.push_back({std::move(ip.point), ip.tangential, i, j});
        }
    }

    for (const auto& m : meets) {
        std::vector<int> through = curves_through(halves, m.p);
        if (!others_strictly_positive(halves, m.p, through)) continue;  // not in closure
        if (through.size() >= 3) {
            out.push_back({"point on " + std::to_string(through.size()) + " curves in the closure",
                           m.p});
            continue;
        }
        if (m.tangential) {
            out.push_back({"tangential contact of curves " + std::to_string(m.i) + "," +
                               std::to_string(m.j) + " in the closure",
                           m.p});
        }
    }

    // each curve must meet the closure of D
    for (size_t i = 0; i < n; ++i) {
        bool touches = false;
        for (const auto& [x, pt] : x_extremes(halves[i].curve)) {
            auto through = curves_through(halves, pt);
            if (others_strictly_positive(halves, pt, through)) {
                touches = true;
                break;
            }
        }
        if (!touches) {
            for (const auto& m : meets) {
                if (m.i != i && m.j != i) continue;
                auto through = curves_through(halves, m.p);
                if (others_strictly_positive(halves, m.p, through)) {
                    touches = true;
                    break;
                }
            }
        }
        if (!touches)
            out.push_back({"curve " + std::to_string(i) + " does not meet the region closure",
                           PlanePoint()});
    }
    return out;
}

/// Singular points of a valid arrangement, sorted by x.
inline std::vector<SingularPoint> singular_points(const Arrangement& arr) {
    {
        auto v = validate(arr);
        if (!v.empty()) throw InvalidRegion("singular_points: " + v.front().what);
    }
    auto halves = arr.all();
    size_t n = halves.size();
    std::vector<SingularPoint> out;

    for (size_t i = 0; i < n; ++i) {
        for (const auto& [x, pt] : x_extremes(halves[i].curve)) {
            auto through = curves_through(halves, pt);
            if (through.size() != 1) continue;  // on another curve: it is a corner
            if (!others_strictly_positive(halves, pt, through)) continue;
            out.push_back({pt, SingularPoint::Kind::Tangency, {static_cast<int>(i)}});
        }
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            for (auto& ip : intersect(halves[i].curve, halves[j].curve)) {
                std::vector<int> through = {static_cast<int>(i), static_cast<int>(j)};
                if (!others_strictly_positive(halves, ip.point, through)) continue;
                out.push_back({std::move(ip.point), SingularPoint::Kind::Corner,
                               {static_cast<int>(i), static_cast<int>(j)}});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const SingularPoint& a, const SingularPoint& b) {
        Ordering o = compare(a.point.x, b.point.x);
        if (o != Ordering::Equal) return o == Ordering::Less;
        return compare(a.point.y, b.point.y) == Ordering::Less;
    });
    return out;
}

}  // namespace parareeb
