#pragma once

// Real algebraic scalars of degree <= 4: exact representation, ordering,
// certified sign evaluation and the small arithmetic closure the sweep needs
// (affine maps, square roots, polynomial images).
//
// Scalar is a three-way variant:
//   Rational          - exact rational
//   QuadNum           - c0 + c1*sqrt(d), d > 0 square-free-ish (not a square)
//   AlgebraicNumber   - square-free defining polynomial + isolating interval
// Construction sites normalize downwards whenever the value is recognizably
// rational or quadratic, so degree-4 representations only appear where the
// geometry genuinely needs them.

#include <functional>
#include <optional>
#include <stdexcept>
#include <variant>

#include "parareeb/polynomial.hpp"

namespace parareeb {

struct DegreeCapExceeded : std::runtime_error {
    DegreeCapExceeded() : std::runtime_error("algebraic degree cap (4) exceeded") {}
};

/// c0 + c1 * sqrt(d); invariant: c1 != 0 and d > 0 is not a perfect square.
struct QuadNum {
    Rational c0, c1, d;

    int sign_value() const {
        if (c1 == 0) return sign(c0);
        if (c0 == 0) return sign(c1);
        int s0 = sign(c0), s1 = sign(c1);
        if (s0 == s1) return s0;
        Rational t = c0 * c0 - c1 * c1 * d;
        int st = sign(t);
        return st == 0 ? 0 : s0 * st;
    }

    std::pair<Rational, Rational> interval(unsigned bits) const {
        auto [slo, shi] = rat_sqrt_interval(d, bits);
        if (c1 >= 0) return {c0 + c1 * slo, c0 + c1 * shi};
        return {c0 + c1 * shi, c0 + c1 * slo};
    }

    double to_double() const {
        auto [lo, hi] = interval(60);
        return rat_to_double((lo + hi) / 2);
    }
};

struct AlgebraicNumber {
    UniPoly defining;  // square-free, exactly one root in (lo, hi)
    Rational lo, hi;   // endpoints are not roots

    void refine() {
        refine_bracket(defining, lo, hi);
        if (lo == hi) throw std::logic_error("algebraic bracket collapsed onto a rational root");
    }
    void refine_to(unsigned bits) {
        Rational eps(Integer(1), Integer(1) << bits);
        while (hi - lo > eps) refine();
    }
    double to_double() const {
        AlgebraicNumber t = *this;
        t.refine_to(60);
        return rat_to_double((t.lo + t.hi) / 2);
    }
};

using Scalar = std::variant<Rational, QuadNum, AlgebraicNumber>;

inline bool is_rational(const Scalar& s) { return std::holds_alternative<Rational>(s); }
inline const Rational& as_rational(const Scalar& s) { return std::get<Rational>(s); }

inline Scalar make_quad(const Rational& c0, const Rational& c1, const Rational& d) {
    if (c1 == 0 || d == 0) return Scalar(c0);
    if (d < 0) throw std::domain_error("QuadNum with negative radicand");
    if (auto root = rat_exact_sqrt(d)) return Scalar(c0 + c1 * *root);
    return Scalar(QuadNum{c0, c1, d});
}

inline std::pair<Rational, Rational> scalar_interval(const Scalar& s, unsigned bits) {
    if (std::holds_alternative<Rational>(s)) {
        const Rational& r = std::get<Rational>(s);
        return {r, r};
    }
    if (std::holds_alternative<QuadNum>(s)) return std::get<QuadNum>(s).interval(bits);
    AlgebraicNumber a = std::get<AlgebraicNumber>(s);
    a.refine_to(bits);
    return {a.lo, a.hi};
}

inline double scalar_to_double(const Scalar& s) {
    auto [lo, hi] = scalar_interval(s, 60);
    return rat_to_double((lo + hi) / 2);
}

/// Certified sign of f at an algebraic point (exact zero via gcd).
inline int sign_at(const UniPoly& f, const AlgebraicNumber& a) {
    if (f.is_zero()) return 0;
    UniPoly g = poly_gcd(f, a.defining);
    if (g.degree() >= 1 && sign(g.eval(a.lo)) * sign(g.eval(a.hi)) < 0) return 0;
    AlgebraicNumber t = a;
    for (;;) {
        auto [vlo, vhi] = f.eval_interval(t.lo, t.hi);
        if (sign(vlo) > 0) return 1;
        if (sign(vhi) < 0) return -1;
        t.refine();
    }
}

inline int sign_at(const UniPoly& f, const Scalar& s) {
    if (std::holds_alternative<Rational>(s)) return sign(f.eval(std::get<Rational>(s)));
    if (std::holds_alternative<QuadNum>(s)) {
        // f(c0 + c1 sqrt(d)) = A + B sqrt(d) with A, B rational.
        const QuadNum& q = std::get<QuadNum>(s);
        Rational A(0), B(0);
        // Horner maintaining (A, B)
        for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) {
            Rational nA = A * q.c0 + B * q.c1 * q.d + *it;
            Rational nB = A * q.c1 + B * q.c0;
            A = nA;
            B = nB;
        }
        return QuadNum{A, B, q.d}.sign_value();
    }
    return sign_at(f, std::get<AlgebraicNumber>(s));
}

inline int scalar_sign(const Scalar& s) {
    if (std::holds_alternative<Rational>(s)) return sign(std::get<Rational>(s));
    if (std::holds_alternative<QuadNum>(s)) return std::get<QuadNum>(s).sign_value();
    const AlgebraicNumber& a = std::get<AlgebraicNumber>(s);
    int sl = sign(a.defining.eval(a.lo));
    // root simple: sign on (lo, root) equals sign at lo
    if (a.lo >= 0) return 1;
    if (a.hi <= 0) return -1;
    int s0 = sign(a.defining.eval(Rational(0)));
    if (s0 == 0) return 0;
    return s0 == sl ? 1 : -1;
}

namespace detail {

inline UniPoly quad_defining(const QuadNum& q) {
    // (t - c0)^2 - c1^2 d
    return UniPoly({q.c0 * q.c0 - q.c1 * q.c1 * q.d, -2 * q.c0, Rational(1)});
}

/// Equality decision for QuadNums in possibly different fields.
inline bool quad_equal(const QuadNum& a, const QuadNum& b) {
    if (a.d == b.d) return a.c0 == b.c0 && a.c1 == b.c1;
    // c0 + c1 sqrt(d) == e0 + e1 sqrt(e), both irrational parts nonzero.
    // Equal iff c0 == e0 and c1^2 d == e1^2 e with matching signs
    // (otherwise sqrt(d) would be rational).
    return a.c0 == b.c0 && sign(a.c1) == sign(b.c1) && a.c1 * a.c1 * a.d == b.c1 * b.c1 * b.d;
}

inline bool alg_contains_root_of(const AlgebraicNumber& a, const UniPoly& f) {
    UniPoly g = poly_gcd(f, a.defining);
    return g.degree() >= 1 && sign(g.eval(a.lo)) * sign(g.eval(a.hi)) < 0;
}

}  // namespace detail

enum class Ordering { Less, Equal, Greater };

inline Ordering ordering_from_int(int s) {
    return s < 0 ? Ordering::Less : (s == 0 ? Ordering::Equal : Ordering::Greater);
}

/// Total order on Scalars, exact. Equality is certified algebraically,
/// never by tolerance.
inline Ordering compare(const Scalar& x, const Scalar& y) {
    using std::get;
    using std::holds_alternative;
    if (holds_alternative<Rational>(x) && holds_alternative<Rational>(y))
        return ordering_from_int(sign(get<Rational>(x) - get<Rational>(y)));
    if (holds_alternative<Rational>(x) && holds_alternative<QuadNum>(y)) {
        const QuadNum& q = get<QuadNum>(y);
        return ordering_from_int(-QuadNum{q.c0 - get<Rational>(x), q.c1, q.d}.sign_value());
    }
    if (holds_alternative<QuadNum>(x) && holds_alternative<Rational>(y)) {
        const QuadNum& q = get<QuadNum>(x);
        return ordering_from_int(QuadNum{q.c0 - get<Rational>(y), q.c1, q.d}.sign_value());
    }
    if (holds_alternative<QuadNum>(x) && holds_alternative<QuadNum>(y)) {
        const QuadNum& a = get<QuadNum>(x);
        const QuadNum& b = get<QuadNum>(y);
        if (a.d == b.d) return ordering_from_int(QuadNum{a.c0 - b.c0, a.c1 - b.c1, a.d}.sign_value());
        if (detail::quad_equal(a, b)) return Ordering::Equal;
        for (unsigned bits = 16;; bits *= 2) {
            auto ia = a.interval(bits);
            auto ib = b.interval(bits);
            if (ia.second < ib.first) return Ordering::Less;
            if (ib.second < ia.first) return Ordering::Greater;
        }
    }
    if (holds_alternative<AlgebraicNumber>(x) && !holds_alternative<AlgebraicNumber>(y)) {
        const AlgebraicNumber& a = get<AlgebraicNumber>(x);
        if (holds_alternative<Rational>(y)) {
            const Rational& r = get<Rational>(y);
            if (r <= a.lo) return Ordering::Greater;
            if (r >= a.hi) return Ordering::Less;
            int s = sign(a.defining.eval(r));
            if (s == 0) return Ordering::Equal;
            // single sign change across the root
            return s == sign(a.defining.eval(a.lo)) ? Ordering::Greater : Ordering::Less;
        }
        const QuadNum& q = get<QuadNum>(y);
        AlgebraicNumber t = a;
        if (detail::alg_contains_root_of(t, detail::quad_defining(q))) {
            // a is one of the quadratic's two roots; they are separated by
            // 2|c1|sqrt(d) > 0 so refinement below the gap decides which.
            Rational gap_lo(0);
            for (unsigned gb = 16; gap_lo == 0; gb *= 2)
                gap_lo = rat_abs(q.c1) * rat_sqrt_interval(q.d, gb).first;
            for (unsigned bits = 16;; bits *= 2) {
                t.refine_to(bits);
                auto iq = q.interval(bits);
                if (t.hi - t.lo < gap_lo / 2 && iq.second - iq.first < gap_lo / 2) {
                    bool overlap = !(t.hi < iq.first || iq.second < t.lo);
                    if (overlap) return Ordering::Equal;
                    break;
                }
            }
        }
        for (unsigned bits = 16;; bits *= 2) {
            t.refine_to(bits);
            auto iq = q.interval(bits);
            if (t.hi < iq.first) return Ordering::Less;
            if (iq.second < t.lo) return Ordering::Greater;
        }
    }
    if (!holds_alternative<AlgebraicNumber>(x) && holds_alternative<AlgebraicNumber>(y)) {
        Ordering o = compare(y, x);
        return o == Ordering::Less ? Ordering::Greater : (o == Ordering::Greater ? Ordering::Less : Ordering::Equal);
    }
    // AlgebraicNumber vs AlgebraicNumber
    AlgebraicNumber a = get<AlgebraicNumber>(x);
    AlgebraicNumber b = get<AlgebraicNumber>(y);
    {
        UniPoly g = poly_gcd(a.defining, b.defining);
        if (g.degree() >= 1) {
            Rational ilo = rat_max(a.lo, b.lo), ihi = rat_min(a.hi, b.hi);
            if (ilo < ihi && sign(g.eval(ilo)) * sign(g.eval(ihi)) < 0) {
                // The gcd root inside the overlap is a's unique root and b's
                // unique root simultaneously.
                bool a_has = sign(g.eval(a.lo)) * sign(g.eval(a.hi)) < 0;
                bool b_has = sign(g.eval(b.lo)) * sign(g.eval(b.hi)) < 0;
                if (a_has && b_has) return Ordering::Equal;
            }
        }
    }
    for (;;) {
        if (a.hi <= b.lo) return Ordering::Less;
        if (b.hi <= a.lo) return Ordering::Greater;
        a.refine();
        b.refine();
    }
}

/// Spec-facing name.
inline Ordering alg_compare(const Scalar& a, const Scalar& b) { return compare(a, b); }

inline bool scalar_eq(const Scalar& a, const Scalar& b) { return compare(a, b) == Ordering::Equal; }
inline bool scalar_lt(const Scalar& a, const Scalar& b) { return compare(a, b) == Ordering::Less; }
inline bool scalar_le(const Scalar& a, const Scalar& b) {
    Ordering o = compare(a, b);
    return o != Ordering::Greater;
}

/// Construct the unique root of `p` lying in the bracket, normalizing the
/// representation (rational / quadratic / general).
inline Scalar make_algebraic(const UniPoly& p, const RootBracket& rb) {
    if (rb.exact()) return Scalar(rb.lo);
    UniPoly sf = square_free_part(p);
    auto chain = sturm_chain(sf);
    if (sturm_count(chain, rb.lo, rb.hi) != 1)
        throw std::invalid_argument("bracket does not isolate a single root");
    if (sf.degree() == 1) return Scalar(Rational(-sf.c[0] / sf.c[1]));
    if (sf.degree() == 2) {
        const Rational &a = sf.c[2], &b = sf.c[1], &c = sf.c[0];
        Rational disc = b * b - 4 * a * c;
        Scalar r1 = make_quad(-b / (2 * a), Rational(1) / (2 * a), disc);
        Scalar r2 = make_quad(-b / (2 * a), Rational(-1) / (2 * a), disc);
        for (const Scalar& r : {r1, r2}) {
            auto iv = scalar_interval(r, 24);
            if (iv.first >= rb.hi || iv.second <= rb.lo) continue;
            if (sign_at(sf, r) == 0) {
                // confirm inside the bracket exactly
                if (scalar_lt(Scalar(rb.lo), r) && scalar_lt(r, Scalar(rb.hi))) return r;
            }
        }
        throw std::logic_error("quadratic root pairing failed");
    }
    // degree 3/4: snap obvious rationals, otherwise keep the bracket
    Rational lo = rb.lo, hi = rb.hi;
    for (int i = 0; i < 8; ++i) {
        refine_bracket(sf, lo, hi);
        if (lo == hi) return Scalar(lo);
    }
    Rational cand = simplest_in_interval(lo, hi);
    if (sf.eval(cand) == 0) return Scalar(cand);
    return Scalar(AlgebraicNumber{sf, lo, hi});
}

/// All real roots of p as normalized Scalars, ascending.
inline std::vector<Scalar> real_roots(const UniPoly& p) {
    std::vector<Scalar> out;
    for (const auto& rb : isolate_roots(p)) out.push_back(make_algebraic(p, rb));
    return out;
}

/// p*s + q, exact.
inline Scalar scalar_affine(const Scalar& s, const Rational& mul, const Rational& add) {
    if (mul == 0) return Scalar(add);
    if (std::holds_alternative<Rational>(s)) return Scalar(mul * std::get<Rational>(s) + add);
    if (std::holds_alternative<QuadNum>(s)) {
        const QuadNum& q = std::get<QuadNum>(s);
        return make_quad(mul * q.c0 + add, mul * q.c1, q.d);
    }
    const AlgebraicNumber& a = std::get<AlgebraicNumber>(s);
    // root t of f  ->  root u = mul*t + add of f((u - add)/mul)
    UniPoly g = poly_compose_affine(a.defining, -add / mul, Rational(1) / mul);
    Rational l = mul * a.lo + add, h = mul * a.hi + add;
    if (mul < 0) std::swap(l, h);
    return Scalar(AlgebraicNumber{square_free_part(g), l, h});
}

inline Scalar scalar_neg(const Scalar& s) { return scalar_affine(s, Rational(-1), Rational(0)); }

namespace detail {

/// Res_t(p(t), z - g(t)) as a polynomial in z, by interpolation.
inline UniPoly image_resultant(const UniPoly& p, const UniPoly& g) {
    int n = p.degree();
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= n; ++i) {
        Rational z(i);
        UniPoly h = UniPoly::constant(z) - g;
        ys.push_back(resultant(p, h));
        xs.push_back(z);
    }
    // Lagrange interpolation (n+1 points, degree <= n)
    UniPoly acc;
    for (int i = 0; i <= n; ++i) {
        UniPoly term = UniPoly::constant(Rational(1));
        Rational denom(1);
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            term = term * UniPoly::linear(-xs[static_cast<size_t>(j)], Rational(1));
            denom *= xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(j)];
        }
        acc = acc + term * (ys[static_cast<size_t>(i)] / denom);
    }
    return acc;
}

/// Pick the root of sf (square-free) pinned down by a shrinking enclosure.
inline Scalar pair_root(const UniPoly& sf,
                        const std::function<std::pair<Rational, Rational>(unsigned)>& enclosure) {
    auto cands = isolate_roots(sf);
    for (unsigned bits = 24;; bits *= 2) {
        auto [elo, ehi] = enclosure(bits);
        std::vector<RootBracket> alive;
        for (auto rb : cands) {
            Rational lo = rb.lo, hi = rb.hi;
            if (!rb.exact()) {
                for (int i = 0; i < 4; ++i) refine_bracket(sf, lo, hi);
            }
            if (hi < elo || lo > ehi) continue;
            alive.push_back({lo, hi, rb.multiplicity});
        }
        if (alive.size() == 1) return make_algebraic(sf, alive.front());
        if (alive.empty()) throw std::logic_error("enclosure lost its root");
        cands = alive;
        if (bits > 1u << 16) throw std::logic_error("root pairing failed to separate");
    }
}

}  // namespace detail

/// Exact image g(s) of an algebraic scalar under a rational polynomial map.
inline Scalar poly_image(const Scalar& s, const UniPoly& g) {
    if (g.is_zero()) return Scalar(Rational(0));
    if (std::holds_alternative<Rational>(s)) return Scalar(g.eval(std::get<Rational>(s)));
    if (std::holds_alternative<QuadNum>(s)) {
        const QuadNum& q = std::get<QuadNum>(s);
        Rational A(0), B(0);
        for (auto it = g.c.rbegin(); it != g.c.rend(); ++it) {
            Rational nA = A * q.c0 + B * q.c1 * q.d + *it;
            Rational nB = A * q.c1 + B * q.c0;
            A = nA;
            B = nB;
        }
        return make_quad(A, B, q.d);
    }
    const AlgebraicNumber& a = std::get<AlgebraicNumber>(s);
    UniPoly res = detail::image_resultant(a.defining, g);
    if (res.is_zero()) throw std::logic_error("degenerate image resultant");
    UniPoly sf = square_free_part(res);
    AlgebraicNumber base = a;
    return detail::pair_root(sf, [&](unsigned bits) {
        base.refine_to(bits);
        return g.eval_interval(base.lo, base.hi);
    });
}

/// sqrt of a nonnegative scalar; result degree <= 4 or DegreeCapExceeded.
inline Scalar scalar_sqrt(const Scalar& s) {
    int sg = scalar_sign(s);
    if (sg < 0) throw std::domain_error("scalar_sqrt of negative value");
    if (sg == 0) return Scalar(Rational(0));
    if (std::holds_alternative<Rational>(s)) {
        const Rational& r = std::get<Rational>(s);
        if (auto e = rat_exact_sqrt(r)) return Scalar(*e);
        return Scalar(QuadNum{Rational(0), Rational(1), r});
    }
    if (std::holds_alternative<QuadNum>(s)) {
        const QuadNum& q = std::get<QuadNum>(s);
        // try sqrt inside Q(sqrt(d)): (p + r sqrt(d))^2 = c0 + c1 sqrt(d)
        Rational inner = q.c0 * q.c0 - q.c1 * q.c1 * q.d;
        if (auto e = rat_exact_sqrt(inner)) {
            Rational cand1 = (q.c0 + *e) / 2, cand2 = (q.c0 - *e) / 2;
            for (const Rational& p2 : {cand1, cand2}) {
                if (p2 < 0) continue;
                if (auto p = rat_exact_sqrt(p2)) {
                    if (*p == 0) continue;
                    Rational r = q.c1 / (2 * *p);
                    QuadNum cand{*p, r, q.d};
                    if (cand.sign_value() > 0) {
                        // verify (p + r sqrt d)^2 == q
                        if (*p * *p + r * r * q.d == q.c0 && 2 * *p * r == q.c1)
                            return make_quad(*p, r, q.d);
                    }
                }
            }
        }
        // degree-4 representation: (t^2 - c0)^2 - c1^2 d
        UniPoly def({q.c0 * q.c0 - q.c1 * q.c1 * q.d, Rational(0), -2 * q.c0, Rational(0), Rational(1)});
        UniPoly sf = square_free_part(def);
        QuadNum base = q;
        return detail::pair_root(sf, [&](unsigned bits) {
            auto [lo, hi] = base.interval(bits);
            if (lo < 0) lo = Rational(0);
            auto sl = rat_sqrt_interval(lo, bits);
            auto sh = rat_sqrt_interval(hi, bits);
            return std::make_pair(sl.first, sh.second);
        });
    }
    throw DegreeCapExceeded();
}

/// A rational strictly between a and b (requires a < b). Deterministic.
inline Rational separating_rational(const Scalar& a, const Scalar& b) {
    for (unsigned bits = 8;; bits *= 2) {
        auto ia = scalar_interval(a, bits);
        auto ib = scalar_interval(b, bits);
        if (ia.second < ib.first) {
            Rational cand = simplest_in_interval(ia.second, ib.first);
            if (scalar_lt(a, Scalar(cand)) && scalar_lt(Scalar(cand), b)) return cand;
            cand = (ia.second + ib.first) / 2;
            if (scalar_lt(a, Scalar(cand)) && scalar_lt(Scalar(cand), b)) return cand;
        }
        if (bits > 1u << 16) throw std::logic_error("separating_rational: values not separated");
    }
}

}  // namespace parareeb
