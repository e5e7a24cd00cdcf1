#pragma once

// Univariate polynomials over Q: arithmetic, gcd, square-free split,
// Sturm sequences and real root isolation. Kernel use stays at degree <= 4
// (conic resultants); the routines themselves are degree-agnostic.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "parareeb/rational.hpp"

namespace parareeb {

struct ZeroPolynomial : std::runtime_error {
    ZeroPolynomial() : std::runtime_error("operation undefined for the zero polynomial") {}
};

/// Coefficients ascending: c[0] + c[1] t + ... Leading coefficient non-zero
/// unless the polynomial is zero (empty vector).
struct UniPoly {
    std::vector<Rational> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { normalize(); }

    static UniPoly constant(const Rational& a) { return UniPoly({a}); }
    /// q0 + q1 t
    static UniPoly linear(const Rational& q0, const Rational& q1) { return UniPoly({q0, q1}); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rational& lead() const {
        if (c.empty()) throw ZeroPolynomial();
        return c.back();
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Interval Horner: encloses p([lo,hi]).
    std::pair<Rational, Rational> eval_interval(const Rational& lo, const Rational& hi) const {
        Rational alo(0), ahi(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            // [alo,ahi] * [lo,hi]
            Rational p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
            Rational nlo = rat_min(rat_min(p1, p2), rat_min(p3, p4));
            Rational nhi = rat_max(rat_max(p1, p2), rat_max(p3, p4));
            alo = nlo + *it;
            ahi = nhi + *it;
        }
        return {alo, ahi};
    }

    UniPoly derivative() const {
        if (c.size() <= 1) return UniPoly();
        std::vector<Rational> d(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * Rational(static_cast<long>(i));
        return UniPoly(std::move(d));
    }
};

inline UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return UniPoly(std::move(r));
}

inline UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return UniPoly(std::move(r));
}

inline UniPoly operator-(const UniPoly& a) {
    std::vector<Rational> r = a.c;
    for (auto& x : r) x = -x;
    return UniPoly(std::move(r));
}

inline UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> r(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return UniPoly(std::move(r));
}

inline UniPoly operator*(const UniPoly& a, const Rational& s) {
    std::vector<Rational> r = a.c;
    for (auto& x : r) x *= s;
    return UniPoly(std::move(r));
}

inline bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }

/// Quotient and remainder, deg(rem) < deg(b).
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial();
    UniPoly rem = a;
    std::vector<Rational> q(a.c.size() > b.c.size() - 1 ? a.c.size() - b.c.size() + 1 : 0,
                            Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational f = rem.lead() / b.lead();
        q[static_cast<size_t>(shift)] = f;
        for (size_t i = 0; i < b.c.size(); ++i)
            rem.c[i + static_cast<size_t>(shift)] -= f * b.c[i];
        rem.normalize();
    }
    return {UniPoly(std::move(q)), rem};
}

/// Monic gcd.
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rational lead = a.lead();
    for (auto& x : a.c) x /= lead;
    return a;
}

/// p / gcd(p, p'); same distinct roots, all simple.
inline UniPoly square_free_part(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (p.degree() <= 1) return p;
    UniPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return divmod(p, g).first;
}

/// Compose p(q0 + q1 t): exact affine substitution.
inline UniPoly poly_compose_affine(const UniPoly& p, const Rational& q0, const Rational& q1) {
    UniPoly acc;  // Horner in the affine argument
    UniPoly arg = UniPoly::linear(q0, q1);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        acc = acc * arg;
        acc = acc + UniPoly::constant(*it);
    }
    return acc;
}

/// General composition p(g(t)).
inline UniPoly poly_compose(const UniPoly& p, const UniPoly& g) {
    UniPoly acc;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        acc = acc * g;
        acc = acc + UniPoly::constant(*it);
    }
    return acc;
}

/// Sturm chain of a square-free polynomial.
inline std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-r);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

inline int sign_variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
    int v = 0, prev = 0;
    for (const auto& q : chain) {
        int s = q.is_zero() ? 0 : sign(q.eval(x));
        if (s != 0) {
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
    }
    return v;
}

/// Number of roots of the (square-free) chain polynomial in (a, b].
inline int sturm_count(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b) {
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

/// Cauchy bound: all real roots lie in (-M, M).
inline Rational cauchy_root_bound(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i)
        m = rat_max(m, rat_abs(p.c[static_cast<size_t>(i)] / p.lead()));
    return m + 1;
}

/// One isolated real root of a square-free polynomial. lo == hi marks an
/// exact rational root; otherwise the open interval (lo, hi) contains
/// exactly one root and neither endpoint is a root.
struct RootBracket {
    Rational lo, hi;
    int multiplicity = 1;
    bool exact() const { return lo == hi; }
};

namespace detail {
inline void isolate_rec(const std::vector<UniPoly>& chain, const UniPoly& p, const Rational& a,
                        const Rational& b, std::vector<RootBracket>& out) {
    int n = sturm_count(chain, a, b);
    if (n == 0) return;
    if (n == 1) {
        // Shrink until the right endpoint is not a root (Sturm counts (a,b]).
        Rational lo = a, hi = b;
        if (p.eval(hi) == 0) {
            out.push_back({hi, hi, 1});
            return;
        }
        out.push_back({lo, hi, 1});
        return;
    }
    Rational mid = (a + b) / 2;
    if (p.eval(mid) == 0) {
        // Exact root at the midpoint; count it and recurse on both sides of a
        // slightly shrunk split so the remaining intervals exclude it.
        out.push_back({mid, mid, 1});
        // Find a gap around mid containing no other root and whose endpoints
        // are not roots themselves.
        Rational eps = (b - a) / 4;
        while (sturm_count(chain, mid - eps, mid + eps) > 1 || p.eval(mid - eps) == 0 ||
               p.eval(mid + eps) == 0)
            eps /= 2;
        isolate_rec(chain, p, a, mid - eps, out);
        isolate_rec(chain, p, mid + eps, b, out);
        return;
    }
    isolate_rec(chain, p, a, mid, out);
    isolate_rec(chain, p, mid, b, out);
}
}  // namespace detail

/// Isolating intervals for all distinct real roots of p (any multiplicity),
/// sorted increasing, pairwise disjoint. Multiplicities are reported from the
/// square-free ladder.
inline std::vector<RootBracket> isolate_roots(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (p.degree() == 0) return {};
    UniPoly sf = square_free_part(p);
    auto chain = sturm_chain(sf);
    Rational bound = cauchy_root_bound(sf);
    std::vector<RootBracket> out;
    detail::isolate_rec(chain, sf, -bound, bound, out);
    std::sort(out.begin(), out.end(),
              [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
    // Multiplicities: root of p with multiplicity m is a root of
    // gcd(p, p') with multiplicity m-1; walk the ladder.
    if (sf.degree() != p.degree()) {
        UniPoly g = p;
        for (auto& rb : out) {
            int mult = 0;
            UniPoly q = p;
            while (true) {
                // q vanishes on the root iff sign change / exact hit
                bool vanish;
                if (rb.exact()) {
                    vanish = q.eval(rb.lo) == 0;
                } else {
                    UniPoly common = poly_gcd(q, sf);
                    vanish = !common.is_zero() && common.degree() > 0 &&
                             sign(common.eval(rb.lo)) * sign(common.eval(rb.hi)) < 0;
                }
                if (!vanish) break;
                ++mult;
                UniPoly d = poly_gcd(q, q.derivative());
                if (d.degree() == 0) break;
                q = d;
            }
            rb.multiplicity = std::max(1, mult);
        }
        (void)g;
    }
    return out;
}

/// Halve a bracket around its single simple root (square-free p, sign change).
inline void refine_bracket(const UniPoly& p, Rational& lo, Rational& hi) {
    if (lo == hi) return;
    Rational mid = (lo + hi) / 2;
    int sm = sign(p.eval(mid));
    if (sm == 0) {
        lo = hi = mid;
        return;
    }
    if (sm == sign(p.eval(lo)))
        lo = mid;
    else
        hi = mid;
}

/// Resultant of two rational polynomials (Sylvester determinant via
/// fraction-free elimination on a rational matrix).
inline Rational resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    int m = f.degree(), n = g.degree();
    if (m == 0) {
        Rational r(1);
        for (int i = 0; i < n; ++i) r *= f.c[0];
        return r;
    }
    if (n == 0) {
        Rational r(1);
        for (int i = 0; i < m; ++i) r *= g.c[0];
        return r;
    }
    int size = m + n;
    std::vector<std::vector<Rational>> a(static_cast<size_t>(size),
                                         std::vector<Rational>(static_cast<size_t>(size), Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = f.c[static_cast<size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) a[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = g.c[static_cast<size_t>(n - j)];
    // plain Gaussian elimination tracking the determinant
    Rational det(1);
    for (int col = 0; col < size; ++col) {
        int pivot = -1;
        for (int r = col; r < size; ++r)
            if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(col)]);
            det = -det;
        }
        Rational pv = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= pv;
        for (int r = col + 1; r < size; ++r) {
            Rational factor = a[static_cast<size_t>(r)][static_cast<size_t>(col)] / pv;
            if (factor == 0) continue;
            for (int cc = col; cc < size; ++cc)
                a[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
                    factor * a[static_cast<size_t>(col)][static_cast<size_t>(cc)];
        }
    }
    return det;
}

}  // namespace parareeb
