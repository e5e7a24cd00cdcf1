#pragma once

// Tree realization (plan, verify, repair): given a finite tree, synthesize a
// valid bounded arrangement of parabolas from at most two congruence classes
// whose Poincare-Reeb graph is isomorphic to it, with a circle variant.
//
// Construction (rooted at a leaf, swept left to right):
//   left cap      one right-opening parabola; its apex is the root leaf
//   curtains      two congruent parabolas entering through the cap, bounding
//                 the region above and below; their entry corners are either
//                 absorbed into the first split's contour or spent as
//                 deliberate degree-2 vertices
//   horns         excluded congruent parabolas; a split of degree d carries
//                 d-2 horn apexes at one x inside one contour
//   needles       the second congruence class; a needle apex sits exactly on
//                 a boundary curve and contributes one or two degree-2
//                 vertices per the templates below
//   deaths        non-root leaves die where two boundary arcs cross
//
// The circle family reuses the same plan with curvature-matched circles
// (radius 1/(2a)) plus a right cap closing the lens; exact-incidence anchors
// are re-derived from rational points on the circles.

#include <cmath>
#include <sstream>

#include "parareeb/reeb.hpp"

namespace parareeb {

struct NotRealizable : std::runtime_error {
    explicit NotRealizable(const std::string& msg) : std::runtime_error(msg) {}
};

namespace realize_detail {
/// Geometric (retryable) planning failure, distinct from structural ones.
struct PlanInfeasible : std::runtime_error {
    explicit PlanInfeasible(const std::string& msg) : std::runtime_error(msg) {}
};
}  // namespace realize_detail

enum class Family { Parabola, Circle };

struct RealizationResult {
    Arrangement arrangement;
    ReebGraph graph;
    bool certified = false;
    int attempts = 0;
    std::string diagnostics;
};

namespace realize_detail {

inline Rational approx_rational(double v, long den) {
    if (!(std::fabs(v) < 1e15)) throw std::invalid_argument("approx_rational: value out of range");
    return Rational(static_cast<long long>(std::llround(v * static_cast<double>(den))), den);
}

/// Geometry kit shared by both families. `a` is the plan-scale parabola
/// class; circles use the curvature-matched radius r = 1/(2a).
struct Geom {
    bool circles = false;
    Rational a, a0;

    Rational radius() const { return Rational(1) / (2 * a); }
    Rational radius0() const { return Rational(1) / (2 * a0); }
    double ad() const { return rat_to_double(a); }

    HalfRegion cap() const {
        if (!circles) return {Curve::parabola_x(a, Rational(0), Rational(0)), false};
        Rational r = radius();
        return {Curve::circle(r, Rational(0), r * r), true};
    }
    HalfRegion right_cap(const Rational& W) const {
        // circles only: closes the lens on the right
        Rational r = radius();
        return {Curve::circle(W - r, Rational(0), r * r), true};
    }

    /// Exact rational point on the cap near x_target on branch dir (+1 upper,
    /// -1 lower). Returns (x, y).
    std::pair<Rational, Rational> cap_point(double x_target, int dir, long den = 1 << 16) const {
        if (!circles) {
            double rho_d = std::sqrt(std::max(0.0, x_target / ad()));
            Rational rho = approx_rational(rho_d, den);
            if (rho <= 0) rho = Rational(1, den);
            return {a * rho * rho, dir > 0 ? rho : Rational(-rho)};
        }
        Rational r = radius();
        double rd = rat_to_double(r);
        double m_d = std::sqrt(std::max(0.0, x_target / std::max(1e-300, 2 * rd - x_target)));
        Rational m = approx_rational(m_d, den * 64);
        if (m <= 0) m = Rational(1, den * 64);
        Rational den2 = 1 + m * m;
        Rational x = 2 * r * m * m / den2;
        Rational y = 2 * r * m / den2;
        return {x, dir > 0 ? y : Rational(-y)};
    }

    /// Curtain through the exact point P, bending away vertically by kappa
    /// (top curtain: up). Region side excludes the curtain's inside.
    HalfRegion curtain_through(const std::pair<Rational, Rational>& P, bool top,
                               const Rational& kappa) const {
        if (!circles) {
            Rational nu = top ? Rational(P.second + kappa) : Rational(P.second - kappa);
            Rational s = P.first - a * kappa * kappa;
            return {Curve::parabola_x(a, nu, s), true};
        }
        Rational r = radius();
        // center direction from P: unit vector with sin ~ +-kappa / r
        Rational m = (top ? kappa : -kappa) / (2 * r);
        Rational den2 = 1 + m * m;
        Rational cx = P.first + r * (1 - m * m) / den2;
        Rational cy = P.second + r * 2 * m / den2;
        return {Curve::circle(cx, cy, r * r), false};
    }

    /// Excluded horn with apex exactly at (s, nu).
    HalfRegion horn(const Rational& s, const Rational& nu) const {
        if (!circles) return {Curve::parabola_x(a, nu, s), true};
        Rational r = radius();
        return {Curve::circle(s + r, nu, r * r), false};
    }

    /// Needle (second class) with its x-extreme exactly at P.
    HalfRegion needle(const std::pair<Rational, Rational>& P, bool open_right) const {
        if (!circles) {
            if (open_right) return {Curve::parabola_x(a0, P.second, P.first), true};
            return {Curve::parabola_x(-a0, P.second, P.first), false};
        }
        Rational r0 = radius0();
        Rational cx = open_right ? Rational(P.first + r0) : Rational(P.first - r0);
        return {Curve::circle(cx, P.second, r0 * r0), false};
    }
};

/// A boundary arc carrying exact rational points, used to anchor needles.
struct Host {
    Curve curve;
    int branch;         // -1 / +1 for two-branch curves
    bool needle_right;  // rising hosts take right-opening needles
    bool is_circle;

    /// Exact rational point on this branch near x_target.
    std::pair<Rational, Rational> point_near_x(double x_target, long den = 1 << 16) const {
        if (!is_circle) {
            // parabola x = p1 (y - p2)^2 + p3
            double ad = rat_to_double(curve.p1);
            double depth = std::max(0.0, (x_target - rat_to_double(curve.p3)) / ad);
            Rational rho = approx_rational(std::sqrt(depth), den);
            if (rho <= 0) rho = Rational(1, den);
            Rational x = curve.p1 * rho * rho + curve.p3;
            Rational y = branch > 0 ? Rational(curve.p2 + rho) : Rational(curve.p2 - rho);
            return {x, y};
        }
        double rd = std::sqrt(rat_to_double(curve.p3));
        Rational r2 = curve.p3;
        double cxd = rat_to_double(curve.p1);
        double depth = std::max(0.0, x_target - (cxd - rd));
        double m_d = std::sqrt(std::max(0.0, depth / std::max(1e-300, 2 * rd - depth)));
        Rational m = approx_rational(m_d, den * 64);
        if (m <= 0) m = Rational(1, den * 64);
        Rational den2 = 1 + m * m;
        // leftmost point + arc: x = cx - r (1-m^2)/(1+m^2), y = cy +- 2 r m/(1+m^2)
        // with r rational only via r2; use the parameterization in terms of r2:
        // points ((cx - r) + 2 r m^2/(1+m^2), cy +- 2 r m /(1+m^2)) need rational r.
        // radius is rational by construction (r = 1/(2a)).
        Rational r = rat_exact_sqrt(r2).value();
        Rational x = curve.p1 - r * (1 - m * m) / den2;
        Rational y = branch > 0 ? Rational(curve.p2 + 2 * r * m / den2) : Rational(curve.p2 - 2 * r * m / den2);
        return {x, y};
    }

    double value_at(double x) const {
        if (!is_circle) {
            double ad = rat_to_double(curve.p1), vd = rat_to_double(curve.p2),
                   ud = rat_to_double(curve.p3);
            double w = std::max(0.0, (x - ud) / ad);
            return vd + branch * std::sqrt(w);
        }
        double cx = rat_to_double(curve.p1), cy = rat_to_double(curve.p2);
        double r2 = rat_to_double(curve.p3);
        double w = std::max(0.0, r2 - (x - cx) * (x - cx));
        return cy + branch * std::sqrt(w);
    }
};

inline Host host_of(const HalfRegion& h, int branch, bool needle_right) {
    return {h.curve, branch, needle_right, h.curve.kind == CurveKind::Circle};
}

/// Approximate first crossing x of two hosts right of x_from (layout only).
inline double cross_x_approx(const Host& a, const Host& b, double x_from, double x_to) {
    double lo = x_from, hi = x_to;
    auto gap = [&](double x) { return b.value_at(x) - a.value_at(x); };
    if (gap(lo) <= 0) return lo;
    // march until the gap closes, then bisect
    double step = (x_to - x_from) / 64;
    double x = lo + step;
    while (x < x_to && gap(x) > 0) x += step;
    if (x >= x_to) return x_to;
    lo = x - step;
    hi = x;
    for (int i = 0; i < 80; ++i) {
        double mid = (lo + hi) / 2;
        if (gap(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

struct EdgePlan {
    Host lower, upper;
    double x_start, x_end;  // window in x (end: child split or approx death)
    bool ends_in_death;
    int bumps = 0;  // suppressed-vertex count to add
};

}  // namespace realize_detail

// ---------------------------------------------------------------------------
// Path trees: lens constructions
// ---------------------------------------------------------------------------

namespace realize_detail {

/// Lens (n odd) or vertically offset lens (n even) + needles: realizes P_n.
inline Arrangement path_arrangement(int n, const Geom& g, int round) {
    Arrangement arr;
    arr.label = "path-" + std::to_string(n);
    const Rational& a = g.a;
    arr.halves.push_back(g.cap());
    Rational W;
    if (n % 2 == 1) {
        W = 2 * a;  // symmetric: corners at (a, +-1)
        if (!g.circles)
            arr.halves.push_back({Curve::parabola_x(-a, Rational(0), W), true});
        else
            arr.halves.push_back(g.right_cap(W));
    } else {
        // offset right cap: corners at distinct x (beta=2, tau=4 -> W=10a)
        W = 10 * a;
        if (!g.circles)
            arr.halves.push_back({Curve::parabola_x(-a, Rational(2), W), true});
        else {
            Rational r = g.radius();
            arr.halves.push_back({Curve::circle(W - r, Rational(2), r * r), true});
        }
    }
    int extra = n - (n % 2 == 1 ? 3 : 4);
    int pairs = extra / 2;
    // left-opening needles on the cap's lower branch, staggered windows
    Host caph = host_of(arr.halves[0], -1, false);
    double x_first = rat_to_double(a) * (n % 2 == 1 ? 0.5 : 0.5);
    double shrink = std::pow(0.75, round);
    for (int i = 0; i < pairs; ++i) {
        double xt = x_first * std::pow(4.0 / 9.0, i) * shrink;
        auto P = caph.point_near_x(xt, 1 << 16);
        arr.halves.push_back(g.needle(P, false));
    }
    return arr;
}

}  // namespace realize_detail

// ---------------------------------------------------------------------------
// Fan construction for cores with branching
// ---------------------------------------------------------------------------

namespace realize_detail {

struct FanBuilder {
    const Tree& core;
    const std::vector<int>& counts;  // per core edge
    int root;
    Geom g;
    int round;
    unsigned seed;

    Arrangement arr;
    std::vector<std::vector<int>> adj;
    std::map<std::pair<int, int>, int> edge_count;
    std::vector<EdgePlan> edges_to_bump;
    std::string trace;

    FanBuilder(const Tree& c, const std::vector<int>& k, int r, Geom geom, int rnd, unsigned sd)
        : core(c), counts(k), root(r), g(geom), round(rnd), seed(sd) {
        adj = core.adjacency();
        for (size_t i = 0; i < core.edges.size(); ++i) {
            auto [u, v] = core.edges[i];
            edge_count[{u, v}] = counts[i];
            edge_count[{v, u}] = counts[i];
        }
    }

    int kcount(int u, int v) const { return edge_count.at({u, v}); }

    Rational jitter(int tag, const Rational& scale) const {
        unsigned h = seed * 2654435761u + static_cast<unsigned>(round) * 40503u +
                     static_cast<unsigned>(tag) * 2246822519u;
        h ^= h >> 13;
        long j = static_cast<long>(h % 17) - 8;
        return scale * Rational(j, 17 * 6);
    }

    /// Exact lower/upper bound rationals of a lobe at x = s (inner approx).
    std::pair<Rational, Rational> lobe_bounds_at(const Host& lo, const Host& hi,
                                                 const Rational& s) const {
        Scalar bl = sweep_detail::branch_value(lo.curve, lo.branch, Scalar(s));
        Scalar bh = sweep_detail::branch_value(hi.curve, hi.branch, Scalar(s));
        auto il = scalar_interval(bl, 40);
        auto ih = scalar_interval(bh, 40);
        return {il.second, ih.first};
    }

    void build() {
        double ad = g.ad();
        Rational q(1);
        Rational kappa(2);
        double shrink = std::pow(0.75, round % 4);

        arr.label = "fan";
        arr.halves.push_back(g.cap());
        int v0 = adj[static_cast<size_t>(root)][0];

        // exact anchors on the cap at the root split
        double s0_t = ad * rat_to_double(q * q);
        auto Ptop = g.cap_point(s0_t, +1);
        auto Pbot = g.cap_point(s0_t, -1);
        // one exact split abscissa: for parabolas both cap points share x by
        // symmetry; for circles snap the bottom to the top's x
        Rational s0 = Ptop.first;
        if (g.circles) Pbot = {Ptop.first, Rational(-Ptop.second)};

        // slot assignment at v0 and curtain entry modes
        std::vector<int> kids;
        for (int w : adj[static_cast<size_t>(v0)])
            if (w != root) kids.push_back(w);
        int d = static_cast<int>(kids.size()) + 1;
        if (d < 3) throw NotRealizable("fan core vertex of degree < 3");

        auto is_internal = [&](int v) { return adj[static_cast<size_t>(v)].size() > 1; };
        std::vector<int> internal_odd, others;
        for (int c : kids)
            (is_internal(c) && kcount(v0, c) % 2 == 1 ? internal_odd : others).push_back(c);
        if (static_cast<int>(internal_odd.size()) > 2)
            throw NotRealizable("more than two internal odd-count branches at the first split");
        // order bottom..top: first internal-odd at bottom, second at top
        std::vector<int> slots = others;
        bool bottom_late = false, top_late = false;
        if (!internal_odd.empty()) {
            slots.insert(slots.begin(), internal_odd[0]);
            bottom_late = true;
        }
        if (internal_odd.size() > 1) {
            slots.push_back(internal_odd[1]);
            top_late = true;
        }
        int k_root = kcount(root, v0);
        bool top_early = (k_root % 2 == 1);
        if (top_early && top_late)
            throw NotRealizable("root edge and top branch both need the top curtain");

        // top curtain
        HalfRegion top_curtain = [&] {
            if (top_early) {
                auto P = g.cap_point(s0_t * 0.5625, +1);  // entry inside the root edge
                return g.curtain_through(P, true, kappa);
            }
            if (top_late) {
                // entry inside the top child's edge, shortly after s0
                double xt = s0_t + ad * 0.01 * shrink;
                auto P = g.cap_point(xt, +1);
                return g.curtain_through(P, true, kappa);
            }
            return g.curtain_through(Ptop, true, kappa);
        }();
        HalfRegion bottom_curtain = [&] {
            if (bottom_late) {
                double xt = s0_t + ad * 0.01 * shrink;
                auto P = g.cap_point(xt, -1);
                return g.curtain_through(P, false, kappa);
            }
            return g.curtain_through(Pbot, false, kappa);
        }();
        arr.halves.push_back(top_curtain);
        arr.halves.push_back(bottom_curtain);

        Host cap_lower = host_of(arr.halves[0], -1, false);
        Host top_arm = host_of(top_curtain, -1, true);     // lower arm of top curtain
        Host bot_arm = host_of(bottom_curtain, +1, true);  // upper arm of bottom curtain

        // root edge bump plan (its odd part is the early-entry corner)
        {
            EdgePlan e;
            e.lower = cap_lower;
            e.upper = host_of(arr.halves[0], +1, false);
            e.x_start = 0;
            e.x_end = s0_t;
            e.ends_in_death = false;
            e.bumps = k_root - (top_early ? 1 : 0);
            edges_to_bump.push_back(e);
        }

        place_vertex(v0, slots, bot_arm, top_arm, s0, Ptop, Pbot, bottom_late, top_late);
    }

    /// Lay out vertex v (its split at s_v is already fixed), then recurse.
    void place_vertex(int v, const std::vector<int>& slots, const Host& lower_host,
                      const Host& upper_host, const Rational& s_v,
                      std::pair<Rational, Rational> /*anchor_top*/,
                      std::pair<Rational, Rational> /*anchor_bot*/, bool bottom_late_entry,
                      bool top_late_entry) {
        const Rational& a = g.a;
        int d = static_cast<int>(slots.size()) + 1;
        auto [lo_q, hi_q] = lobe_bounds_at(lower_host, upper_host, s_v);
        if (lo_q >= hi_q) throw PlanInfeasible("lobe collapsed before its split");
        Rational width = hi_q - lo_q;

        // horn apexes: evenly spaced with jitter, n = d - 2
        int n_horns = d - 2;
        std::vector<Rational> nus;
        std::vector<Host> horn_upper, horn_lower;
        for (int i = 1; i <= n_horns; ++i) {
            Rational nu = lo_q + width * Rational(i) / Rational(d - 1) + jitter(v * 64 + i, width / (8 * (d - 1)));
            nus.push_back(nu);
            HalfRegion h = g.horn(s_v, nu);
            arr.halves.push_back(h);
            horn_upper.push_back(host_of(h, +1, true));
            horn_lower.push_back(host_of(h, -1, true));
        }

        // sub-lobes bottom..top: [lower_host, horn_0], [horn_0, horn_1], ...
        for (int slot = 0; slot < d - 1; ++slot) {
            int child = slots[static_cast<size_t>(slot)];
            Host lo = slot == 0 ? lower_host : horn_upper[static_cast<size_t>(slot - 1)];
            Host hi = slot == d - 2 ? upper_host : horn_lower[static_cast<size_t>(slot)];
            bool child_internal = adj[static_cast<size_t>(child)].size() > 1;
            int k = kcount(v, child);
            bool late_here = (slot == 0 && bottom_late_entry) || (slot == d - 2 && top_late_entry);

            double sv_d = rat_to_double(s_v);
            double death = cross_x_approx(lo, hi, sv_d, sv_d + 64 * g.ad());

            if (!child_internal) {
                EdgePlan e;
                e.lower = lo;
                e.upper = hi;
                e.x_start = sv_d;
                e.x_end = death;
                e.ends_in_death = true;
                e.bumps = k - (late_here ? 1 : 0);
                edges_to_bump.push_back(e);
                continue;
            }

            // child split: adaptive window, left of the lobe's death
            auto [clo, chi] = lobe_bounds_at(lo, hi, s_v);
            Rational gap = chi - clo;
            if (gap <= 0) throw PlanInfeasible("empty sub-lobe");
            Rational delta = a * (gap / 4) * (gap / 4) * Rational(3, 4);
            double target = std::min(sv_d + rat_to_double(delta), (sv_d + death) / 2);
            Rational s_c = realize_detail::approx_rational(target, 1 << 20);
            if (s_c <= s_v) s_c = s_v + delta / 2;

            // child's slot assignment: internal-odd branches need outer slots
            std::vector<int> ckids;
            for (int w : adj[static_cast<size_t>(child)])
                if (w != v) ckids.push_back(w);
            std::vector<int> internal_odd, others;
            for (int c2 : ckids)
                (adj[static_cast<size_t>(c2)].size() > 1 && kcount(child, c2) % 2 == 1
                     ? internal_odd
                     : others)
                    .push_back(c2);
            if (!internal_odd.empty())
                throw NotRealizable(
                    "internal odd-count branch below the first split (out of the construction's "
                    "reach)");

            EdgePlan e;
            e.lower = lo;
            e.upper = hi;
            e.x_start = sv_d;
            e.x_end = rat_to_double(s_c);
            e.ends_in_death = false;
            e.bumps = k - (late_here ? 1 : 0);
            edges_to_bump.push_back(e);

            place_vertex(child, others, lo, hi, s_c, {Rational(0), Rational(0)},
                         {Rational(0), Rational(0)}, false, false);
        }
    }

    /// Generic +2 needles and +1 death shifts on every planned edge.
    void add_bumps() {
        double shrink = std::pow(0.75, round);
        for (const auto& e : edges_to_bump) {
            if (e.bumps < 0) throw PlanInfeasible("bump budget went negative");
            if (e.bumps == 0) continue;
            int k = e.bumps;
            double win = e.x_end - e.x_start;
            int n_needles = k / 2;
            bool odd = k % 2 == 1;
            if (odd && !e.ends_in_death)
                throw NotRealizable("odd count on an edge with no death to shift");
            // death shift: needle apex on the lower host close to the death
            if (odd) {
                double slope_den = std::fabs(e.lower.value_at(e.x_end) -
                                             e.lower.value_at(e.x_end - 0.01 * win));
                double slope = slope_den / (0.01 * win);
                double delta =
                    std::min(win / 8.0, 0.5 / (std::max(slope, 1e-9) * std::max(slope, 1e-9) *
                                                rat_to_double(g.a0))) *
                    shrink;
                auto P = e.lower.point_near_x(e.x_end - delta, 1 << 18);
                arr.halves.push_back(g.needle(P, e.lower.needle_right));
            }
            // generic +2 needles staggered in the left part of the window
            for (int i = 0; i < n_needles; ++i) {
                double frac = (i + 1.0) / (n_needles + 2.0);
                double xt = e.lower.needle_right ? e.x_start + win * frac * 0.6 * shrink + win * 0.05
                                                 : e.x_end - win * (frac * 0.6 * shrink + 0.05);
                auto P = e.lower.point_near_x(xt, 1 << 17);
                arr.halves.push_back(g.needle(P, e.lower.needle_right));
            }
        }
    }
};

}  // namespace realize_detail

/// Plan, build, verify, repair. Throws NotRealizable after the retry budget
/// (or immediately for the documented P2-with-parabolas case).
inline RealizationResult realize_tree(const Tree& t, Family family, const Rational& klass = Rational(1),
                                      int max_rounds = 12, unsigned seed = 0,
                                      const Rational& a0_init = Rational(0)) {
    using namespace realize_detail;
    if (!tree_is_valid(t) || t.n < 2) throw std::invalid_argument("realize_tree: need a tree, n >= 2");
    std::string want = canonical_code(t);

    // P2: a disk for circles; provably out of reach for parabolas (every
    // bounded parabola-only region carries at least 3 singular contours)
    if (t.n == 2) {
        if (family == Family::Parabola)
            throw NotRealizable(
                "P2 with parabolas: every bounded parabola-bounded region has a corner or second "
                "apex, so its graph has >= 3 vertices; use the circle family");
        Arrangement arr;
        arr.label = "disk";
        arr.halves.push_back({Curve::circle(Rational(0), Rational(0), Rational(1)), true});
        RealizationResult res;
        res.arrangement = arr;
        res.graph = build_reeb(arr);
        res.certified = canonical_code(as_tree(res.graph)) == want;
        res.attempts = 1;
        return res;
    }

    Geom geom;
    geom.circles = family == Family::Circle;
    geom.a = geom.circles ? Rational(1, 1024) : klass;

    auto sm = smooth_tree(t);
    bool is_path = sm.core.n == 2;

    std::ostringstream trace;
    for (int round = 0; round < max_rounds; ++round) {
        geom.a0 = a0_init > 0 ? a0_init * (Integer(1) << round)
                               : geom.a * 16 * (Integer(1) << round);
        if (geom.a0 <= geom.a) geom.a0 = geom.a * 16 * (Integer(1) << round);
        Arrangement arr;
        try {
            if (is_path) {
                arr = path_arrangement(t.n, geom, round);
            } else {
                // candidate roots: all core leaves, rotated by round
                std::vector<int> leaves;
                for (int v = 0; v < sm.core.n; ++v)
                    if (sm.core.adjacency()[static_cast<size_t>(v)].size() == 1) leaves.push_back(v);
                int root = leaves[static_cast<size_t>(round) % leaves.size()];
                FanBuilder fb(sm.core, sm.counts, root, geom, round, seed);
                fb.build();
                fb.add_bumps();
                arr = std::move(fb.arr);
                arr.label = "realized-" + std::to_string(t.n);
            }
            ReebGraph g = build_reeb(arr);
            Tree got = as_tree(g);
            if (canonical_code(got) == want) {
                RealizationResult res;
                res.arrangement = std::move(arr);
                res.graph = std::move(g);
                res.certified = true;
                res.attempts = round + 1;
                return res;
            }
            trace << "round " << round << ": graph has " << got.n << " vertices, want " << t.n
                  << "\n";
        } catch (const NotRealizable& e) {
            throw;  // structural, retrying will not help
        } catch (const std::exception& e) {
            trace << "round " << round << ": " << e.what() << "\n";
        }
        if (geom.circles) geom.a = geom.a / 2;  // flatter circles
    }
    throw NotRealizable("retry budget exhausted:\n" + trace.str());
}

inline RealizationResult realize_circles(const Tree& t) { return realize_tree(t, Family::Circle); }

/// Congruence classes present in an arrangement (via is_congruent).
inline std::vector<Curve> congruence_classes(const Arrangement& arr) {
    std::vector<Curve> reps;
    for (const auto& h : arr.halves) {
        bool found = false;
        for (const auto& r : reps)
            if (is_congruent(h.curve, r)) found = true;
        if (!found) reps.push_back(h.curve);
    }
    return reps;
}

}  // namespace parareeb
