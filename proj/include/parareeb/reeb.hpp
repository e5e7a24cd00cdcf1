#pragma once

// Exact Poincare-Reeb sweep: slice the closed region along vertical lines,
// one slab per gap between consecutive critical x-values, and glue slab
// components through the critical slices. Vertices are the contours that
// contain singular points; matching uses closed-interval overlap evaluated
// exactly at the critical x itself.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "parareeb/region.hpp"
#include "parareeb/tree.hpp"

namespace parareeb {

struct Unbounded : std::runtime_error {
    Unbounded() : std::runtime_error("region closure is not compact under the sweep") {}
};
struct HasCycle : std::runtime_error {
    HasCycle() : std::runtime_error("graph has a cycle") {}
};

enum class VertexKind { Leaf, Split, Merge, CornerPass, TangencyPass };

inline const char* vertex_kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::Leaf: return "leaf";
        case VertexKind::Split: return "split";
        case VertexKind::Merge: return "merge";
        case VertexKind::CornerPass: return "corner_pass";
        case VertexKind::TangencyPass: return "tangency_pass";
    }
    return "?";
}

struct ReebVertex {
    int id;
    Scalar x;
    VertexKind kind;
    std::vector<int> witnesses;  // indices into ReebGraph::singulars
    Scalar span_lo, span_hi;     // contour y-interval at x
    int component = 0;

    ReebVertex() : id(-1), x(Rational(0)), kind(VertexKind::Leaf), span_lo(Rational(0)), span_hi(Rational(0)) {}
};

struct ReebEdge {
    int a, b;           // vertex ids, x(a) < x(b)
    Rational sample_b;  // rational slab witness strictly between the endpoints
    int sample_index;   // component index within the witness slab slice
};

struct ReebGraph {
    std::vector<ReebVertex> vertices;
    std::vector<ReebEdge> edges;
    std::vector<SingularPoint> singulars;
    std::string label;
    int component_count = 1;
};

// ---------------------------------------------------------------------------
// Exact slicing
// ---------------------------------------------------------------------------

struct SliceComponent {
    Scalar lo, hi;
    int lo_curve = -1, hi_curve = -1;  // indices into the arrangement's curves
    int lo_branch = 0, hi_branch = 0;  // -1 lower branch, +1 upper, 0 single
    bool degenerate() const { return scalar_eq(lo, hi); }
};

struct SliceResult {
    std::vector<SliceComponent> comps;
    bool unbounded = false;
};

namespace sweep_detail {

/// sign of (A + B*sqrt(D)) evaluated at algebraic e
inline int sign_quadext(const UniPoly& A, const UniPoly& B, const Rational& D, const Scalar& e) {
    if (B.is_zero() || D == 0) return sign_at(A, e);
    int sa = sign_at(A, e);
    int sb = sign_at(B, e);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    UniPoly disc = A * A - B * B * D;
    int sc = sign_at(disc, e);
    return sc == 0 ? 0 : sa * sc;
}

/// f(b, y) for QuadNum b, split as A(y) + B(y) sqrt(D).
inline std::pair<UniPoly, UniPoly> poly_in_y_at_quad(const Curve& c, const QuadNum& b) {
    auto cs = poly_in_y(c);
    std::vector<Rational> A(3, Rational(0)), B(3, Rational(0));
    for (int k = 0; k < 3; ++k) {
        // evaluate cs[k] (a poly in x) at b via Horner on (c0, c1) pairs
        Rational a0(0), a1(0);
        const auto& p = cs[static_cast<size_t>(k)];
        for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
            Rational n0 = a0 * b.c0 + a1 * b.c1 * b.d + *it;
            Rational n1 = a0 * b.c1 + a1 * b.c0;
            a0 = n0;
            a1 = n1;
        }
        A[static_cast<size_t>(k)] = a0;
        B[static_cast<size_t>(k)] = a1;
    }
    return {UniPoly(std::move(A)), UniPoly(std::move(B))};
}

/// sign of g_i at (b, y) with rational y.
inline int sign_g_at_xy(const HalfRegion& h, const Scalar& b, const Rational& y) {
    if (is_rational(b)) return sign(g_eval(h, as_rational(b), y));
    auto cs = poly_in_x(h.curve);
    UniPoly f({cs[0].is_zero() ? Rational(0) : cs[0].eval(y),
               cs[1].is_zero() ? Rational(0) : cs[1].eval(y),
               cs[2].is_zero() ? Rational(0) : cs[2].eval(y)});
    return h.region_sign() * sign_at(f, b);
}

/// sign of g_i at (b, e) with algebraic e.
inline int sign_g_at_alg(const HalfRegion& h, const Scalar& b, const Scalar& e) {
    if (is_rational(e)) return sign_g_at_xy(h, b, as_rational(e));
    if (is_rational(b)) return h.region_sign() * sign_at(poly_in_y_at(h.curve, as_rational(b)), e);
    const QuadNum& qb = std::get<QuadNum>(b);
    auto [A, B] = poly_in_y_at_quad(h.curve, qb);
    return h.region_sign() * sign_quadext(A, B, qb.d, e);
}

struct HalfRoots {
    std::vector<std::pair<Scalar, int>> roots;  // (y, branch)
    bool empty_all = false;                     // g < 0 on the whole line
};

inline HalfRoots slice_roots(const HalfRegion& h, const Scalar& b) {
    HalfRoots out;
    const Curve& c = h.curve;
    switch (c.kind) {
        case CurveKind::Line: {
            if (c.p2 == 0) {
                Scalar v = scalar_affine(b, c.p1, c.p3);
                int s = h.region_sign() * scalar_sign(v);
                if (s == 0) throw VerticalLineOverlap();
                if (s < 0) out.empty_all = true;
                return out;
            }
            out.roots.push_back({scalar_affine(b, -c.p1 / c.p2, -c.p3 / c.p2), 0});
            return out;
        }
        case CurveKind::ParabolaX: {
            Scalar w = scalar_affine(b, Rational(1) / c.p1, -c.p3 / c.p1);
            int sw = scalar_sign(w);
            if (sw < 0) {
                // no real point of the curve on the line; constant sign of g
                if (sign_g_at_xy(h, b, c.p2) < 0) out.empty_all = true;
                return out;
            }
            if (sw == 0) {
                out.roots.push_back({Scalar(c.p2), -1});
                out.roots.push_back({Scalar(c.p2), 1});
                return out;
            }
            Scalar s = scalar_sqrt(w);
            out.roots.push_back({scalar_affine(s, Rational(-1), c.p2), -1});
            out.roots.push_back({scalar_affine(s, Rational(1), c.p2), 1});
            return out;
        }
        case CurveKind::ParabolaY: {
            UniPoly g({c.p1 * c.p2 * c.p2 + c.p3, -2 * c.p1 * c.p2, c.p1});
            out.roots.push_back({poly_image(b, g), 0});
            return out;
        }
        case CurveKind::Circle: {
            UniPoly sq({c.p3 - c.p1 * c.p1, 2 * c.p1, Rational(-1)});  // r2 - (x-cx)^2
            Scalar w = poly_image(b, sq);
            int sw = scalar_sign(w);
            if (sw < 0) {
                if (sign_g_at_xy(h, b, c.p2) < 0) out.empty_all = true;
                return out;
            }
            if (sw == 0) {
                out.roots.push_back({Scalar(c.p2), -1});
                out.roots.push_back({Scalar(c.p2), 1});
                return out;
            }
            Scalar s = scalar_sqrt(w);
            out.roots.push_back({scalar_affine(s, Rational(-1), c.p2), -1});
            out.roots.push_back({scalar_affine(s, Rational(1), c.p2), 1});
            return out;
        }
    }
    return out;
}

struct SliceEndpoint {
    Scalar y;
    std::vector<std::pair<int, int>> tags;  // (curve index, branch)
};

}  // namespace sweep_detail

/// Connected components of closure(D) on the line x = b (b rational or
/// quadratic). Exact endpoints, ascending, with bounding-curve tags.
inline SliceResult slice_components_at(const std::vector<HalfRegion>& halves, const Scalar& b) {
    using namespace sweep_detail;
    SliceResult res;
    std::vector<SliceEndpoint> ends;
    for (size_t i = 0; i < halves.size(); ++i) {
        HalfRoots hr = slice_roots(halves[i], b);
        if (hr.empty_all) return res;
        for (auto& [y, branch] : hr.roots) {
            bool merged = false;
            for (auto& e : ends) {
                if (scalar_eq(e.y, y)) {
                    e.tags.push_back({static_cast<int>(i), branch});
                    merged = true;
                    break;
                }
            }
            if (!merged) ends.push_back({y, {{static_cast<int>(i), branch}}});
        }
    }
    std::sort(ends.begin(), ends.end(),
              [](const SliceEndpoint& a, const SliceEndpoint& b2) { return scalar_lt(a.y, b2.y); });

    auto all_positive_at = [&](const Rational& y) {
        for (const auto& h : halves)
            if (sign_g_at_xy(h, b, y) <= 0) return false;
        return true;
    };
    auto feasible_endpoint = [&](const SliceEndpoint& e) {
        for (const auto& h : halves)
            if (sign_g_at_alg(h, b, e.y) < 0) return false;
        return true;
    };

    size_t m = ends.size();
    if (m == 0) {
        if (all_positive_at(Rational(0))) res.unbounded = true;
        return res;
    }
    // gap feasibility: gaps[0] = (-inf, e0), gaps[i] = (e_{i-1}, e_i), gaps[m] = (e_{m-1}, inf)
    std::vector<bool> gap_in(m + 1, false);
    {
        auto lo0 = scalar_interval(ends[0].y, 8).first;
        gap_in[0] = all_positive_at(lo0 - 1);
        for (size_t i = 1; i < m; ++i) {
            if (scalar_eq(ends[i - 1].y, ends[i].y)) continue;
            Rational s = separating_rational(ends[i - 1].y, ends[i].y);
            gap_in[i] = all_positive_at(s);
        }
        auto hiE = scalar_interval(ends[m - 1].y, 8).second;
        gap_in[m] = all_positive_at(hiE + 1);
    }
    if (gap_in[0] || gap_in[m]) {
        res.unbounded = true;
        return res;
    }
    std::vector<bool> end_in(m);
    for (size_t i = 0; i < m; ++i) {
        if (gap_in[i] || gap_in[i + 1])
            end_in[i] = true;  // continuity: closure of a feasible gap
        else
            end_in[i] = feasible_endpoint(ends[i]);
    }

    // assemble maximal runs
    size_t i = 0;
    while (i < m) {
        if (!end_in[i]) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j + 1 <= m && gap_in[j + 1] && j + 1 < m && end_in[j + 1]) ++j;
        SliceComponent comp;
        comp.lo = ends[i].y;
        comp.lo_curve = ends[i].tags.front().first;
        comp.lo_branch = ends[i].tags.front().second;
        comp.hi = ends[j].y;
        comp.hi_curve = ends[j].tags.front().first;
        comp.hi_branch = ends[j].tags.front().second;
        res.comps.push_back(comp);
        i = j + 1;
    }
    return res;
}

/// Spec-facing wrapper: slices at a rational abscissa.
inline SliceResult slice_components(const Arrangement& arr, const Rational& b) {
    return slice_components_at(arr.all(), Scalar(b));
}

namespace sweep_detail {

/// Value at x = X of the branch of a curve that bounds a slab component.
inline Scalar branch_value(const Curve& c, int branch, const Scalar& X) {
    switch (c.kind) {
        case CurveKind::Line:
            return scalar_affine(X, -c.p1 / c.p2, -c.p3 / c.p2);
        case CurveKind::ParabolaX: {
            Scalar w = scalar_affine(X, Rational(1) / c.p1, -c.p3 / c.p1);
            Scalar s = scalar_sqrt(w);
            return scalar_affine(s, Rational(branch), c.p2);
        }
        case CurveKind::ParabolaY: {
            UniPoly g({c.p1 * c.p2 * c.p2 + c.p3, -2 * c.p1 * c.p2, c.p1});
            return poly_image(X, g);
        }
        case CurveKind::Circle: {
            UniPoly sq({c.p3 - c.p1 * c.p1, 2 * c.p1, Rational(-1)});
            Scalar w = poly_image(X, sq);
            Scalar s = scalar_sqrt(w);
            return scalar_affine(s, Rational(branch), c.p2);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace sweep_detail

/// Strictly increasing distinct x-values of all singular points.
inline std::vector<Scalar> critical_xs(const Arrangement& arr) {
    auto sps = singular_points(arr);
    std::vector<Scalar> xs;
    for (const auto& sp : sps) {
        if (xs.empty() || !scalar_eq(xs.back(), sp.point.x)) xs.push_back(sp.point.x);
    }
    return xs;
}

/// The Poincare-Reeb graph of a valid bounded arrangement.
inline ReebGraph build_reeb(const Arrangement& arr) {
    using namespace sweep_detail;
    ReebGraph g;
    g.label = arr.label;
    g.singulars = singular_points(arr);  // validates
    if (g.singulars.empty()) throw Unbounded();
    auto halves = arr.all();

    std::vector<Scalar> xs;
    for (const auto& sp : g.singulars) {
        if (std::holds_alternative<AlgebraicNumber>(sp.point.x))
            throw DegreeCapExceeded();
        if (xs.empty() || !scalar_eq(xs.back(), sp.point.x)) xs.push_back(sp.point.x);
    }
    size_t m = xs.size();

    // boundedness probes beyond the critical range
    {
        Rational left = scalar_interval(xs.front(), 8).first - 1;
        Rational right = scalar_interval(xs.back(), 8).second + 1;
        SliceResult sl = slice_components_at(halves, Scalar(left));
        SliceResult sr = slice_components_at(halves, Scalar(right));
        if (sl.unbounded || sr.unbounded || !sl.comps.empty() || !sr.comps.empty())
            throw Unbounded();
    }

    // critical slices
    std::vector<SliceResult> crit(m);
    for (size_t i = 0; i < m; ++i) {
        crit[i] = slice_components_at(halves, xs[i]);
        if (crit[i].unbounded) throw Unbounded();
    }
    // slab slices
    std::vector<Rational> samples(m > 1 ? m - 1 : 0);
    std::vector<SliceResult> slabs(m > 1 ? m - 1 : 0);
    for (size_t i = 0; i + 1 < m; ++i) {
        samples[i] = separating_rational(xs[i], xs[i + 1]);
        slabs[i] = slice_components_at(halves, Scalar(samples[i]));
        if (slabs[i].unbounded) throw Unbounded();
    }

    // assign singular points to critical components
    // vert_of[i][k] = vertex id of component k at critical slice i (or -1)
    std::vector<std::vector<int>> vert_of(m);
    std::vector<std::vector<std::vector<int>>> wit(m);
    for (size_t i = 0; i < m; ++i) {
        vert_of[i].assign(crit[i].comps.size(), -1);
        wit[i].assign(crit[i].comps.size(), {});
    }
    for (size_t s = 0; s < g.singulars.size(); ++s) {
        const auto& sp = g.singulars[s];
        size_t i = 0;
        while (!scalar_eq(xs[i], sp.point.x)) ++i;
        bool placed = false;
        for (size_t k = 0; k < crit[i].comps.size(); ++k) {
            const auto& comp = crit[i].comps[k];
            if (scalar_le(comp.lo, sp.point.y) && scalar_le(sp.point.y, comp.hi)) {
                wit[i][k].push_back(static_cast<int>(s));
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("singular point missed its contour");
    }
    for (size_t i = 0; i < m; ++i) {
        for (size_t k = 0; k < crit[i].comps.size(); ++k) {
            if (wit[i][k].empty()) continue;
            ReebVertex v;
            v.id = static_cast<int>(g.vertices.size());
            v.x = xs[i];
            v.witnesses = wit[i][k];
            v.span_lo = crit[i].comps[k].lo;
            v.span_hi = crit[i].comps[k].hi;
            vert_of[i][k] = v.id;
            g.vertices.push_back(std::move(v));
        }
    }

    // match slab components to critical components on both sides
    struct Attach {
        int left_comp = -1, right_comp = -1;  // component index at bounding slices
    };
    std::vector<std::vector<Attach>> attach(slabs.size());
    auto locate = [&](const SliceResult& critical, const Scalar& L1, const Scalar& L2) {
        for (size_t k = 0; k < critical.comps.size(); ++k) {
            const auto& K = critical.comps[k];
            if (scalar_le(K.lo, L2) && scalar_le(L1, K.hi)) return static_cast<int>(k);
        }
        throw std::logic_error("slab component limit missed the critical slice");
    };
    for (size_t i = 0; i < slabs.size(); ++i) {
        attach[i].resize(slabs[i].comps.size());
        for (size_t c = 0; c < slabs[i].comps.size(); ++c) {
            const auto& comp = slabs[i].comps[c];
            Scalar l1 = branch_value(halves[static_cast<size_t>(comp.lo_curve)].curve, comp.lo_branch, xs[i]);
            Scalar l2 = branch_value(halves[static_cast<size_t>(comp.hi_curve)].curve, comp.hi_branch, xs[i]);
            attach[i][c].left_comp = locate(crit[i], l1, l2);
            Scalar r1 = branch_value(halves[static_cast<size_t>(comp.lo_curve)].curve, comp.lo_branch, xs[i + 1]);
            Scalar r2 = branch_value(halves[static_cast<size_t>(comp.hi_curve)].curve, comp.hi_branch, xs[i + 1]);
            attach[i][c].right_comp = locate(crit[i + 1], r1, r2);
        }
    }

    // union-find over slab components; vertex-less critical comps glue through
    std::vector<int> flat_base(slabs.size() + 1, 0);
    for (size_t i = 0; i < slabs.size(); ++i)
        flat_base[i + 1] = flat_base[i] + static_cast<int>(slabs[i].comps.size());
    int total = flat_base[slabs.size()];
    std::vector<int> parent(static_cast<size_t>(total));
    for (int i = 0; i < total; ++i) parent[static_cast<size_t>(i)] = i;
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };

    for (size_t i = 0; i < m; ++i) {
        for (size_t k = 0; k < crit[i].comps.size(); ++k) {
            if (vert_of[i][k] >= 0) continue;
            std::vector<int> left, right;
            if (i > 0)
                for (size_t c = 0; c < slabs[i - 1].comps.size(); ++c)
                    if (attach[i - 1][c].right_comp == static_cast<int>(k))
                        left.push_back(flat_base[i - 1] + static_cast<int>(c));
            if (i < slabs.size())
                for (size_t c = 0; c < slabs[i].comps.size(); ++c)
                    if (attach[i][c].left_comp == static_cast<int>(k))
                        right.push_back(flat_base[i] + static_cast<int>(c));
            if (left.size() != 1 || right.size() != 1)
                throw std::logic_error("contour without singular point changes topology");
            unite(left[0], right[0]);
        }
    }

    // edges: one per union class
    struct Segment {
        int left_vertex = -1, right_vertex = -1;
        size_t leftmost_slab = SIZE_MAX;
        int leftmost_comp = -1;
    };
    std::map<int, Segment> segs;
    for (size_t i = 0; i < slabs.size(); ++i) {
        for (size_t c = 0; c < slabs[i].comps.size(); ++c) {
            int id = flat_base[i] + static_cast<int>(c);
            Segment& s = segs[find(id)];
            int lv = vert_of[i][static_cast<size_t>(attach[i][c].left_comp)];
            int rv = vert_of[i + 1][static_cast<size_t>(attach[i][c].right_comp)];
            if (lv >= 0) s.left_vertex = lv;
            if (rv >= 0) s.right_vertex = rv;
            if (i < s.leftmost_slab) {
                s.leftmost_slab = i;
                s.leftmost_comp = static_cast<int>(c);
            }
        }
    }
    for (auto& [root, s] : segs) {
        if (s.left_vertex < 0 || s.right_vertex < 0)
            throw std::logic_error("edge with a missing endpoint vertex");
        g.edges.push_back({s.left_vertex, s.right_vertex, samples[s.leftmost_slab], s.leftmost_comp});
    }

    // kinds from in/out degrees
    std::vector<int> dl(g.vertices.size(), 0), dr(g.vertices.size(), 0);
    for (const auto& e : g.edges) {
        ++dr[static_cast<size_t>(e.a)];
        ++dl[static_cast<size_t>(e.b)];
    }
    for (auto& v : g.vertices) {
        size_t i = static_cast<size_t>(v.id);
        bool corner = false;
        for (int w : v.witnesses)
            if (g.singulars[static_cast<size_t>(w)].kind == SingularPoint::Kind::Corner) corner = true;
        if (dl[i] + dr[i] <= 1)
            v.kind = VertexKind::Leaf;
        else if (dl[i] == 1 && dr[i] == 1)
            v.kind = corner ? VertexKind::CornerPass : VertexKind::TangencyPass;
        else if (dr[i] > dl[i])
            v.kind = VertexKind::Split;
        else if (dl[i] > dr[i])
            v.kind = VertexKind::Merge;
        else
            v.kind = VertexKind::Split;
    }

    // connected components of the graph
    {
        std::vector<int> comp(g.vertices.size(), -1);
        std::vector<std::vector<int>> adj(g.vertices.size());
        for (const auto& e : g.edges) {
            adj[static_cast<size_t>(e.a)].push_back(e.b);
            adj[static_cast<size_t>(e.b)].push_back(e.a);
        }
        int nc = 0;
        for (size_t v = 0; v < g.vertices.size(); ++v) {
            if (comp[v] >= 0) continue;
            std::vector<int> stack = {static_cast<int>(v)};
            comp[v] = nc;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : adj[static_cast<size_t>(u)])
                    if (comp[static_cast<size_t>(w)] < 0) {
                        comp[static_cast<size_t>(w)] = nc;
                        stack.push_back(w);
                    }
            }
            ++nc;
        }
        for (auto& v : g.vertices) v.component = comp[static_cast<size_t>(v.id)];
        g.component_count = nc;
    }
    return g;
}

/// Forget geometry; abstract tree. Throws HasCycle / logic errors otherwise.
inline Tree as_tree(const ReebGraph& g) {
    if (g.component_count != 1) throw std::runtime_error("as_tree: graph is a forest");
    if (g.edges.size() + 1 != g.vertices.size()) throw HasCycle();
    Tree t;
    t.n = static_cast<int>(g.vertices.size());
    for (const auto& e : g.edges) t.edges.push_back({e.a, e.b});
    return t;
}

}  // namespace parareeb
