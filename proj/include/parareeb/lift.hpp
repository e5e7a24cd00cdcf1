#pragma once

// The periodic two-family parabola arrangement (windowed) and the numeric
// verification of the lifted map e: rank-2 differential on its zero set and
// projection onto the closed region.
//
// Exact parts (arrangement, expected graph shape, window filtering) use the
// kernel; the lift itself is deliberately floating point.

#include <cmath>
#include <random>

#include "parareeb/reeb.hpp"

namespace parareeb {

/// Sign-corrected window arrangement: right-opening families on even centers
/// 0 mod 4 bound the region on the right, left-opening families on centers
/// 2 mod 4 bound it on the left; horizontal clip lines at x2 = ±(4K+2).
/// The affine map (x1,x2) -> (r x1, x2) realizes an arbitrary parabola class.
inline Arrangement theorem2_arrangement(int K, const Rational& r, bool literal_signs = false) {
    if (K < 1) throw std::invalid_argument("theorem2_arrangement: K >= 1");
    if (r <= 0) throw std::invalid_argument("theorem2_arrangement: r > 0");
    Arrangement arr;
    arr.label = "theorem2-K" + std::to_string(K) + (literal_signs ? "-literal" : "");
    Rational half(1, 2);
    if (!literal_signs) {
        for (int c = -4 * K; c <= 4 * K; c += 4)
            arr.halves.push_back({Curve::parabola_x(r, Rational(c), -r * half), true});
        for (int c = -(4 * K + 2); c <= 4 * K + 2; c += 4)
            arr.halves.push_back({Curve::parabola_x(-r, Rational(c), r * half), false});
    } else {
        // families exactly as written: all reduce to right-opening curves
        for (int c = -(4 * K + 2); c <= 4 * K + 2; c += 2)
            arr.halves.push_back({Curve::parabola_x(r, Rational(c), -r * half), true});
    }
    Rational w(4 * K + 2);
    arr.clip.push_back({Curve::line(Rational(0), Rational(-1), w), true});  // y <= 4K+2
    arr.clip.push_back({Curve::line(Rational(0), Rational(1), w), true});   // y >= -(4K+2)
    return arr;
}

/// The abstract caterpillar the K-window graph must realize: splits at -r/2
/// (pendant leaf each at -7r/2), merges at r/2 (pendant leaf at 7r/2),
/// alternating spine, clip-corner pass tails at both ends.
inline Tree expected_theorem2_tree(int K) {
    Tree t;
    auto add = [&]() { return t.n++; };
    std::vector<int> splits, merges;
    for (int m = -K; m <= K; ++m) splits.push_back(add());
    for (int m = -K; m < K; ++m) merges.push_back(add());
    for (size_t i = 0; i < splits.size(); ++i) {
        int leaf = add();
        t.edges.push_back({splits[i], leaf});
    }
    for (size_t i = 0; i < merges.size(); ++i) {
        int leaf = add();
        t.edges.push_back({merges[i], leaf});
    }
    for (size_t i = 0; i < merges.size(); ++i) {
        // spine: S_i - M_i - S_{i+1}
        t.edges.push_back({splits[i], merges[i]});
        t.edges.push_back({merges[i], splits[i + 1]});
    }
    int pbot = add(), rbot = add(), ptop = add(), rtop = add();
    t.edges.push_back({splits.front(), pbot});
    t.edges.push_back({pbot, rbot});
    t.edges.push_back({splits.back(), ptop});
    t.edges.push_back({ptop, rtop});
    return t;
}

/// Witness y of a Reeb vertex (y of its first singular point).
inline Scalar vertex_witness_y(const ReebGraph& g, const ReebVertex& v) {
    return g.singulars[static_cast<size_t>(v.witnesses.front())].point.y;
}

/// Induced subgraph on vertices whose witness |y| <= Y, largest connected
/// component, as an abstract tree. Used for the K / K+1 interior agreement.
inline Tree interior_tree(const ReebGraph& g, const Rational& Y) {
    std::vector<int> keep(g.vertices.size(), -1);
    std::vector<int> ids;
    for (const auto& v : g.vertices) {
        Scalar y = vertex_witness_y(g, v);
        if (scalar_le(y, Scalar(Y)) && scalar_le(Scalar(-Y), y)) {
            keep[static_cast<size_t>(v.id)] = 0;
            ids.push_back(v.id);
        }
    }
    std::vector<std::pair<int, int>> kept_edges;
    for (const auto& e : g.edges)
        if (keep[static_cast<size_t>(e.a)] == 0 && keep[static_cast<size_t>(e.b)] == 0)
            kept_edges.push_back({e.a, e.b});
    // largest connected component
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : kept_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::map<int, int> comp;
    int nc = 0;
    for (int v : ids) {
        if (comp.count(v)) continue;
        std::vector<int> stack = {v};
        comp[v] = nc;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!comp.count(w)) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    std::vector<int> size(static_cast<size_t>(nc), 0);
    for (auto& [v, c] : comp) ++size[static_cast<size_t>(c)];
    int best = 0;
    for (int c = 1; c < nc; ++c)
        if (size[static_cast<size_t>(c)] > size[static_cast<size_t>(best)]) best = c;
    std::map<int, int> relabel;
    Tree t;
    for (int v : ids)
        if (comp[v] == best) relabel[v] = t.n++;
    for (auto [a, b] : kept_edges)
        if (comp[a] == best) t.edges.push_back({relabel[a], relabel[b]});
    if (!tree_is_valid(t)) throw std::runtime_error("interior_tree: filtered graph is not a tree");
    return t;
}

// ---------------------------------------------------------------------------
// Numeric lift
// ---------------------------------------------------------------------------

/// c_{S,k}: window polynomial of family k glued into a C^inf plateau.
/// Family centers: k=0 -> 8Z, k=1 -> 8Z+4 (right-opening, u^2 - 1/2,
/// plateau +6); k=2 -> 8Z+2, k=3 -> 8Z+6 (left-opening, 1/2 - u^2,
/// plateau -6).
inline double eval_c(int k, double x2) {
    static const double offset[4] = {0.0, 4.0, 2.0, 6.0};
    bool upper = (k == 0 || k == 1);
    double o = offset[k & 3];
    double j = std::round((x2 - o) / 8.0);
    double u = x2 - o - 8.0 * j;
    double au = std::fabs(u);
    double poly = upper ? (u * u - 0.5) : (0.5 - u * u);
    double plateau = upper ? 6.0 : -6.0;
    if (au <= 2.5) return poly;
    if (au >= 3.0) return plateau;
    auto sigma = [](double t) { return t > 0 ? std::exp(-1.0 / t) : 0.0; };
    double t = (au - 2.5) * 2.0;
    double s = sigma(t) / (sigma(t) + sigma(1.0 - t));
    return (1.0 - s) * poly + s * plateau;
}

/// Derivative of eval_c (analytic inside the pure polynomial windows only;
/// test helper).
inline double eval_c_prime_window(int k, double x2) {
    static const double offset[4] = {0.0, 4.0, 2.0, 6.0};
    bool upper = (k == 0 || k == 1);
    double o = offset[k & 3];
    double j = std::round((x2 - o) / 8.0);
    double u = x2 - o - 8.0 * j;
    return upper ? 2.0 * u : -2.0 * u;
}

/// e(x1, x2, y) = (w1, w2); pairing mixes one right-opening and one
/// left-opening family per component so that {w1 >= 0, w2 >= 0} cuts out
/// exactly the region slices.
inline std::pair<double, double> eval_e(int m, const std::vector<double>& p) {
    if (m < 3) throw std::invalid_argument("eval_e: m >= 3");
    if (static_cast<int>(p.size()) != m + 2) throw std::invalid_argument("eval_e: bad point size");
    double x1 = p[0], x2 = p[1];
    double w1 = (eval_c(1, x2) - x1) * (x1 - eval_c(3, x2)) - p[2] * p[2];
    double sum = 0;
    for (int j = 1; j < m; ++j) sum += p[static_cast<size_t>(2 + j)] * p[static_cast<size_t>(2 + j)];
    double w2 = (eval_c(2, x2) - x1) * (x1 - eval_c(0, x2)) - sum;
    return {w1, w2};
}

struct LiftSample {
    std::vector<double> p;
    int boundary_case;  // 0 interior (2-1), 1 one factor zero (2-2), 2 corner (2-3)
};

struct EmptyRegion : std::runtime_error {
    EmptyRegion() : std::runtime_error("rejection sampling found no region points") {}
};

/// Seeded samples on the zero set of e over the K-window; includes forced
/// boundary samples of Cases 2-2 and 2-3.
inline std::vector<LiftSample> sample_zero_set(int m, int N, unsigned seed, int K = 2,
                                               int* skipped = nullptr) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux1(-4.0, 4.0);
    std::uniform_real_distribution<double> ux2(-(4.0 * K + 2.0), 4.0 * K + 2.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<LiftSample> out;
    int skip = 0;
    long attempts = 0;
    auto push_point = [&](double x1, double x2, int bcase) {
        double pr1 = (eval_c(1, x2) - x1) * (x1 - eval_c(3, x2));
        double pr2 = (eval_c(2, x2) - x1) * (x1 - eval_c(0, x2));
        if (pr1 < 0 || pr2 < 0) {
            ++skip;
            return false;
        }
        std::vector<double> p(static_cast<size_t>(m + 2), 0.0);
        p[0] = x1;
        p[1] = x2;
        double s1 = std::sqrt(pr1);
        p[2] = (rng() & 1) ? s1 : -s1;
        // distribute pr2 over a random direction in the remaining m-1 coords
        std::vector<double> dir(static_cast<size_t>(m - 1));
        double norm = 0;
        for (auto& d : dir) {
            d = gauss(rng);
            norm += d * d;
        }
        norm = std::sqrt(norm);
        if (norm == 0) {
            dir[0] = 1;
            norm = 1;
        }
        double s2 = std::sqrt(pr2);
        for (int j = 0; j < m - 1; ++j) p[static_cast<size_t>(3 + j)] = s2 * dir[static_cast<size_t>(j)] / norm;
        out.push_back({std::move(p), bcase});
        return true;
    };

    // forced boundary samples: corners (Case 2-3) and on-curve points (2-2)
    for (int mm = -K; mm < K && static_cast<int>(out.size()) < N; ++mm) {
        push_point(3.5, 4.0 * mm + 2.0, 2);   // right corners
        push_point(-3.5, 4.0 * mm, 2);        // left corners
    }
    for (int j = -K; j <= K && static_cast<int>(out.size()) < N; ++j) {
        double y0 = 8.0 * j;  // right-family apexes
        if (std::fabs(y0) <= 4.0 * K) push_point(-0.5, y0, 1);
        double y1 = 8.0 * j + 2.0;  // left-family apexes
        if (std::fabs(y1) <= 4.0 * K + 2.0) push_point(0.5, y1, 1);
    }

    while (static_cast<int>(out.size()) < N) {
        if (++attempts > 1000L * N) throw EmptyRegion();
        double x1 = ux1(rng), x2 = ux2(rng);
        // float screen with a margin comfortably above the later rational
        // rounding, so random samples stay strictly interior
        double up = std::min(eval_c(0, x2), eval_c(1, x2));
        double lo = std::max(eval_c(2, x2), eval_c(3, x2));
        if (x1 < lo + 1e-5 || x1 > up - 1e-5) continue;
        if (std::fabs(x2) > 4.0 * K + 2.0 - 1e-5) continue;
        push_point(x1, x2, 0);
    }
    if (skipped) *skipped = skip;
    return out;
}

struct RankVerdict {
    double sigma1, sigma2;
    bool rank2;
};

/// Central-difference Jacobian of e at the point; rank-2 iff
/// sigma2/sigma1 > 1e-6.
template <typename EvalFn>
inline RankVerdict rank_check_fn(int m, const std::vector<double>& p, double h, EvalFn&& f) {
    size_t n = static_cast<size_t>(m + 2);
    std::vector<std::array<double, 2>> J(n);
    for (size_t j = 0; j < n; ++j) {
        std::vector<double> pp = p, pm = p;
        pp[j] += h;
        pm[j] -= h;
        auto [a1, a2] = f(m, pp);
        auto [b1, b2] = f(m, pm);
        J[j] = {(a1 - b1) / (2 * h), (a2 - b2) / (2 * h)};
    }
    // singular values of the 2 x n matrix via J J^T (2x2 symmetric)
    double a = 0, b = 0, c = 0;
    for (size_t j = 0; j < n; ++j) {
        a += J[j][0] * J[j][0];
        b += J[j][0] * J[j][1];
        c += J[j][1] * J[j][1];
    }
    double tr = a + c, det = a * c - b * b;
    double disc = std::sqrt(std::max(0.0, tr * tr - 4 * det));
    double l1 = (tr + disc) / 2, l2 = (tr - disc) / 2;
    double s1 = std::sqrt(std::max(0.0, l1)), s2 = std::sqrt(std::max(0.0, l2));
    bool ok = s1 > 0 && s2 / s1 > 1e-6;
    return {s1, s2, ok};
}

inline RankVerdict rank_check(int m, const std::vector<double>& p, double h) {
    return rank_check_fn(m, p, h, [](int mm, const std::vector<double>& q) { return eval_e(mm, q); });
}

/// Degenerate control map: all c's constant. Its zero-set points are rank
/// deficient; the checker must flag them.
inline std::pair<double, double> eval_e_degenerate(int m, const std::vector<double>& p) {
    double x1 = p[0];
    double w1 = (6.0 - x1) * (x1 - 6.0) - p[2] * p[2];
    double sum = 0;
    for (int j = 1; j < m; ++j) sum += p[static_cast<size_t>(2 + j)] * p[static_cast<size_t>(2 + j)];
    double w2 = (6.0 - x1) * (x1 - 6.0) - sum;
    return {w1, w2};
}

struct ProjectionReport {
    double membership_fraction = 1.0;  // trivially 1 for an empty sample list
    double coverage = 0.0;
};

/// Exact membership of every projected sample in the window region, plus
/// grid coverage of the region at radius eps around the projections.
inline ProjectionReport verify_projection(int /*m*/, const std::vector<LiftSample>& samples,
                                          int K = 2, double eps = 0.1) {
    ProjectionReport rep;
    if (samples.empty()) return rep;
    Arrangement window = theorem2_arrangement(K, Rational(1));
    int member_ok = 0;
    for (const auto& s : samples) {
        Rational qx(static_cast<long long>(std::llround(s.p[0] * (1 << 20))), 1 << 20);
        Rational qy(static_cast<long long>(std::llround(s.p[1] * (1 << 20))), 1 << 20);
        bool member = classify(window, qx, qy).cls != PointClass::Exterior;
        if (!member && s.boundary_case > 0) {
            for (int dx = -1; dx <= 1 && !member; ++dx)
                for (int dy = -1; dy <= 1 && !member; ++dy) {
                    auto c2 = classify(window, qx + Rational(dx, 1 << 18), qy + Rational(dy, 1 << 18));
                    if (c2.cls != PointClass::Exterior) member = true;
                }
        }
        if (member) ++member_ok;
    }
    rep.membership_fraction = static_cast<double>(member_ok) / static_cast<double>(samples.size());

    std::vector<std::pair<double, double>> proj;
    proj.reserve(samples.size());
    for (const auto& s : samples) proj.push_back({s.p[0], s.p[1]});
    double ymax = 4.0 * K + 2.0;
    int nx = 71, ny = static_cast<int>(ymax * 20) + 1;
    int in_region = 0, covered = 0;
    for (int ix = 0; ix < nx; ++ix) {
        double gx = -3.5 + 7.0 * ix / (nx - 1);
        for (int iy = 0; iy < ny; ++iy) {
            double gy = -ymax + 2 * ymax * iy / (ny - 1);
            double up = std::min(eval_c(0, gy), eval_c(1, gy));
            double lo = std::max(eval_c(2, gy), eval_c(3, gy));
            if (gx < lo || gx > up) continue;
            ++in_region;
            for (const auto& [px, py] : proj) {
                double dx = px - gx, dy = py - gy;
                if (dx * dx + dy * dy <= eps * eps) {
                    ++covered;
                    break;
                }
            }
        }
    }
    rep.coverage = in_region ? static_cast<double>(covered) / in_region : 0.0;
    return rep;
}

struct LiftReport {
    int samples = 0;
    double rank2_fraction = 0;
    double membership_fraction = 0;
    double coverage = 0;
    double skip_rate = 0;
    double max_residual = 0;
    unsigned seed = 0;
    bool negative_control_flagged = false;
};

/// Full verification: residuals, rank at every sample, exact membership of
/// the projections, and grid coverage of the window region at radius eps.
inline LiftReport verify_lift(int m, int N, unsigned seed, double h = 1e-5, int K = 2,
                              double eps = 0.1) {
    LiftReport rep;
    rep.seed = seed;
    int skipped = 0;
    auto samples = sample_zero_set(m, N, seed, K, &skipped);
    rep.samples = static_cast<int>(samples.size());
    rep.skip_rate = static_cast<double>(skipped) / (skipped + static_cast<double>(samples.size()));

    int rank_ok = 0;
    for (const auto& s : samples) {
        auto [w1, w2] = eval_e(m, s.p);
        rep.max_residual = std::max({rep.max_residual, std::fabs(w1), std::fabs(w2)});
        if (rank_check(m, s.p, h).rank2) ++rank_ok;
    }
    rep.rank2_fraction = static_cast<double>(rank_ok) / rep.samples;
    ProjectionReport proj = verify_projection(m, samples, K, eps);
    rep.membership_fraction = proj.membership_fraction;
    rep.coverage = proj.coverage;

    // negative control: the degenerate map must be flagged rank deficient
    {
        std::vector<double> p(static_cast<size_t>(m + 2), 0.0);
        p[0] = 6.0;
        auto v = rank_check_fn(m, p, h, [](int mm, const std::vector<double>& q) {
            return eval_e_degenerate(mm, q);
        });
        rep.negative_control_flagged = !v.rank2;
    }
    return rep;
}

}  // namespace parareeb
