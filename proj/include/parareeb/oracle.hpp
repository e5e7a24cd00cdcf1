#pragma once

// Independent floating-point raster oracle: per-column membership sampling,
// interval tracking across columns, chain contraction to an abstract graph.
// Deliberately avoids every exact predicate of the kernel.

#include <cmath>
#include <string>
#include <vector>

#include "parareeb/reeb.hpp"

namespace parareeb {

struct RasterGraph {
    Tree tree;            // contracted abstract structure (valid iff is_tree)
    bool is_tree = false;
    int columns = 0;
    int stable_at = 0;    // resolution at which the code stabilized
    double ambiguous_fraction = 0.0;
    std::string note;
};

namespace raster_detail {

struct Interval {
    int lo, hi;  // sample row indices, inclusive
    int node = -1;
};

struct Box {
    double x0, x1, y0, y1;
};

inline Box initial_box(const Arrangement& arr) {
    double x0 = 1e30, x1 = -1e30, y0 = 1e30, y1 = -1e30;
    auto grow = [&](double x, double y) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    };
    for (const auto& h : arr.all()) {
        const Curve& c = h.curve;
        double p1 = rat_to_double(c.p1), p2 = rat_to_double(c.p2), p3 = rat_to_double(c.p3);
        switch (c.kind) {
            case CurveKind::Line:
                if (p1 == 0 && p2 != 0)
                    grow(0, -p3 / p2);
                else if (p2 == 0 && p1 != 0)
                    grow(-p3 / p1, 0);
                break;
            case CurveKind::ParabolaX: grow(p3, p2); break;
            case CurveKind::ParabolaY: grow(p2, p3); break;
            case CurveKind::Circle: {
                double r = std::sqrt(p3);
                grow(p1 - r, p2 - r);
                grow(p1 + r, p2 + r);
                break;
            }
        }
    }
    if (x0 > x1) {
        x0 = -1;
        x1 = 1;
        y0 = -1;
        y1 = 1;
    }
    double mx = std::max(1.0, (x1 - x0) * 0.5), my = std::max(1.0, (y1 - y0) * 0.5);
    return {x0 - mx, x1 + mx, y0 - my, y1 + my};
}

}  // namespace raster_detail

/// Raster sweep at the given resolution. Throws Unbounded when the region
/// keeps leaking out of a growing bounding box.
inline RasterGraph raster_reeb(const Arrangement& arr, int nx, int ny) {
    using namespace raster_detail;
    if (nx < 64 || ny < 64) throw std::invalid_argument("raster_reeb: nx, ny >= 64");
    auto halves = arr.all();
    struct FCurve {
        CurveKind kind;
        double p1, p2, p3, s;
    };
    std::vector<FCurve> sides;
    for (const auto& h : halves)
        sides.push_back({h.curve.kind, rat_to_double(h.curve.p1), rat_to_double(h.curve.p2),
                         rat_to_double(h.curve.p3), static_cast<double>(h.region_sign())});
    auto feval = [](const FCurve& c, double x, double y) {
        switch (c.kind) {
            case CurveKind::Line: return c.p1 * x + c.p2 * y + c.p3;
            case CurveKind::ParabolaX: return c.p1 * (y - c.p2) * (y - c.p2) + c.p3 - x;
            case CurveKind::ParabolaY: return c.p1 * (x - c.p2) * (x - c.p2) + c.p3 - y;
            case CurveKind::Circle:
                return c.p3 - (x - c.p1) * (x - c.p1) - (y - c.p2) * (y - c.p2);
        }
        return 0.0;
    };

    Box box = initial_box(arr);
    RasterGraph out;
    for (int attempt = 0; attempt < 6; ++attempt) {
        long ambiguous = 0;
        std::vector<std::vector<Interval>> cols(static_cast<size_t>(nx));
        bool leaked = false;
        for (int ix = 0; ix < nx && !leaked; ++ix) {
            double x = box.x0 + (box.x1 - box.x0) * (ix + 0.5) / nx;
            auto& col = cols[static_cast<size_t>(ix)];
            int run_start = -1;
            for (int iy = 0; iy < ny; ++iy) {
                double y = box.y0 + (box.y1 - box.y0) * (iy + 0.5) / ny;
                bool in = true;
                for (const auto& c : sides) {
                    double f = c.s * feval(c, x, y);
                    if (std::fabs(f) < 1e-9) ++ambiguous;
                    if (f <= 0) {
                        in = false;
                        break;
                    }
                }
                if (in && run_start < 0) run_start = iy;
                if (!in && run_start >= 0) {
                    col.push_back({run_start, iy - 1});
                    run_start = -1;
                }
                if (in && (ix == 0 || ix == nx - 1 || iy == 0 || iy == ny - 1)) leaked = true;
            }
            if (run_start >= 0) col.push_back({run_start, ny - 1});
        }
        if (leaked) {
            double cx = (box.x0 + box.x1) / 2, cy = (box.y0 + box.y1) / 2;
            double wx = box.x1 - box.x0, wy = box.y1 - box.y0;
            box = {cx - wx, cx + wx, cy - wy, cy + wy};
            if (attempt == 5) throw Unbounded();
            continue;
        }
        out.ambiguous_fraction = static_cast<double>(ambiguous) / (static_cast<double>(nx) * ny);

        // node ids
        int n = 0;
        for (auto& col : cols)
            for (auto& iv : col) iv.node = n++;
        if (n == 0) {
            out.note = "empty raster";
            out.is_tree = false;
            return out;
        }
        // adjacency by row overlap in consecutive columns
        std::vector<std::vector<int>> left(static_cast<size_t>(n)), right(static_cast<size_t>(n));
        for (int ix = 0; ix + 1 < nx; ++ix) {
            for (const auto& a : cols[static_cast<size_t>(ix)]) {
                for (const auto& b : cols[static_cast<size_t>(ix + 1)]) {
                    if (a.lo <= b.hi && b.lo <= a.hi) {
                        right[static_cast<size_t>(a.node)].push_back(b.node);
                        left[static_cast<size_t>(b.node)].push_back(a.node);
                    }
                }
            }
        }
        // contract chains: keep nodes whose (left,right) counts differ from (1,1)
        std::vector<int> keep_id(static_cast<size_t>(n), -1);
        int kept = 0;
        for (int v = 0; v < n; ++v)
            if (left[static_cast<size_t>(v)].size() != 1 || right[static_cast<size_t>(v)].size() != 1)
                keep_id[static_cast<size_t>(v)] = kept++;
        Tree t;
        t.n = kept;
        bool simple = true;
        for (int v = 0; v < n; ++v) {
            if (keep_id[static_cast<size_t>(v)] < 0) continue;
            // walk right from each kept node
            for (int start : right[static_cast<size_t>(v)]) {
                int prev = v, cur = start;
                while (keep_id[static_cast<size_t>(cur)] < 0) {
                    int nxt = right[static_cast<size_t>(cur)].empty() ? -1 : right[static_cast<size_t>(cur)][0];
                    if (nxt < 0) {
                        simple = false;
                        break;
                    }
                    prev = cur;
                    cur = nxt;
                }
                (void)prev;
                if (keep_id[static_cast<size_t>(cur)] >= 0)
                    t.edges.push_back({keep_id[static_cast<size_t>(v)], keep_id[static_cast<size_t>(cur)]});
            }
        }
        out.columns = nx;
        out.tree = t;
        out.is_tree = simple && tree_is_valid(t);
        if (!out.is_tree) out.note = "raster graph is not a tree";
        // excessive boundary ambiguity: caller should escalate resolution
        if (out.ambiguous_fraction > 0.01) out.note = "ambiguous";
        return out;
    }
    throw Unbounded();
}

struct AgreeVerdict {
    bool agree = false;
    std::string diagnostics;
};

/// Compare the exact graph and the raster graph on smoothed trees (the
/// raster cannot see degree-2 pass vertices, which change no interval count).
inline AgreeVerdict agree(const ReebGraph& exact, const RasterGraph& raster) {
    AgreeVerdict v;
    if (!raster.is_tree) {
        v.diagnostics = "raster: " + raster.note;
        return v;
    }
    Tree et;
    try {
        et = as_tree(exact);
    } catch (const std::exception& e) {
        v.diagnostics = std::string("exact graph: ") + e.what();
        return v;
    }
    std::string ec = et.n >= 3 ? canonical_code(smooth_tree(et).core) : canonical_code(et);
    std::string rc = raster.tree.n >= 3 ? canonical_code(smooth_tree(raster.tree).core)
                                        : canonical_code(raster.tree);
    v.agree = ec == rc;
    if (!v.agree) v.diagnostics = "codes differ: exact " + ec + " vs raster " + rc;
    return v;
}

/// Raster at doubling resolutions until two consecutive codes match.
inline RasterGraph raster_reeb_stable(const Arrangement& arr, int nx0 = 256, int ny0 = 256,
                                      int max_doublings = 3) {
    RasterGraph prev = raster_reeb(arr, nx0, ny0);
    int nx = nx0, ny = ny0;
    for (int i = 0; i < max_doublings; ++i) {
        nx *= 2;
        ny *= 2;
        RasterGraph next = raster_reeb(arr, nx, ny);
        bool same = prev.is_tree && next.is_tree &&
                    canonical_code(prev.tree) == canonical_code(next.tree);
        if (same && next.ambiguous_fraction <= 0.01) {
            next.stable_at = nx;
            return next;
        }
        prev = std::move(next);
    }
    prev.stable_at = 0;  // not stabilized
    return prev;
}

}  // namespace parareeb
