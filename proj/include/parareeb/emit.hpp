#pragma once

// Deterministic artifact emission: DOT, JSON, SVG with curve overlay.

#include <cstdio>
#include <sstream>

#include "parareeb/io.hpp"

namespace parareeb {

inline std::string emit_dot(const ReebGraph& g) {
    std::ostringstream os;
    os << "graph reeb {\n";
    os << "  rankdir=LR;\n";
    for (const auto& v : g.vertices) {
        os << "  n" << v.id << " [label=\"" << vertex_kind_name(v.kind) << "\\nx=";
        if (is_rational(v.x))
            os << rat_to_string(as_rational(v.x));
        else {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f", scalar_to_double(v.x));
            os << buf;
        }
        os << "\"];\n";
    }
    for (const auto& e : g.edges) os << "  n" << e.a << " -- n" << e.b << ";\n";
    os << "}\n";
    return os.str();
}

inline std::string emit_graph_json(const ReebGraph& g, bool oracle_flag = false) {
    return graph_to_json(g, oracle_flag).dump(2) + "\n";
}

namespace emit_detail {

struct FBox {
    double x0, x1, y0, y1;
};

inline FBox region_bbox(const Arrangement& arr) {
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
                if (c.p1 == 0) grow(0, -p3 / p2);
                else if (c.p2 == 0) grow(-p3 / p1, 0);
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
    if (x0 > x1) return {-1, 1, -1, 1};
    double mx = std::max(0.75, (x1 - x0) * 0.25), my = std::max(0.75, (y1 - y0) * 0.25);
    return {x0 - mx, x1 + mx, y0 - my, y1 + my};
}

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace emit_detail

/// SVG with curves, region shading and the graph overlay (vertices at the
/// contour midpoint). Byte-deterministic for identical inputs.
inline std::string emit_svg(const ReebGraph& g, const Arrangement& arr, int width = 720,
                            int height = 540) {
    using namespace emit_detail;
    FBox b = region_bbox(arr);
    auto X = [&](double x) { return (x - b.x0) / (b.x1 - b.x0) * width; };
    auto Y = [&](double y) { return height - (y - b.y0) / (b.y1 - b.y0) * height; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // region shading: coarse grid membership
    auto halves = arr.all();
    {
        const int gx = 160, gy = 120;
        double cw = static_cast<double>(width) / gx, ch = static_cast<double>(height) / gy;
        os << "<g fill=\"#b8d8f0\" stroke=\"none\">\n";
        for (int i = 0; i < gx; ++i) {
            for (int j = 0; j < gy; ++j) {
                double px = b.x0 + (b.x1 - b.x0) * (i + 0.5) / gx;
                double py = b.y0 + (b.y1 - b.y0) * (j + 0.5) / gy;
                bool in = true;
                for (const auto& h : halves)
                    if (h.region_sign() * implicit_eval_d(h.curve, px, py) <= 0) {
                        in = false;
                        break;
                    }
                if (!in) continue;
                os << "<rect x=\"" << fmt(X(px) - cw / 2) << "\" y=\"" << fmt(Y(py) - ch / 2)
                   << "\" width=\"" << fmt(cw) << "\" height=\"" << fmt(ch) << "\"/>\n";
            }
        }
        os << "</g>\n";
    }

    // one path per curve
    for (const auto& h : halves) {
        const Curve& c = h.curve;
        double p1 = rat_to_double(c.p1), p2 = rat_to_double(c.p2), p3 = rat_to_double(c.p3);
        const int steps = 240;
        os << "<path fill=\"none\" stroke=\"#333333\" stroke-width=\"1.2\" d=\"";
        bool first = true;
        auto emit_pt = [&](double x, double y) {
            os << (first ? "M" : " L") << fmt(X(x)) << " " << fmt(Y(y));
            first = false;
        };
        switch (c.kind) {
            case CurveKind::Line: {
                if (c.p2 != 0) {
                    for (int i = 0; i <= steps; ++i) {
                        double x = b.x0 + (b.x1 - b.x0) * i / steps;
                        emit_pt(x, (-p3 - p1 * x) / p2);
                    }
                } else {
                    double x = -p3 / p1;
                    emit_pt(x, b.y0);
                    emit_pt(x, b.y1);
                }
                break;
            }
            case CurveKind::ParabolaX:
                for (int i = 0; i <= steps; ++i) {
                    double y = b.y0 + (b.y1 - b.y0) * i / steps;
                    emit_pt(p1 * (y - p2) * (y - p2) + p3, y);
                }
                break;
            case CurveKind::ParabolaY:
                for (int i = 0; i <= steps; ++i) {
                    double x = b.x0 + (b.x1 - b.x0) * i / steps;
                    emit_pt(x, p1 * (x - p2) * (x - p2) + p3);
                }
                break;
            case CurveKind::Circle: {
                double r = std::sqrt(p3);
                for (int i = 0; i <= steps; ++i) {
                    double th = 2 * 3.14159265358979323846 * i / steps;
                    emit_pt(p1 + r * std::cos(th), p2 + r * std::sin(th));
                }
                break;
            }
        }
        os << "\"/>\n";
    }

    // graph overlay
    std::vector<std::pair<double, double>> pos(g.vertices.size());
    for (const auto& v : g.vertices) {
        double x = scalar_to_double(v.x);
        double y = (scalar_to_double(v.span_lo) + scalar_to_double(v.span_hi)) / 2;
        pos[static_cast<size_t>(v.id)] = {x, y};
    }
    os << "<g stroke=\"#c03020\" stroke-width=\"2\">\n";
    for (const auto& e : g.edges) {
        auto [xa, ya] = pos[static_cast<size_t>(e.a)];
        auto [xb, yb] = pos[static_cast<size_t>(e.b)];
        os << "<line x1=\"" << fmt(X(xa)) << "\" y1=\"" << fmt(Y(ya)) << "\" x2=\"" << fmt(X(xb))
           << "\" y2=\"" << fmt(Y(yb)) << "\"/>\n";
    }
    os << "</g>\n<g fill=\"#c03020\">\n";
    for (const auto& v : g.vertices) {
        auto [x, y] = pos[static_cast<size_t>(v.id)];
        os << "<circle cx=\"" << fmt(X(x)) << "\" cy=\"" << fmt(Y(y)) << "\" r=\"4\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace parareeb
