#pragma once

// JSON schemas: arrangements (bit-exact rational round trip) and graphs.

#include <json.hpp>

#include "parareeb/reeb.hpp"

namespace parareeb {

using Json = nlohmann::ordered_json;

inline Json scalar_to_json(const Scalar& s) {
    if (is_rational(s)) return Json(rat_to_string(as_rational(s)));
    Json j;
    if (std::holds_alternative<QuadNum>(s)) {
        const QuadNum& q = std::get<QuadNum>(s);
        UniPoly def = detail::quad_defining(q);
        auto iv = q.interval(24);
        Json poly = Json::array();
        for (const auto& c : def.c) poly.push_back(rat_to_string(c));
        j["poly"] = poly;
        j["lo"] = rat_to_string(iv.first);
        j["hi"] = rat_to_string(iv.second);
        return j;
    }
    const AlgebraicNumber& a = std::get<AlgebraicNumber>(s);
    Json poly = Json::array();
    for (const auto& c : a.defining.c) poly.push_back(rat_to_string(c));
    j["poly"] = poly;
    j["lo"] = rat_to_string(a.lo);
    j["hi"] = rat_to_string(a.hi);
    return j;
}

inline Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar(rat_from_string(j.get<std::string>()));
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("poly")) coeffs.push_back(rat_from_string(c.get<std::string>()));
    UniPoly p(std::move(coeffs));
    Rational lo = rat_from_string(j.at("lo").get<std::string>());
    Rational hi = rat_from_string(j.at("hi").get<std::string>());
    return make_algebraic(p, {lo, hi, 1});
}

inline Json half_to_json(const HalfRegion& h) {
    Json j;
    const Curve& c = h.curve;
    switch (c.kind) {
        case CurveKind::Line:
            j["type"] = "line";
            j["alpha"] = rat_to_string(c.p1);
            j["beta"] = rat_to_string(c.p2);
            j["gamma"] = rat_to_string(c.p3);
            break;
        case CurveKind::ParabolaX:
            j["type"] = "parabola_x";
            j["a"] = rat_to_string(c.p1);
            j["v"] = rat_to_string(c.p2);
            j["u"] = rat_to_string(c.p3);
            break;
        case CurveKind::ParabolaY:
            j["type"] = "parabola_y";
            j["a"] = rat_to_string(c.p1);
            j["h"] = rat_to_string(c.p2);
            j["k"] = rat_to_string(c.p3);
            break;
        case CurveKind::Circle:
            j["type"] = "circle";
            j["cx"] = rat_to_string(c.p1);
            j["cy"] = rat_to_string(c.p2);
            j["r2"] = rat_to_string(c.p3);
            break;
    }
    j["region_side"] = h.f_positive ? "f_positive" : "f_negative";
    return j;
}

inline HalfRegion half_from_json(const Json& j) {
    std::string type = j.at("type").get<std::string>();
    auto r = [&](const char* k) { return rat_from_string(j.at(k).get<std::string>()); };
    Curve c = [&] {
        if (type == "line") return Curve::line(r("alpha"), r("beta"), r("gamma"));
        if (type == "parabola_x") return Curve::parabola_x(r("a"), r("v"), r("u"));
        if (type == "parabola_y") return Curve::parabola_y(r("a"), r("h"), r("k"));
        if (type == "circle") return Curve::circle(r("cx"), r("cy"), r("r2"));
        throw std::invalid_argument("unknown curve type: " + type);
    }();
    std::string side = j.value("region_side", "f_positive");
    if (side != "f_positive" && side != "f_negative")
        throw std::invalid_argument("bad region_side: " + side);
    return {c, side == "f_positive"};
}

inline Json arrangement_to_json(const Arrangement& arr) {
    Json j;
    j["label"] = arr.label;
    Json curves = Json::array();
    for (const auto& h : arr.halves) curves.push_back(half_to_json(h));
    j["curves"] = curves;
    if (!arr.clip.empty()) {
        Json clip = Json::array();
        for (const auto& h : arr.clip) clip.push_back(half_to_json(h));
        j["clip"] = clip;
    }
    return j;
}

inline Arrangement arrangement_from_json(const Json& j) {
    Arrangement arr;
    arr.label = j.value("label", "");
    for (const auto& cj : j.at("curves")) arr.halves.push_back(half_from_json(cj));
    if (j.contains("clip"))
        for (const auto& cj : j.at("clip")) arr.clip.push_back(half_from_json(cj));
    return arr;
}

inline Json graph_to_json(const ReebGraph& g, bool oracle_flag = false) {
    Json j;
    j["label"] = g.label;
    if (oracle_flag) j["oracle"] = true;
    Json vs = Json::array();
    for (const auto& v : g.vertices) {
        Json vj;
        vj["id"] = v.id;
        vj["x"] = scalar_to_json(v.x);
        vj["kind"] = vertex_kind_name(v.kind);
        vj["component"] = v.component;
        vs.push_back(vj);
    }
    j["vertices"] = vs;
    Json es = Json::array();
    for (const auto& e : g.edges) es.push_back(Json::array({e.a, e.b}));
    j["edges"] = es;
    return j;
}

/// Abstract tree as graph JSON (used for the raster oracle; flagged).
inline Json tree_graph_to_json(const Tree& t, bool oracle_flag) {
    Json j;
    if (oracle_flag) j["oracle"] = true;
    Json vs = Json::array();
    for (int v = 0; v < t.n; ++v) {
        Json vj;
        vj["id"] = v;
        vs.push_back(vj);
    }
    j["vertices"] = vs;
    Json es = Json::array();
    for (const auto& e : t.edges) es.push_back(Json::array({e.first, e.second}));
    j["edges"] = es;
    return j;
}

/// Minimal parse back (schema check + abstract structure).
inline std::pair<std::vector<std::pair<int, std::string>>, std::vector<std::pair<int, int>>>
graph_from_json(const Json& j) {
    std::vector<std::pair<int, std::string>> vertices;
    for (const auto& vj : j.at("vertices")) {
        vertices.push_back({vj.at("id").get<int>(), vj.at("kind").get<std::string>()});
        (void)scalar_from_json(vj.at("x"));  // must parse
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& ej : j.at("edges")) edges.push_back({ej.at(0).get<int>(), ej.at(1).get<int>()});
    return {vertices, edges};
}

}  // namespace parareeb
