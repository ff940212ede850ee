#pragma once

#include "tropcurve/construction.hpp"
#include "tropcurve/embedding.hpp"
#include "tropcurve/resolution.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropcurve {

using nlohmann::json;

inline constexpr const char* kStateSchema = "tropcurve-state/1";
inline constexpr const char* kEmbeddingSchema = "tropcurve-embedding/1";
inline constexpr const char* kRunSchema = "tropcurve-run/1";

// ---------------------------------------------------------------------------
// rationals

inline json rat_json(const Rat& r) { return rat_str(r); }
inline Rat rat_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
    return parse_rat(j.get<std::string>());
}
inline json int_json(const Int& v) { return int_str(v); }
inline Int int_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("integer must be a decimal string");
    return parse_int(j.get<std::string>());
}

inline json rat_vec_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_json(x));
    return a;
}
inline std::vector<Rat> rat_vec_from_json(const json& j) {
    std::vector<Rat> v;
    for (const json& x : j) v.push_back(rat_from_json(x));
    return v;
}
inline json int_vec_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_json(x));
    return a;
}
inline std::vector<Int> int_vec_from_json(const json& j) {
    std::vector<Int> v;
    for (const json& x : j) v.push_back(int_from_json(x));
    return v;
}

// ---------------------------------------------------------------------------
// graph

inline json graph_json(const MetricGraph& g) {
    json edges = json::array();
    for (const GraphEdge& e : g.edges)
        edges.push_back({{"id", e.id}, {"ends", {e.u, e.w}}, {"length", rat_json(e.length)}});
    return {{"vertices", g.vertices}, {"edges", edges}};
}

inline MetricGraph graph_from_json(const json& j) {
    if (!j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph needs \"vertices\" and \"edges\"");
    std::vector<std::string> vs = j.at("vertices").get<std::vector<std::string>>();
    std::vector<GraphEdge> es;
    for (const json& je : j.at("edges")) {
        GraphEdge e;
        e.id = je.at("id").get<std::string>();
        e.u = je.at("ends").at(0).get<std::string>();
        e.w = je.at("ends").at(1).get<std::string>();
        e.length = rat_from_json(je.at("length"));
        es.push_back(std::move(e));
    }
    return build_graph(std::move(vs), std::move(es));
}

// ---------------------------------------------------------------------------
// points, divisors, functions

inline json point_json(const GraphPoint& p) {
    if (p.at_vertex) return {{"vertex", p.vertex}};
    return {{"edge", p.edge}, {"offset", rat_json(p.offset)}};
}
inline GraphPoint point_from_json(const json& j) {
    if (j.contains("vertex")) return GraphPoint::on_vertex(j.at("vertex").get<std::string>());
    return GraphPoint::on_edge(j.at("edge").get<std::string>(), rat_from_json(j.at("offset")));
}

inline json divisor_json(const Divisor& d) {
    json a = json::array();
    for (const auto& [p, c] : d.coeffs) a.push_back({{"point", point_json(p)}, {"coeff", int_json(c)}});
    return a;
}
inline Divisor divisor_from_json(const MetricGraph& g, const json& j) {
    Divisor d;
    for (const json& t : j) d.add(canonical(g, point_from_json(t.at("point"))), int_from_json(t.at("coeff")));
    return d;
}

inline json pl_json(const PLFunction& f) {
    json edges = json::object();
    for (const auto& [eid, samples] : f.edge_samples) {
        json a = json::array();
        for (const auto& [o, v] : samples) a.push_back({rat_json(o), rat_json(v)});
        edges[eid] = a;
    }
    json verts = json::object();
    for (const auto& [v, val] : f.vertex_values) verts[v] = rat_json(val);
    return {{"vertices", verts}, {"edges", edges}};
}
inline PLFunction pl_from_json(const MetricGraph& g, const json& j) {
    PLFunction f;
    for (const auto& [v, val] : j.at("vertices").items()) f.vertex_values[v] = rat_from_json(val);
    for (const auto& [eid, samples] : j.at("edges").items()) {
        std::vector<std::pair<Rat, Rat>> s;
        for (const json& pv : samples) s.push_back({rat_from_json(pv.at(0)), rat_from_json(pv.at(1))});
        f.edge_samples[eid] = std::move(s);
    }
    validate(g, f);
    return f;
}

// ---------------------------------------------------------------------------
// parameters

inline json params_json(const ParameterSet& ps) {
    json edges = json::object();
    for (const auto& [eid, ep] : ps.edges)
        edges[eid] = {{"v", ep.v_end},         {"w", ep.w_end},       {"c", rat_json(ep.c)},
                      {"a", rat_json(ep.a)},   {"p", rat_json(ep.p)}, {"q", rat_json(ep.q)},
                      {"b", rat_json(ep.b)},   {"d", rat_json(ep.d)}, {"s", int_json(ep.s)}};
    json r = json::object();
    for (const auto& [v, val] : ps.r) r[v] = rat_json(val);
    return {{"edges", edges}, {"r", r}, {"complement", ps.complement}};
}
inline ParameterSet params_from_json(const json& j) {
    ParameterSet ps;
    for (const auto& [eid, je] : j.at("edges").items()) {
        EdgeParams ep;
        ep.v_end = je.at("v").get<std::string>();
        ep.w_end = je.at("w").get<std::string>();
        ep.c = rat_from_json(je.at("c"));
        ep.a = rat_from_json(je.at("a"));
        ep.p = rat_from_json(je.at("p"));
        ep.q = rat_from_json(je.at("q"));
        ep.b = rat_from_json(je.at("b"));
        ep.d = rat_from_json(je.at("d"));
        ep.s = int_from_json(je.at("s"));
        ps.edges[eid] = std::move(ep);
    }
    for (const auto& [v, val] : j.at("r").items()) ps.r[v] = rat_from_json(val);
    ps.complement = j.at("complement").get<std::vector<std::string>>();
    return ps;
}

// ---------------------------------------------------------------------------
// skeleton and state

inline json skeleton_json(const ExtendedSkeleton& sk) {
    json bundles = json::array();
    for (const RayBundle& b : sk.bundles) {
        json branches = json::array();
        for (const BranchSpec& br : b.branches)
            branches.push_back({{"coeffs", int_vec_json(br.coeffs)}, {"label", br.label}});
        bundles.push_back({{"at", point_json(b.at)},
                           {"kind", kind_str(b.kind)},
                           {"label", b.label},
                           {"edge", b.edge_id},
                           {"stem", rat_json(b.stem_len)},
                           {"branches", branches}});
    }
    return {{"bundles", bundles}};
}

inline PointKind kind_from_str(const std::string& s) {
    if (s == "v") return PointKind::vertex;
    if (s == "c") return PointKind::c;
    if (s == "a") return PointKind::a;
    if (s == "p") return PointKind::p;
    if (s == "q") return PointKind::q;
    if (s == "b") return PointKind::b;
    if (s == "d") return PointKind::d;
    if (s == "x") return PointKind::custom;
    throw std::invalid_argument("unknown point kind: " + s);
}

inline ExtendedSkeleton skeleton_from_json(const json& j) {
    ExtendedSkeleton sk;
    for (const json& jb : j.at("bundles")) {
        RayBundle b;
        b.at = point_from_json(jb.at("at"));
        b.kind = kind_from_str(jb.at("kind").get<std::string>());
        b.label = jb.at("label").get<std::string>();
        b.edge_id = jb.at("edge").get<std::string>();
        b.stem_len = rat_from_json(jb.at("stem"));
        for (const json& jbr : jb.at("branches"))
            b.branches.push_back({int_vec_from_json(jbr.at("coeffs")), jbr.at("label").get<std::string>()});
        sk.bundles.push_back(std::move(b));
    }
    return sk;
}

inline json state_json(const EmbeddingState& st, const ParameterSet* params = nullptr) {
    json fs = json::array();
    for (const PLFunction& f : st.fs) fs.push_back(pl_json(f));
    json out = {{"schema", kStateSchema},
                {"graph", graph_json(st.graph)},
                {"complement", st.complement},
                {"skeleton", skeleton_json(st.skeleton)},
                {"functions", fs}};
    if (params) out["params"] = params_json(*params);
    return out;
}

inline EmbeddingState state_from_json(const json& j) {
    if (!j.contains("schema") || j.at("schema") != kStateSchema)
        throw std::invalid_argument("state schema mismatch: expected " + std::string(kStateSchema));
    MetricGraph g = graph_from_json(j.at("graph"));
    std::vector<std::string> comp = j.at("complement").get<std::vector<std::string>>();
    ExtendedSkeleton sk = skeleton_from_json(j.at("skeleton"));
    std::vector<PLFunction> fs;
    for (const json& jf : j.at("functions")) fs.push_back(pl_from_json(g, jf));
    return make_state(g, std::move(comp), std::move(sk), std::move(fs));
}

// ---------------------------------------------------------------------------
// embedded curve

inline json limit_json(const BoundaryPoint& bp) {
    json a = json::array();
    for (const LimitCoord& lc : bp.coords)
        a.push_back(lc.sign < 0 ? json("-inf") : lc.sign > 0 ? json("inf") : json(rat_str(lc.value)));
    return a;
}

inline json embedding_json(const EmbeddedTropicalCurve& c) {
    json segs = json::array();
    for (const Segment& s : c.segments)
        segs.push_back({{"from", rat_vec_json(s.a)},
                        {"to", rat_vec_json(s.b)},
                        {"weight", int_json(s.weight)},
                        {"nodes", {s.node_a, s.node_b}}});
    json rays = json::array();
    for (const Ray& r : c.rays)
        rays.push_back({{"base", rat_vec_json(r.base)},
                        {"dir", int_vec_json(r.dir)},
                        {"weight", int_json(r.weight)},
                        {"node", r.node},
                        {"name", r.name},
                        {"limit_p1", limit_json(boundary_limit(r, Compactification::p1cube))},
                        {"limit_tp", limit_json(boundary_limit(r, Compactification::tp))}});
    return {{"schema", kEmbeddingSchema}, {"dim", c.dim}, {"segments", segs}, {"rays", rays}};
}

// ---------------------------------------------------------------------------
// files

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("parse error in " + path + ": " + e.what());
    }
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace tropcurve
