#pragma once

#include "tropcurve/metric_graph.hpp"
#include "tropcurve/rational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropcurve {

// Finite integer combination of graph points.
struct Divisor {
    std::map<GraphPoint, Int> coeffs;

    Int degree() const {
        Int d = 0;
        for (const auto& [p, c] : coeffs) d += c;
        return d;
    }
    bool effective() const {
        for (const auto& [p, c] : coeffs)
            if (c < 0) return false;
        return true;
    }
    void add(const GraphPoint& p, const Int& c) {
        if (c == 0) return;
        Int& slot = coeffs[p];
        slot += c;
        if (slot == 0) coeffs.erase(p);
    }
    Int at(const GraphPoint& p) const {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? Int(0) : it->second;
    }
    Divisor operator+(const Divisor& o) const {
        Divisor r = *this;
        for (const auto& [p, c] : o.coeffs) r.add(p, c);
        return r;
    }
    Divisor operator-() const {
        Divisor r;
        for (const auto& [p, c] : coeffs) r.coeffs[p] = -c;
        return r;
    }
    bool operator==(const Divisor& o) const { return coeffs == o.coeffs; }
};

inline Divisor make_divisor(const MetricGraph& g,
                            std::vector<std::pair<GraphPoint, Int>> terms) {
    Divisor d;
    for (auto& [p, c] : terms) d.add(canonical(g, p), c);
    return d;
}

// Continuous piecewise-linear function, stored per edge as breakpoint samples
// (offset from edge.u, value). First sample is at 0, last at length(e); slopes
// are the implied difference quotients.
struct PLFunction {
    std::map<std::string, std::vector<std::pair<Rat, Rat>>> edge_samples;
    std::map<std::string, Rat> vertex_values;
};

inline void validate(const MetricGraph& g, const PLFunction& f) {
    for (const std::string& v : g.vertices)
        if (!f.vertex_values.count(v)) throw std::invalid_argument("missing vertex value: " + v);
    for (const GraphEdge& e : g.edges) {
        auto it = f.edge_samples.find(e.id);
        if (it == f.edge_samples.end())
            throw std::invalid_argument("missing samples on edge " + e.id);
        const auto& s = it->second;
        if (s.size() < 2 || s.front().first != 0 || s.back().first != e.length)
            throw std::invalid_argument("bad sample range on edge " + e.id);
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i].first <= s[i - 1].first)
                throw std::invalid_argument("unsorted samples on edge " + e.id);
        if (s.front().second != f.vertex_values.at(e.u) ||
            s.back().second != f.vertex_values.at(e.w))
            throw std::invalid_argument("discontinuity at endpoints of edge " + e.id);
    }
}

inline bool is_integral(const MetricGraph& g, const PLFunction& f) {
    for (const GraphEdge& e : g.edges) {
        const auto& s = f.edge_samples.at(e.id);
        for (std::size_t i = 1; i < s.size(); ++i) {
            Rat slope = (s[i].second - s[i - 1].second) / (s[i].first - s[i - 1].first);
            if (rat_den(slope) != 1) return false;
        }
    }
    return true;
}

inline Rat evaluate(const MetricGraph& g, const PLFunction& f, const GraphPoint& p0) {
    GraphPoint p = canonical(g, p0);
    if (p.at_vertex) return f.vertex_values.at(p.vertex);
    const auto& s = f.edge_samples.at(p.edge);
    std::size_t i = 1;
    while (s[i].first < p.offset) ++i;
    const auto& [o1, v1] = s[i - 1];
    const auto& [o2, v2] = s[i];
    return v1 + (v2 - v1) * (p.offset - o1) / (o2 - o1);
}

// Sum of outgoing slopes at every point where f is nonlinear; degree 0 always.
inline Divisor divisor_of(const MetricGraph& g, const PLFunction& f) {
    if (!is_integral(g, f)) throw std::invalid_argument("divisor_of needs integer slopes");
    Divisor d;
    for (const GraphEdge& e : g.edges) {
        const auto& s = f.edge_samples.at(e.id);
        std::vector<Rat> slope(s.size() - 1);
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            slope[i] = (s[i + 1].second - s[i].second) / (s[i + 1].first - s[i].first);
        d.add(GraphPoint::on_vertex(e.u), rat_num(slope.front()));
        d.add(GraphPoint::on_vertex(e.w), -rat_num(slope.back()));
        for (std::size_t i = 1; i + 1 < s.size(); ++i)
            d.add(GraphPoint::on_edge(e.id, s[i].first), rat_num(slope[i]) - rat_num(slope[i - 1]));
    }
    if (d.degree() != 0) throw std::logic_error("divisor of a PL function must have degree 0");
    return d;
}

inline PLFunction pl_zero(const MetricGraph& g) {
    PLFunction f;
    for (const std::string& v : g.vertices) f.vertex_values[v] = 0;
    for (const GraphEdge& e : g.edges)
        f.edge_samples[e.id] = {{Rat(0), Rat(0)}, {e.length, Rat(0)}};
    return f;
}

inline PLFunction pl_add(const MetricGraph& g, const PLFunction& a, const PLFunction& b) {
    PLFunction f;
    for (const std::string& v : g.vertices)
        f.vertex_values[v] = a.vertex_values.at(v) + b.vertex_values.at(v);
    for (const GraphEdge& e : g.edges) {
        std::set<Rat> offs;
        for (const auto& [o, val] : a.edge_samples.at(e.id)) offs.insert(o);
        for (const auto& [o, val] : b.edge_samples.at(e.id)) offs.insert(o);
        std::vector<std::pair<Rat, Rat>> s;
        for (const Rat& o : offs) {
            GraphPoint p = o == 0          ? GraphPoint::on_vertex(e.u)
                           : o == e.length ? GraphPoint::on_vertex(e.w)
                                           : GraphPoint::on_edge(e.id, o);
            s.push_back({o, evaluate(g, a, p) + evaluate(g, b, p)});
        }
        f.edge_samples[e.id] = std::move(s);
    }
    return f;
}

inline PLFunction pl_scale(const PLFunction& a, const Rat& c) {
    PLFunction f = a;
    for (auto& [v, val] : f.vertex_values) val *= c;
    for (auto& [e, s] : f.edge_samples)
        for (auto& [o, val] : s) val *= c;
    return f;
}

inline PLFunction pl_shift(const PLFunction& a, const Rat& c) {
    PLFunction f = a;
    for (auto& [v, val] : f.vertex_values) val += c;
    for (auto& [e, s] : f.edge_samples)
        for (auto& [o, val] : s) val += c;
    return f;
}

// Equality as functions (breakpoint sets may differ).
inline bool pl_equal(const MetricGraph& g, const PLFunction& a, const PLFunction& b) {
    for (const std::string& v : g.vertices)
        if (a.vertex_values.at(v) != b.vertex_values.at(v)) return false;
    for (const GraphEdge& e : g.edges) {
        std::set<Rat> offs;
        for (const auto& [o, val] : a.edge_samples.at(e.id)) offs.insert(o);
        for (const auto& [o, val] : b.edge_samples.at(e.id)) offs.insert(o);
        for (const Rat& o : offs) {
            if (o == 0 || o == e.length) continue;
            GraphPoint p = GraphPoint::on_edge(e.id, o);
            if (evaluate(g, a, p) != evaluate(g, b, p)) return false;
        }
    }
    return true;
}

// Builds a PL function from per-edge breakpoint lists given in offsets from a
// chosen end. Offsets must be interior and strictly increasing.
struct EdgeProfile {
    std::string edge;
    bool from_u = true;                       // false: offsets measured from w
    std::vector<std::pair<Rat, Rat>> points;  // interior (offset, value)
};

inline PLFunction pl_from_profiles(const MetricGraph& g, const std::map<std::string, Rat>& vertex_values,
                                   const std::vector<EdgeProfile>& profiles) {
    PLFunction f;
    f.vertex_values = vertex_values;
    for (const GraphEdge& e : g.edges)
        f.edge_samples[e.id] = {{Rat(0), vertex_values.at(e.u)}, {e.length, vertex_values.at(e.w)}};
    for (const EdgeProfile& pr : profiles) {
        const GraphEdge& e = g.edge(pr.edge);
        std::vector<std::pair<Rat, Rat>> s;
        s.push_back({Rat(0), vertex_values.at(e.u)});
        for (const auto& [off, val] : pr.points) {
            Rat o = pr.from_u ? off : e.length - off;
            if (o <= 0 || o >= e.length) throw std::invalid_argument("profile offset not interior");
            s.push_back({o, val});
        }
        s.push_back({e.length, vertex_values.at(e.w)});
        std::sort(s.begin(), s.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i].first == s[i - 1].first)
                throw std::invalid_argument("duplicate profile offset on edge " + e.id);
        f.edge_samples[e.id] = std::move(s);
    }
    validate(g, f);
    return f;
}

}  // namespace tropcurve
