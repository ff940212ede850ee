#pragma once

#include "tropcurve/metric_graph.hpp"
#include "tropcurve/pl_function.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropcurve {

namespace detail {

// Sparse symmetric rational solve of L F = -D with F(ground) = 0, where L is
// the weighted graph Laplacian (conductance = 1/length per sub-segment).
// Nodes: vertices plus interior divisor support points.
struct PoissonSystem {
    std::vector<GraphPoint> nodes;                 // index -> node
    std::map<GraphPoint, std::size_t> node_index;  // node -> index
    std::vector<Rat> values;                       // solved potentials
};

inline PoissonSystem solve_kirchhoff(const MetricGraph& g, const Divisor& d) {
    if (d.degree() != 0) throw std::invalid_argument("no solution: divisor degree is nonzero");

    PoissonSystem sys;
    auto add_node = [&](const GraphPoint& p) {
        if (sys.node_index.emplace(p, sys.nodes.size()).second) sys.nodes.push_back(p);
    };
    for (const std::string& v : g.vertices) add_node(GraphPoint::on_vertex(v));
    for (const auto& [p, c] : d.coeffs) add_node(p);

    std::size_t n = sys.nodes.size();
    std::vector<std::map<std::size_t, Rat>> rows(n);
    std::vector<Rat> rhs(n, Rat(0));
    for (const auto& [p, c] : d.coeffs) rhs[sys.node_index.at(p)] = Rat(-c);

    auto couple = [&](std::size_t a, std::size_t b, const Rat& len) {
        Rat c = Rat(1) / len;
        rows[a][a] += c;
        rows[b][b] += c;
        rows[a][b] -= c;
        rows[b][a] -= c;
    };
    for (const GraphEdge& e : g.edges) {
        std::vector<std::pair<Rat, std::size_t>> pts;
        pts.push_back({Rat(0), sys.node_index.at(GraphPoint::on_vertex(e.u))});
        for (const auto& [p, c] : d.coeffs)
            if (!p.at_vertex && p.edge == e.id) pts.push_back({p.offset, sys.node_index.at(p)});
        pts.push_back({e.length, sys.node_index.at(GraphPoint::on_vertex(e.w))});
        std::sort(pts.begin(), pts.end());
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (pts[i].second == pts[i - 1].second) continue;  // unsplit self-loop, slope 0
            couple(pts[i - 1].second, pts[i].second, pts[i].first - pts[i - 1].first);
        }
    }

    // ground at the lexicographically first vertex (vertices sort first as node 0)
    std::size_t ground = 0;

    // min-degree elimination of all nodes except ground
    std::vector<bool> eliminated(n, false);
    std::vector<std::size_t> order;
    for (std::size_t step = 0; step + 1 < n; ++step) {
        std::size_t best = n;
        std::size_t best_sz = SIZE_MAX;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == ground || eliminated[i]) continue;
            if (rows[i].size() < best_sz) {
                best_sz = rows[i].size();
                best = i;
            }
        }
        std::size_t u = best;
        Rat piv = rows[u][u];
        if (piv == 0) throw std::logic_error("singular Kirchhoff system");
        for (const auto& [j, a] : rows[u]) {
            if (j == u || eliminated[j]) continue;
            Rat factor = rows[j][u] / piv;
            if (factor == 0) continue;
            for (const auto& [k, b] : rows[u]) {
                if (k == u) continue;
                Rat& slot = rows[j][k];
                slot -= factor * b;
                if (slot == 0) rows[j].erase(k);
            }
            rhs[j] -= factor * rhs[u];
            rows[j].erase(u);
        }
        eliminated[u] = true;
        order.push_back(u);
    }

    sys.values.assign(n, Rat(0));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::size_t u = *it;
        Rat acc = rhs[u];
        for (const auto& [k, b] : rows[u])
            if (k != u) acc -= b * sys.values[k];
        sys.values[u] = acc / rows[u][u];
    }
    return sys;
}

}  // namespace detail

// The unique continuous PL function with outgoing-slope sums equal to D,
// normalized to 0 at the lexicographically first vertex. Slopes may be
// non-integer rationals.
inline PLFunction solve_poisson(const MetricGraph& g, const Divisor& d) {
    detail::PoissonSystem sys = detail::solve_kirchhoff(g, d);
    PLFunction f;
    for (const std::string& v : g.vertices)
        f.vertex_values[v] = sys.values[sys.node_index.at(GraphPoint::on_vertex(v))];
    for (const GraphEdge& e : g.edges) {
        std::vector<std::pair<Rat, Rat>> s;
        s.push_back({Rat(0), f.vertex_values.at(e.u)});
        std::vector<std::pair<Rat, std::size_t>> pts;
        for (const auto& [p, c] : d.coeffs)
            if (!p.at_vertex && p.edge == e.id) pts.push_back({p.offset, sys.node_index.at(p)});
        std::sort(pts.begin(), pts.end());
        for (const auto& [off, idx] : pts) s.push_back({off, sys.values[idx]});
        s.push_back({e.length, f.vertex_values.at(e.w)});
        f.edge_samples[e.id] = std::move(s);
    }
    validate(g, f);
    return f;
}

// D is principal iff it has degree 0 and the Kirchhoff solution has integer
// slopes everywhere.
inline bool is_principal(const MetricGraph& g, const Divisor& d) {
    if (d.degree() != 0) return false;
    return is_integral(g, solve_poisson(g, d));
}

namespace detail {

inline bool point_on_closed_edge(const GraphPoint& p, const GraphEdge& e) {
    if (p.at_vertex) return p.vertex == e.u || p.vertex == e.w;
    return p.edge == e.id;
}

inline bool match_points_to_edges(const std::vector<GraphPoint>& pts,
                                  const std::vector<const GraphEdge*>& es,
                                  std::vector<bool>& used, std::size_t i) {
    if (i == pts.size()) return true;
    for (std::size_t j = 0; j < es.size(); ++j) {
        if (used[j] || !point_on_closed_edge(pts[i], *es[j])) continue;
        used[j] = true;
        if (match_points_to_edges(pts, es, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace detail

// True iff B = x_1 + ... + x_g with x_i on the i-th complement edge of some
// spanning tree of the current model. Exhaustive over complement subsets.
inline bool is_break_divisor(const MetricGraph& g, const Divisor& b) {
    if (!b.effective()) return false;
    std::size_t gen = genus(g);
    if (b.degree() != Int(gen)) return false;
    if (gen == 0) return b.coeffs.empty();

    std::vector<GraphPoint> pts;
    for (const auto& [p, c] : b.coeffs)
        for (Int k = 0; k < c; ++k) pts.push_back(p);

    // enumerate complement candidates: g-subsets whose removal leaves a tree
    std::size_t m = g.edges.size();
    bool found = false;
    std::vector<std::size_t> idx(gen);
    for (std::size_t i = 0; i < gen; ++i) idx[i] = i;
    auto is_tree_without = [&](const std::set<std::size_t>& removed) {
        std::map<std::string, std::string> parent;
        for (const std::string& v : g.vertices) parent[v] = v;
        std::function<std::string(std::string)> find = [&](std::string x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t joins = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (removed.count(i)) continue;
            std::string a = find(g.edges[i].u), bb = find(g.edges[i].w);
            if (a == bb) return false;  // cycle
            parent[a] = bb;
            ++joins;
        }
        return joins == g.vertices.size() - 1;
    };
    while (!found) {
        std::set<std::size_t> removed(idx.begin(), idx.end());
        if (is_tree_without(removed)) {
            std::vector<const GraphEdge*> es;
            for (std::size_t i : idx) es.push_back(&g.edges[i]);
            std::vector<bool> used(es.size(), false);
            if (detail::match_points_to_edges(pts, es, used, 0)) found = true;
        }
        // next combination
        std::size_t i = gen;
        bool done = false;
        while (i > 0) {
            --i;
            if (idx[i] != i + m - gen) break;
            if (i == 0) done = true;
        }
        if (done) break;
        if (idx[i] == i + m - gen) break;
        ++idx[i];
        for (std::size_t j = i + 1; j < gen; ++j) idx[j] = idx[j - 1] + 1;
    }
    return found;
}

}  // namespace tropcurve
