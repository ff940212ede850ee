#pragma once

#include "tropcurve/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace tropcurve {

struct GraphEdge {
    std::string id;
    std::string u, w;  // designated first and second endpoint
    Rat length;
};

// Connected multigraph with positive rational edge lengths. Parallel edges and
// self-loops are allowed. Vertices and edges are kept sorted by id.
struct MetricGraph {
    std::vector<std::string> vertices;
    std::vector<GraphEdge> edges;

    std::map<std::string, std::size_t> vindex;
    std::map<std::string, std::size_t> eindex;

    const GraphEdge& edge(const std::string& id) const {
        auto it = eindex.find(id);
        if (it == eindex.end()) throw std::invalid_argument("unknown edge: " + id);
        return edges[it->second];
    }
    bool has_vertex(const std::string& id) const { return vindex.count(id) > 0; }

    std::size_t degree(const std::string& v) const {
        std::size_t d = 0;
        for (const GraphEdge& e : edges) {
            if (e.u == v) ++d;
            if (e.w == v) ++d;  // a self-loop counts twice
        }
        return d;
    }
};

inline MetricGraph build_graph(std::vector<std::string> vertices, std::vector<GraphEdge> edges) {
    MetricGraph g;
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i] == vertices[i - 1])
            throw std::invalid_argument("duplicate vertex id: " + vertices[i]);
    std::sort(edges.begin(), edges.end(),
              [](const GraphEdge& a, const GraphEdge& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i].id == edges[i - 1].id)
            throw std::invalid_argument("duplicate edge id: " + edges[i].id);
    if (vertices.empty()) throw std::invalid_argument("graph has no vertices");

    g.vertices = std::move(vertices);
    g.edges = std::move(edges);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) g.vindex[g.vertices[i]] = i;
    for (std::size_t i = 0; i < g.edges.size(); ++i) g.eindex[g.edges[i].id] = i;

    for (const GraphEdge& e : g.edges) {
        if (!g.has_vertex(e.u) || !g.has_vertex(e.w))
            throw std::invalid_argument("edge " + e.id + " has a dangling endpoint");
        if (e.length <= 0)
            throw std::invalid_argument("edge " + e.id + " has non-positive length");
    }

    // connectivity
    std::vector<std::size_t> parent(g.vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const GraphEdge& e : g.edges) parent[find(g.vindex.at(e.u))] = find(g.vindex.at(e.w));
    std::size_t root = find(0);
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (find(i) != root) throw std::invalid_argument("graph is disconnected");
    return g;
}

inline std::size_t genus(const MetricGraph& g) {
    return g.edges.size() - g.vertices.size() + 1;
}

// A location on the graph: a vertex, or an interior point of an edge.
struct GraphPoint {
    bool at_vertex = true;
    std::string vertex;
    std::string edge;
    Rat offset;  // from edge.u, in (0, length) once canonical

    static GraphPoint on_vertex(std::string v) {
        GraphPoint p;
        p.at_vertex = true;
        p.vertex = std::move(v);
        return p;
    }
    static GraphPoint on_edge(std::string e, Rat off) {
        GraphPoint p;
        p.at_vertex = false;
        p.edge = std::move(e);
        p.offset = std::move(off);
        return p;
    }

    bool operator<(const GraphPoint& o) const {
        return std::tie(at_vertex, vertex, edge, offset) <
               std::tie(o.at_vertex, o.vertex, o.edge, o.offset);
    }
    bool operator==(const GraphPoint& o) const {
        return at_vertex == o.at_vertex && vertex == o.vertex && edge == o.edge &&
               offset == o.offset;
    }
};

// Offsets 0 and length(e) normalize to the endpoint vertices.
inline GraphPoint canonical(const MetricGraph& g, const GraphPoint& p) {
    if (p.at_vertex) {
        if (!g.has_vertex(p.vertex)) throw std::invalid_argument("unknown vertex: " + p.vertex);
        return p;
    }
    const GraphEdge& e = g.edge(p.edge);
    if (p.offset < 0 || p.offset > e.length)
        throw std::invalid_argument("offset outside edge " + e.id);
    if (p.offset == 0) return GraphPoint::on_vertex(e.u);
    if (p.offset == e.length) return GraphPoint::on_vertex(e.w);
    return p;
}

inline std::string point_str(const GraphPoint& p) {
    if (p.at_vertex) return p.vertex;
    return p.edge + "@" + rat_str(p.offset);
}

struct SpanningTree {
    std::set<std::string> tree;            // edge ids in the tree
    std::vector<std::string> complement;   // edge ids outside, sorted
};

// Deterministic Kruskal over edge ids.
inline SpanningTree spanning_tree(const MetricGraph& g) {
    SpanningTree st;
    std::map<std::string, std::string> parent;
    for (const std::string& v : g.vertices) parent[v] = v;
    std::function<std::string(std::string)> find = [&](std::string x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const GraphEdge& e : g.edges) {
        std::string ru = find(e.u), rw = find(e.w);
        if (ru == rw) {
            st.complement.push_back(e.id);
        } else {
            parent[ru] = rw;
            st.tree.insert(e.id);
        }
    }
    return st;
}

// Splits an edge into n equal pieces. Piece k gets id "<e>@k", interior
// vertices "<e>%k" (zero padded so lexicographic order matches position).
inline MetricGraph split_edge(const MetricGraph& g, const std::string& eid, std::size_t n) {
    if (n < 2) return g;
    const GraphEdge& e = g.edge(eid);
    auto pad = [n](std::size_t k) {
        std::string s = std::to_string(k);
        std::size_t width = std::to_string(n).size();
        while (s.size() < width) s.insert(s.begin(), '0');
        return s;
    };
    std::vector<std::string> vs = g.vertices;
    std::vector<GraphEdge> es;
    for (const GraphEdge& f : g.edges)
        if (f.id != eid) es.push_back(f);
    Rat piece = e.length / Int(n);
    std::string prev = e.u;
    for (std::size_t k = 0; k < n; ++k) {
        std::string next = (k + 1 == n) ? e.w : e.id + "%" + pad(k + 1);
        if (k + 1 != n) vs.push_back(next);
        es.push_back(GraphEdge{e.id + "@" + pad(k), prev, next, piece});
        prev = next;
    }
    return build_graph(std::move(vs), std::move(es));
}

struct Subdivision {
    MetricGraph graph;
    std::string new_vertex;  // the vertex at the split point (or the existing one)
};

// Introduces p as a vertex. A vertex point is a no-op.
inline Subdivision subdivide(const MetricGraph& g, const GraphPoint& p0) {
    GraphPoint p = canonical(g, p0);
    if (p.at_vertex) return Subdivision{g, p.vertex};
    const GraphEdge& e = g.edge(p.edge);
    std::string nv = e.id + "%" + rat_str(p.offset);
    std::vector<std::string> vs = g.vertices;
    vs.push_back(nv);
    std::vector<GraphEdge> es;
    for (const GraphEdge& f : g.edges)
        if (f.id != e.id) es.push_back(f);
    es.push_back(GraphEdge{e.id + "[", e.u, nv, p.offset});
    es.push_back(GraphEdge{e.id + "]", nv, e.w, e.length - p.offset});
    return Subdivision{build_graph(std::move(vs), std::move(es)), nv};
}

// Exact single-source shortest distances over vertices.
inline std::map<std::string, Rat> dijkstra(const MetricGraph& g, const std::string& source) {
    std::map<std::string, Rat> dist;
    std::set<std::string> done;
    dist[source] = 0;
    using Item = std::pair<Rat, std::string>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.push({Rat(0), source});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done.count(v)) continue;
        done.insert(v);
        for (const GraphEdge& e : g.edges) {
            for (const auto& [a, b] : {std::pair{e.u, e.w}, std::pair{e.w, e.u}}) {
                if (a != v) continue;
                Rat nd = d + e.length;
                auto it = dist.find(b);
                if (it == dist.end() || nd < it->second) {
                    dist[b] = nd;
                    pq.push({nd, b});
                }
            }
        }
    }
    return dist;
}

inline Rat distance(const MetricGraph& g, const GraphPoint& x0, const GraphPoint& y0) {
    GraphPoint x = canonical(g, x0), y = canonical(g, y0);
    if (x == y) return 0;

    auto anchors = [&](const GraphPoint& p) {
        // (vertex, offset to it) pairs
        std::vector<std::pair<std::string, Rat>> out;
        if (p.at_vertex) {
            out.push_back({p.vertex, Rat(0)});
        } else {
            const GraphEdge& e = g.edge(p.edge);
            out.push_back({e.u, p.offset});
            out.push_back({e.w, e.length - p.offset});
        }
        return out;
    };

    std::optional<Rat> best;
    if (!x.at_vertex && !y.at_vertex && x.edge == y.edge) best = rat_abs(x.offset - y.offset);

    for (const auto& [vx, dx] : anchors(x)) {
        auto dmap = dijkstra(g, vx);
        for (const auto& [vy, dy] : anchors(y)) {
            Rat cand = dx + dmap.at(vy) + dy;
            if (!best || cand < *best) best = cand;
        }
    }
    return *best;
}

struct PreparedModel {
    MetricGraph graph;
    std::vector<std::string> complement;  // sorted edge ids
};

namespace detail {

inline bool has_parallel_or_loop(const MetricGraph& g) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const GraphEdge& e : g.edges) {
        if (e.u == e.w) return true;
        auto key = std::minmax(e.u, e.w);
        if (!seen.insert({key.first, key.second}).second) return true;
    }
    return false;
}

inline bool complement_disjoint(const MetricGraph& g, const std::vector<std::string>& comp) {
    std::set<std::string> used;
    for (const std::string& id : comp) {
        const GraphEdge& e = g.edge(id);
        if (e.u == e.w) return false;
        if (!used.insert(e.u).second) return false;
        if (!used.insert(e.w).second) return false;
    }
    return true;
}

}  // namespace detail

// Chooses a model whose spanning-tree complement edges are pairwise
// vertex-disjoint, with no self-loops or parallel edges left anywhere.
// If the input already qualifies it is returned unchanged; otherwise every
// complement edge is trisected and the middle thirds form the complement.
inline PreparedModel prepare_model(const MetricGraph& g) {
    SpanningTree st = spanning_tree(g);
    if (!detail::has_parallel_or_loop(g) && detail::complement_disjoint(g, st.complement))
        return PreparedModel{g, st.complement};

    MetricGraph h = g;
    std::vector<std::string> middles;
    for (const std::string& id : st.complement) {
        h = split_edge(h, id, 3);
        middles.push_back(id + "@1");
    }
    std::sort(middles.begin(), middles.end());
    if (detail::has_parallel_or_loop(h) || !detail::complement_disjoint(h, middles))
        throw std::logic_error("prepare_model: trisection failed to separate complement");
    return PreparedModel{h, middles};
}

}  // namespace tropcurve
