#pragma once

#include "tropcurve/embedding.hpp"
#include "tropcurve/metric_graph.hpp"
#include "tropcurve/pl_function.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace tropcurve::testing {

inline MetricGraph make_theta() {
    return build_graph({"u", "v"}, {{"t0", "u", "v", Rat(1)},
                                    {"t1", "u", "v", Rat(1)},
                                    {"t2", "u", "v", Rat(1)}});
}

inline MetricGraph make_k4() {
    return build_graph({"v0", "v1", "v2", "v3"},
                       {{"k01", "v0", "v1", Rat(1)}, {"k02", "v0", "v2", Rat(1)},
                        {"k03", "v0", "v3", Rat(1)}, {"k12", "v1", "v2", Rat(1)},
                        {"k13", "v1", "v3", Rat(1)}, {"k23", "v2", "v3", Rat(1)}});
}

inline MetricGraph make_two_loop() {
    return build_graph({"w"}, {{"la", "w", "w", Rat(1)}, {"lb", "w", "w", Rat(1)}});
}

inline MetricGraph make_wheel(int n) {
    std::vector<std::string> vs = {"h"};
    std::vector<GraphEdge> es;
    for (int i = 0; i < n; ++i) vs.push_back("r" + std::to_string(i));
    for (int i = 0; i < n; ++i) {
        es.push_back({"c" + std::to_string(i), "r" + std::to_string(i),
                      "r" + std::to_string((i + 1) % n), Rat(1)});
        es.push_back({"s" + std::to_string(i), "h", "r" + std::to_string(i), Rat(1)});
    }
    return build_graph(std::move(vs), std::move(es));
}

inline MetricGraph random_graph(std::mt19937_64& rng, int max_extra = 4) {
    std::uniform_int_distribution<int> nv(2, 6);
    std::vector<Rat> lens = {Rat(1), Rat(1, 2), Rat(3, 2), Rat(2), Rat(1, 3)};
    int n = nv(rng);
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("n" + std::to_string(i));
    std::vector<GraphEdge> es;
    int eid = 0;
    auto len = [&]() { return lens[rng() % lens.size()]; };
    for (int i = 1; i < n; ++i)
        es.push_back({"e" + std::to_string(eid++), vs[rng() % i], vs[i], len()});
    int extra = static_cast<int>(rng() % (max_extra + 1));
    for (int i = 0; i < extra; ++i)
        es.push_back({"e" + std::to_string(eid++), vs[rng() % n], vs[rng() % n], len()});
    return build_graph(std::move(vs), std::move(es));
}

// Random continuous PL function with integer slopes: spanning-tree value
// propagation, a two-slope profile on the other edges, a few tents on top.
inline PLFunction random_integral_pl(std::mt19937_64& rng, const MetricGraph& g) {
    SpanningTree st = spanning_tree(g);
    std::map<std::string, Rat> val;
    std::map<std::string, Int> tree_slope;
    val[g.vertices.front()] = 0;
    auto islope = [&]() { return Int(static_cast<long long>(rng() % 7) - 3); };
    // propagate over tree edges until all vertices have values
    bool progress = true;
    while (progress) {
        progress = false;
        for (const GraphEdge& e : g.edges) {
            if (!st.tree.count(e.id)) continue;
            bool hu = val.count(e.u), hw = val.count(e.w);
            if (hu == hw) continue;
            Int s = islope();
            tree_slope[e.id] = s;
            if (hu) val[e.w] = val[e.u] + Rat(s) * e.length;
            else val[e.u] = val[e.w] - Rat(s) * e.length;
            progress = true;
        }
    }

    PLFunction f;
    f.vertex_values = val;
    for (const GraphEdge& e : g.edges) {
        if (st.tree.count(e.id)) {
            f.edge_samples[e.id] = {{Rat(0), val[e.u]}, {e.length, val[e.w]}};
            continue;
        }
        Rat delta = val[e.w] - val[e.u];
        Rat ratio = delta / e.length;
        Int lo = rat_num(ratio) / rat_den(ratio);
        Int a = lo + 1 + Int(rng() % 3), b = lo - 1 - Int(rng() % 3);  // a > ratio > b
        Rat t = (delta - Rat(b) * e.length) / Rat(a - b);
        f.edge_samples[e.id] = {{Rat(0), val[e.u]}, {t, val[e.u] + Rat(a) * t}, {e.length, val[e.w]}};
    }
    validate(g, f);

    int tents = static_cast<int>(rng() % 4);
    for (int i = 0; i < tents; ++i) {
        const GraphEdge& e = g.edges[rng() % g.edges.size()];
        Rat t1 = e.length * Rat(1 + static_cast<int>(rng() % 5), 12);
        Rat t2 = t1 + e.length * Rat(1 + static_cast<int>(rng() % 4), 12);
        Rat mid = (t1 + t2) / 2;
        Int m = Int(1 + rng() % 3);
        PLFunction tent = pl_zero(g);
        tent.edge_samples[e.id] = {{Rat(0), Rat(0)},
                                   {t1, Rat(0)},
                                   {mid, Rat(m) * (mid - t1)},
                                   {t2, Rat(0)},
                                   {e.length, Rat(0)}};
        f = pl_add(g, f, tent);
    }
    return f;
}

// The classical two-square genus-2 draft with naive rays; it crosses itself
// exactly once, at (-2,-2).
inline EmbeddedTropicalCurve wagner_fixture() {
    EmbeddedTropicalCurve c;
    c.dim = 2;
    auto P = [](long long x, long long y) { return std::vector<Rat>{Rat(x), Rat(y)}; };
    int next = 0;
    std::map<std::vector<Rat>, std::string> names;
    auto node = [&](const std::vector<Rat>& p) {
        auto it = names.find(p);
        if (it == names.end()) it = names.emplace(p, "n" + std::to_string(next++)).first;
        return it->second;
    };
    auto seg = [&](std::vector<Rat> a, std::vector<Rat> b) {
        Segment s;
        s.node_a = node(a);
        s.node_b = node(b);
        s.a = std::move(a);
        s.b = std::move(b);
        c.segments.push_back(std::move(s));
    };
    auto ray = [&](std::vector<Rat> base, long long dx, long long dy) {
        Ray r;
        r.node = node(base);
        r.base = std::move(base);
        r.dir = {Int(dx), Int(dy)};
        r.name = "ray" + std::to_string(c.rays.size());
        c.rays.push_back(std::move(r));
    };
    // the two squares glued at the origin
    seg(P(0, 0), P(0, 1));
    seg(P(0, 1), P(-1, 1));
    seg(P(-1, 1), P(-1, 0));
    seg(P(-1, 0), P(0, 0));
    seg(P(0, 0), P(1, 0));
    seg(P(1, 0), P(1, -1));
    seg(P(1, -1), P(0, -1));
    seg(P(0, -1), P(0, 0));
    // diagonal rays at the top corners
    ray(P(0, 1), 1, 1);
    ray(P(1, 0), 1, 1);
    // stems with axis-direction branch pairs
    seg(P(-1, 1), P(-2, 2));
    ray(P(-2, 2), -1, 0);
    ray(P(-2, 2), 0, 1);
    seg(P(-1, 0), P(-2, -1));
    ray(P(-2, -1), -1, 0);
    ray(P(-2, -1), 0, -1);  // runs through (-2,-2)
    seg(P(0, -1), P(-1, -2));
    ray(P(-1, -2), -1, 0);  // runs through (-2,-2) as well
    ray(P(-1, -2), 0, -1);
    seg(P(1, -1), P(2, -2));
    ray(P(2, -2), 1, 0);
    ray(P(2, -2), 0, -1);
    c.rebuild_nodes();
    return c;
}

}  // namespace tropcurve::testing
