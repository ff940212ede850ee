#pragma once

#include "tropcurve/metric_graph.hpp"
#include "tropcurve/pl_function.hpp"
#include "tropcurve/poisson.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace tropcurve {

// Per-edge marked points, given as offsets from the oriented start v_end.
// The pairs (c,d), (a,b), (p,q) are symmetric about the edge midpoint and
// ordered c < a < p < q < b < d.
struct EdgeParams {
    std::string v_end, w_end;
    Rat c, a, p, q, b, d;
    Int s;
};

struct ParameterSet {
    std::map<std::string, EdgeParams> edges;
    std::map<std::string, Rat> r;          // vertex levels; r(v_end) < r(w_end)
    std::vector<std::string> complement;   // sorted edge ids outside the tree

    bool is_complement(const std::string& e) const {
        return std::binary_search(complement.begin(), complement.end(), e);
    }
};

enum class MarkKind { c, a, p, q, b, d };

inline Rat mark_phi(const EdgeParams& ep, MarkKind k) {
    switch (k) {
        case MarkKind::c: return ep.c;
        case MarkKind::a: return ep.a;
        case MarkKind::p: return ep.p;
        case MarkKind::q: return ep.q;
        case MarkKind::b: return ep.b;
        case MarkKind::d: return ep.d;
    }
    throw std::logic_error("bad mark kind");
}

inline char mark_letter(MarkKind k) {
    switch (k) {
        case MarkKind::c: return 'c';
        case MarkKind::a: return 'a';
        case MarkKind::p: return 'p';
        case MarkKind::q: return 'q';
        case MarkKind::b: return 'b';
        case MarkKind::d: return 'd';
    }
    return '?';
}

// Converts an oriented offset to a graph offset (from edge.u).
inline GraphPoint marked_point(const MetricGraph& g, const ParameterSet& ps,
                               const std::string& eid, MarkKind k) {
    const GraphEdge& e = g.edge(eid);
    const EdgeParams& ep = ps.edges.at(eid);
    Rat phi = mark_phi(ep, k);
    Rat off = (ep.v_end == e.u) ? phi : e.length - phi;
    return canonical(g, GraphPoint::on_edge(eid, off));
}

inline void validate_parameters(const MetricGraph& g, const ParameterSet& ps) {
    for (const GraphEdge& e : g.edges) {
        auto it = ps.edges.find(e.id);
        if (it == ps.edges.end()) throw std::invalid_argument("no parameters for edge " + e.id);
        const EdgeParams& ep = it->second;
        if (!((ep.v_end == e.u && ep.w_end == e.w) || (ep.v_end == e.w && ep.w_end == e.u)))
            throw std::invalid_argument("bad orientation on edge " + e.id);
        if (ep.v_end == ep.w_end)
            throw std::invalid_argument("edge " + e.id + " is a loop; parameters need two ends");
        if (!(0 < ep.c && ep.c < ep.a && ep.a < ep.p && ep.p < ep.q && ep.q < ep.b &&
              ep.b < ep.d && ep.d < e.length))
            throw std::invalid_argument("marked points out of order on edge " + e.id);
        if (ep.d != e.length - ep.c || ep.b != e.length - ep.a || ep.q != e.length - ep.p)
            throw std::invalid_argument("marked points not midpoint-symmetric on edge " + e.id);
        Rat rv = ps.r.at(ep.v_end), rw = ps.r.at(ep.w_end);
        if (!(rv < rw)) throw std::invalid_argument("r(v_end) must be below r(w_end) on " + e.id);
        Rat delta = rw - rv;
        if (ep.b - ep.a != delta)
            throw std::invalid_argument("dist(a,b) must equal the r gap on edge " + e.id);
        if (!(delta < e.length))
            throw std::invalid_argument("r gap must be below the length of edge " + e.id);
        if (ep.s < 2) throw std::invalid_argument("s must exceed 1 on edge " + e.id);
    }
    for (const std::string& c : ps.complement) g.edge(c);
}

// ---------------------------------------------------------------------------
// Target divisors

inline std::array<Divisor, 3> target_divisors(const MetricGraph& g, const ParameterSet& ps) {
    validate_parameters(g, ps);
    Divisor d1, d2, d3;
    for (const GraphEdge& e : g.edges) {
        const EdgeParams& ep = ps.edges.at(e.id);
        GraphPoint pv = GraphPoint::on_vertex(ep.v_end), pw = GraphPoint::on_vertex(ep.w_end);
        GraphPoint pp = marked_point(g, ps, e.id, MarkKind::p);
        GraphPoint pq = marked_point(g, ps, e.id, MarkKind::q);
        d1.add(pv, 1);
        d1.add(pw, 1);
        d1.add(pp, -1);
        d1.add(pq, -1);
        d2.add(pv, ep.s);
        d2.add(pw, ep.s);
        d2.add(pp, -ep.s);
        d2.add(pq, -ep.s);
        d3.add(marked_point(g, ps, e.id, MarkKind::a), 1);
        d3.add(marked_point(g, ps, e.id, MarkKind::b), -1);
    }
    for (const std::string& eid : ps.complement) {
        d2.add(marked_point(g, ps, eid, MarkKind::c), -1);
        d2.add(marked_point(g, ps, eid, MarkKind::a), 1);
        d2.add(marked_point(g, ps, eid, MarkKind::b), 1);
        d2.add(marked_point(g, ps, eid, MarkKind::d), -1);
    }
    return {d1, d2, d3};
}

// ---------------------------------------------------------------------------
// Coordinate functions

// F2 is constant on [p,q]; this is that plateau height.
inline Rat f2_plateau(const ParameterSet& ps, const std::string& eid) {
    const EdgeParams& ep = ps.edges.at(eid);
    if (ps.is_complement(eid)) return Rat(ep.s) * ep.p - (ep.a - ep.c);
    return Rat(ep.s) * ep.p;
}

// F2 along one edge in oriented coordinates, as interior breakpoints.
inline std::vector<std::pair<Rat, Rat>> f2_profile(const ParameterSet& ps, const std::string& eid) {
    const EdgeParams& ep = ps.edges.at(eid);
    Rat plateau = f2_plateau(ps, eid);
    if (!ps.is_complement(eid))
        return {{ep.p, plateau}, {ep.q, plateau}};
    Rat vc = Rat(ep.s) * ep.c;
    Rat va = vc + Rat(ep.s - 1) * (ep.a - ep.c);
    return {{ep.c, vc}, {ep.a, va}, {ep.p, plateau}, {ep.q, plateau}, {ep.b, va}, {ep.d, vc}};
}

inline Rat f2_at_phi(const ParameterSet& ps, const std::string& eid, const Rat& len, const Rat& x) {
    auto prof = f2_profile(ps, eid);
    Rat o1 = 0, v1 = 0;
    for (const auto& [o2, v2] : prof) {
        if (x <= o2) return v1 + (v2 - v1) * (x - o1) / (o2 - o1);
        o1 = o2;
        v1 = v2;
    }
    return v1 + (Rat(0) - v1) * (x - o1) / (len - o1);
}

inline std::array<PLFunction, 3> build_coordinate_functions(const MetricGraph& g,
                                                            const ParameterSet& ps) {
    validate_parameters(g, ps);
    std::map<std::string, Rat> zero, rvals;
    for (const std::string& v : g.vertices) {
        zero[v] = 0;
        rvals[v] = ps.r.at(v);
    }
    std::vector<EdgeProfile> pr1, pr2, pr3;
    for (const GraphEdge& e : g.edges) {
        const EdgeParams& ep = ps.edges.at(e.id);
        bool from_u = (ep.v_end == e.u);
        pr1.push_back({e.id, from_u, {{ep.p, ep.p}, {ep.q, ep.p}}});
        pr2.push_back({e.id, from_u, f2_profile(ps, e.id)});
        pr3.push_back({e.id, from_u, {{ep.a, ps.r.at(ep.v_end)}, {ep.b, ps.r.at(ep.w_end)}}});
    }
    std::array<PLFunction, 3> fs = {pl_from_profiles(g, zero, pr1), pl_from_profiles(g, zero, pr2),
                                    pl_from_profiles(g, rvals, pr3)};
    auto targets = target_divisors(g, ps);
    for (int i = 0; i < 3; ++i)
        if (!(divisor_of(g, fs[i]) == targets[i]))
            throw std::logic_error("coordinate function " + std::to_string(i + 1) +
                                   " does not realize its target divisor");
    return fs;
}

// ---------------------------------------------------------------------------
// Condition verification

struct ConditionResult {
    std::string id;
    bool pass = true;
    std::string witness;
};

struct ConditionReport {
    std::vector<ConditionResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
    const ConditionResult* find(const std::string& id) const {
        for (const auto& r : results)
            if (r.id == id) return &r;
        return nullptr;
    }
};

namespace detail {

template <typename Key>
inline void check_distinct(ConditionReport& rep, const std::string& id,
                           const std::vector<std::pair<Key, Rat>>& vals) {
    std::map<Rat, Key> seen;
    for (const auto& [k, v] : vals) {
        auto [it, fresh] = seen.emplace(v, k);
        if (!fresh) {
            rep.results.push_back({id, false, "equal values at " + it->second + " and " + k});
            return;
        }
    }
    rep.results.push_back({id, true, ""});
}

}  // namespace detail

// Checks the interval condition, the vertex-level conditions, the location
// distinctness conditions (V1-V4) and the slope-integer conditions (S1-S6).
// Reports, never throws.
inline ConditionReport verify_parameters(const MetricGraph& g, const ParameterSet& ps) {
    ConditionReport rep;
    std::vector<const GraphEdge*> all, tree, comp;
    for (const GraphEdge& e : g.edges) {
        all.push_back(&e);
        (ps.is_complement(e.id) ? comp : tree).push_back(&e);
    }
    auto ep = [&](const GraphEdge* e) -> const EdgeParams& { return ps.edges.at(e->id); };

    {  // interval condition in aligned coordinates, both alignments
        bool ok = true;
        std::string wit;
        auto chain = [&](auto get_lo, auto get_hi, const char* what) {
            if (!ok) return;
            for (const GraphEdge* e1 : all)
                for (const GraphEdge* e2 : all)
                    if (!(get_lo(e1) < get_hi(e2))) {
                        ok = false;
                        wit = std::string(what) + " fails between " + e1->id + " and " + e2->id;
                        return;
                    }
        };
        chain([&](auto* e) { return ep(e).c; }, [&](auto* e) { return ep(e).a; }, "c<a");
        chain([&](auto* e) { return ep(e).a; }, [&](auto* e) { return ep(e).p; }, "a<p");
        chain([&](auto* e) { return ep(e).p; }, [&](auto* e) { return e->length / 2; }, "p<mid");
        chain([&](auto* e) { return e->length - ep(e).d; },
              [&](auto* e) { return e->length - ep(e).b; }, "d<b aligned right");
        chain([&](auto* e) { return e->length - ep(e).b; },
              [&](auto* e) { return e->length - ep(e).q; }, "b<q aligned right");
        chain([&](auto* e) { return e->length - ep(e).q; },
              [&](auto* e) { return e->length / 2; }, "q<mid aligned right");
        rep.results.push_back({"interval", ok, wit});
    }

    {  // R1: vertex levels distinct
        std::vector<std::pair<std::string, Rat>> vals;
        for (const std::string& v : g.vertices) vals.push_back({v, ps.r.at(v)});
        detail::check_distinct(rep, "R1", vals);
    }
    {  // R2: F1(a_e) = phi(a_e) distinct
        std::vector<std::pair<std::string, Rat>> vals;
        for (const GraphEdge* e : all) vals.push_back({e->id, ep(e).a});
        detail::check_distinct(rep, "R2", vals);
    }
    {  // V1: F1(c_e) distinct on complement edges
        std::vector<std::pair<std::string, Rat>> vals;
        for (const GraphEdge* e : comp) vals.push_back({e->id, ep(e).c});
        detail::check_distinct(rep, "V1", vals);
    }
    auto f3p = [&](const GraphEdge* e) { return ps.r.at(ep(e).v_end) + (ep(e).p - ep(e).a); };
    auto f3q = [&](const GraphEdge* e) { return ps.r.at(ep(e).w_end) - (ep(e).p - ep(e).a); };
    {  // V2: F3(p_e) distinct
        std::vector<std::pair<std::string, Rat>> vals;
        for (const GraphEdge* e : all) vals.push_back({e->id, f3p(e)});
        detail::check_distinct(rep, "V2", vals);
    }
    {  // V3: F3(q_e) distinct
        std::vector<std::pair<std::string, Rat>> vals;
        for (const GraphEdge* e : all) vals.push_back({e->id, f3q(e)});
        detail::check_distinct(rep, "V3", vals);
    }
    {  // V4: F3(p_e) never meets F3(q_{e'})
        bool ok = true;
        std::string wit;
        for (const GraphEdge* e1 : all) {
            for (const GraphEdge* e2 : all)
                if (f3p(e1) == f3q(e2)) {
                    ok = false;
                    wit = "F3(p) on " + e1->id + " equals F3(q) on " + e2->id;
                    break;
                }
            if (!ok) break;
        }
        rep.results.push_back({"V4", ok, wit});
    }
    {  // S1: slope integers distinct
        std::vector<std::pair<std::string, Rat>> vals;
        for (const GraphEdge* e : all) vals.push_back({e->id, Rat(ep(e).s)});
        detail::check_distinct(rep, "S1", vals);
    }
    {  // S2: plateau of F2 distinct per edge
        std::vector<std::pair<std::string, Rat>> vals;
        for (const GraphEdge* e : all) vals.push_back({e->id, f2_plateau(ps, e->id)});
        detail::check_distinct(rep, "S2", vals);
    }

    Rat rmin, rmax;
    bool first = true;
    for (const std::string& v : g.vertices) {
        Rat rv = ps.r.at(v);
        if (first || rv < rmin) rmin = rv;
        if (first || rv > rmax) rmax = rv;
        first = false;
    }
    Rat f3_spread = rmax - rmin;

    {  // S3: tree plateaus sit far below every complement F2(c)
        bool ok = true;
        std::string wit;
        for (const GraphEdge* e : tree) {
            for (const GraphEdge* e2 : comp) {
                Rat gap = Rat(ep(e2).s) * ep(e2).c - f2_plateau(ps, e->id);
                if (!(gap > f3_spread)) {
                    ok = false;
                    wit = "tree edge " + e->id + " vs complement " + e2->id;
                    break;
                }
            }
            if (!ok) break;
        }
        rep.results.push_back({"S3", ok, wit});
    }
    {  // S4: complement F2 ranges disjoint with wide gaps
        std::vector<std::pair<Rat, const GraphEdge*>> ivs;  // (F2(c), edge)
        for (const GraphEdge* e : comp) ivs.push_back({Rat(ep(e).s) * ep(e).c, e});
        std::sort(ivs.begin(), ivs.end());
        bool ok = true;
        std::string wit;
        for (std::size_t i = 1; i < ivs.size(); ++i) {
            Rat hi_prev = f2_plateau(ps, ivs[i - 1].second->id);
            if (!(ivs[i].first - hi_prev > f3_spread)) {
                ok = false;
                wit = "ranges of " + ivs[i - 1].second->id + " and " + ivs[i].second->id;
                break;
            }
        }
        rep.results.push_back({"S4", ok, wit});
    }
    {  // S5: on the aligned window, complement F2 stays above tree plateaus
        bool ok = true;
        std::string wit;
        for (const GraphEdge* e : tree) {
            for (const GraphEdge* e2 : comp) {
                Rat lo = ep(e).p;
                Rat hi = std::min(e->length - ep(e).p, e2->length - ep(e).p);
                if (!(lo < hi)) continue;  // empty window
                std::vector<Rat> cand = {lo, hi};
                for (const auto& [o, v] : f2_profile(ps, e2->id))
                    if (lo < o && o < hi) cand.push_back(o);
                Rat mn;
                bool fst = true;
                for (const Rat& x : cand) {
                    Rat v = f2_at_phi(ps, e2->id, e2->length, x);
                    if (fst || v < mn) mn = v;
                    fst = false;
                }
                Rat rhs = f2_plateau(ps, e->id) + Rat(ep(e).s) * f3_spread;
                if (!(mn > rhs)) {
                    ok = false;
                    wit = "window of tree edge " + e->id + " on complement " + e2->id;
                    break;
                }
            }
            if (!ok) break;
        }
        rep.results.push_back({"S5", ok, wit});
    }
    {  // S6: vertex degree coprime to the incident slope sum
        bool ok = true;
        std::string wit;
        for (const std::string& v : g.vertices) {
            Int sum = 0;
            for (const GraphEdge& e : g.edges) {
                if (e.u == v) sum += ps.edges.at(e.id).s;
                if (e.w == v) sum += ps.edges.at(e.id).s;
            }
            if (int_gcd(Int(g.degree(v)), sum) != 1) {
                ok = false;
                wit = "vertex " + v;
                break;
            }
        }
        rep.results.push_back({"S6", ok, wit});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Synthesis

struct SynthesizedModel {
    MetricGraph graph;       // refined model the parameters live on
    ParameterSet params;
    std::string z_vertex;    // root of the coprimality sweep
    std::string leaf_edge;   // appended leaf edge at z
};

namespace detail {

inline std::string fresh_id(const std::set<std::string>& taken, std::string base) {
    while (taken.count(base)) base += "_";
    return base;
}

// Splits every edge into equal pieces of one common length, with an even
// piece count per edge so the refined graph is bipartite.
inline std::pair<MetricGraph, std::vector<std::string>> equalize_lengths(
    const MetricGraph& g, const std::vector<std::string>& complement) {
    Rat unit = 0;
    for (const GraphEdge& e : g.edges) unit = rat_gcd(unit, e.length);
    Rat piece = unit / 2;
    MetricGraph h = g;
    std::vector<std::string> comp2;
    std::set<std::string> comp_set(complement.begin(), complement.end());
    for (const GraphEdge& e : g.edges) {
        Rat cnt = e.length / piece;
        if (rat_den(cnt) != 1) throw std::logic_error("length equalization failed");
        std::size_t n = rat_num(cnt).template convert_to<std::size_t>();
        h = split_edge(h, e.id, n);
        if (comp_set.count(e.id)) {
            std::size_t width = std::to_string(n).size();
            std::string k = std::to_string(n / 2);
            while (k.size() < width) k.insert(k.begin(), '0');
            comp2.push_back(e.id + "@" + k);
        }
    }
    std::sort(comp2.begin(), comp2.end());
    return {h, comp2};
}

inline std::map<std::string, int> bipartition(const MetricGraph& g) {
    std::map<std::string, int> color;
    std::vector<std::string> stack = {g.vertices.front()};
    color[g.vertices.front()] = 0;
    while (!stack.empty()) {
        std::string v = stack.back();
        stack.pop_back();
        for (const GraphEdge& e : g.edges) {
            for (const auto& [a, b] : {std::pair{e.u, e.w}, std::pair{e.w, e.u}}) {
                if (a != v) continue;
                auto it = color.find(b);
                if (it == color.end()) {
                    color[b] = 1 - color[v];
                    stack.push_back(b);
                } else if (it->second == color[v]) {
                    throw std::logic_error("refined model is not bipartite");
                }
            }
        }
    }
    return color;
}

}  // namespace detail

// Picks the slope integers: distinct prime seeds, a coprimality sweep toward
// z finishing on the leaf edge, then geometric multiples of lcm(deg) until the
// value conditions hold.
inline void choose_s(const MetricGraph& g, ParameterSet& ps, const std::string& z_vertex,
                     const std::string& leaf_edge) {
    std::size_t n = g.edges.size();
    std::vector<Int> primes = first_primes(n);
    for (std::size_t i = 0; i < n; ++i) ps.edges.at(g.edges[i].id).s = primes[i];

    // tree metric toward z (complement pieces excluded)
    std::set<std::string> comp_set(ps.complement.begin(), ps.complement.end());
    MetricGraph tree_only;
    {
        std::vector<GraphEdge> te;
        for (const GraphEdge& e : g.edges)
            if (!comp_set.count(e.id)) te.push_back(e);
        tree_only = build_graph(g.vertices, te);
    }
    auto dist_z = dijkstra(tree_only, z_vertex);

    auto incident_sum = [&](const std::string& v) {
        Int sum = 0;
        for (const GraphEdge& e : g.edges) {
            if (e.u == v) sum += ps.edges.at(e.id).s;
            if (e.w == v) sum += ps.edges.at(e.id).s;
        }
        return sum;
    };

    std::string leaf_vertex;
    {
        const GraphEdge& le = g.edge(leaf_edge);
        leaf_vertex = (le.u == z_vertex) ? le.w : le.u;
    }

    std::vector<std::string> order;
    for (const std::string& v : g.vertices)
        if (v != z_vertex && v != leaf_vertex) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
        if (dist_z.at(a) != dist_z.at(b)) return dist_z.at(a) > dist_z.at(b);
        return a < b;
    });

    for (const std::string& v : order) {
        // first tree edge on the way to z
        std::string ev;
        for (const GraphEdge& e : tree_only.edges) {
            std::string other;
            if (e.u == v) other = e.w;
            else if (e.w == v) other = e.u;
            else continue;
            if (dist_z.at(other) + e.length == dist_z.at(v)) {
                ev = e.id;
                break;  // edges sorted by id, first hit is the canonical choice
            }
        }
        if (ev.empty()) throw std::logic_error("no tree edge toward z from " + v);
        Int deg(g.degree(v));
        while (int_gcd(deg, incident_sum(v)) != 1) ps.edges.at(ev).s += 1;
    }
    {
        Int deg(g.degree(z_vertex));
        while (int_gcd(deg, incident_sum(z_vertex)) != 1) ps.edges.at(leaf_edge).s += 1;
    }

    std::map<std::string, Int> swept;
    for (const GraphEdge& e : g.edges) swept[e.id] = ps.edges.at(e.id).s;

    Int m = 1;
    for (const std::string& v : g.vertices) m = int_lcm(m, Int(g.degree(v)));

    // geometric weights, tree edges below all complement edges
    std::map<std::string, Int> weight;
    {
        std::vector<std::string> ranked;
        for (const GraphEdge& e : g.edges)
            if (!comp_set.count(e.id)) ranked.push_back(e.id);
        for (const std::string& c : ps.complement) ranked.push_back(c);
        Int w = 32;
        for (const std::string& id : ranked) {
            weight[id] = w;
            w *= 32;
        }
    }

    for (Int k = 1; k <= Int(1) << 20; k *= 2) {
        for (const GraphEdge& e : g.edges)
            ps.edges.at(e.id).s = swept.at(e.id) + weight.at(e.id) * m * k;
        if (verify_parameters(g, ps).all_pass()) return;
    }
    throw std::logic_error("slope assignment did not converge");
}

// Builds a refined model of the prepared graph and a parameter set satisfying
// every condition verify_parameters checks. Deterministic in the seed.
inline SynthesizedModel synthesize_parameters(const PreparedModel& pm, std::uint64_t seed) {
    if (pm.graph.edges.empty())
        throw std::invalid_argument("synthesis needs a graph with at least one edge");

    auto [h, comp] = detail::equalize_lengths(pm.graph, pm.complement);

    // z: a refinement vertex on the tree, i.e. not an endpoint of a
    // designated complement piece and absent from the input model
    std::set<std::string> old_vs(pm.graph.vertices.begin(), pm.graph.vertices.end());
    std::set<std::string> comp_ends;
    for (const std::string& c : comp) {
        comp_ends.insert(h.edge(c).u);
        comp_ends.insert(h.edge(c).w);
    }
    std::string z;
    for (const std::string& v : h.vertices)
        if (!old_vs.count(v) && !comp_ends.count(v)) {
            z = v;
            break;
        }
    if (z.empty()) throw std::logic_error("no refinement vertex available for z");

    Rat piece = h.edges.front().length;
    std::set<std::string> vset(h.vertices.begin(), h.vertices.end());
    std::set<std::string> eset;
    for (const GraphEdge& e : h.edges) eset.insert(e.id);
    std::string leaf_v = detail::fresh_id(vset, "zleaf");
    std::string leaf_e = detail::fresh_id(eset, "zedge");
    {
        std::vector<std::string> vs = h.vertices;
        vs.push_back(leaf_v);
        std::vector<GraphEdge> es = h.edges;
        es.push_back(GraphEdge{leaf_e, z, leaf_v, piece});
        h = build_graph(std::move(vs), std::move(es));
    }

    // placement scales: one band layout for every edge (all lengths equal)
    Rat L = piece;
    std::size_t n = h.edges.size();
    Rat delta = L / Rat(Int(32) * Int(n + 1));

    ParameterSet ps;
    ps.complement = comp;

    auto color = detail::bipartition(h);
    std::vector<Int> sidon = sidon_sequence(h.vertices.size());
    Rat eps = delta / Rat(8 * (sidon.back() + 1));
    Rat G = L / 2;
    for (std::size_t i = 0; i < h.vertices.size(); ++i) {
        const std::string& v = h.vertices[i];
        std::size_t ri = (i + seed) % h.vertices.size();
        ps.r[v] = Rat(color.at(v)) * G + Rat(sidon[ri]) * eps;
    }

    for (std::size_t i = 0; i < n; ++i) {
        const GraphEdge& e = h.edges[i];
        std::size_t ki = (i + seed) % n;
        EdgeParams ep;
        bool u_low = ps.r.at(e.u) < ps.r.at(e.w);
        ep.v_end = u_low ? e.u : e.w;
        ep.w_end = u_low ? e.w : e.u;
        Rat perturb = Rat(Int(ki + 1)) * delta;
        ep.c = L / 32 + perturb;
        ep.p = Rat(15) * L / 32 + perturb;
        Rat gap = ps.r.at(ep.w_end) - ps.r.at(ep.v_end);
        ep.a = (L - gap) / 2;
        ep.q = L - ep.p;
        ep.b = L - ep.a;
        ep.d = L - ep.c;
        ep.s = 2;  // overwritten by choose_s
        ps.edges[e.id] = ep;
    }

    choose_s(h, ps, z, leaf_e);
    validate_parameters(h, ps);
    ConditionReport rep = verify_parameters(h, ps);
    if (!rep.all_pass()) throw std::logic_error("synthesis produced failing parameters");
    return SynthesizedModel{std::move(h), std::move(ps), z, leaf_e};
}

}  // namespace tropcurve
