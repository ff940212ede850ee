#pragma once

#include "tropcurve/embedding.hpp"
#include "tropcurve/poisson.hpp"
#include "tropcurve/resolution.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropcurve {

// Two loops glued at w, five marked points around each, and two four-point
// clusters carrying the break-divisor bumps. The g/d bump stems keep
// len_delta2 < len_delta3 and len_gamma3 < len_gamma2.
struct Genus2Config {
    Rat spacing = 1;
    std::optional<Rat> gamma_gap;    // default spacing/5
    std::optional<Rat> delta_gap;
    Rat len_gamma2 = Rat(2, 5), len_gamma3 = Rat(1, 5);
    Rat len_delta2 = Rat(1, 5), len_delta3 = Rat(2, 5);
    std::map<std::string, Rat> stem_lengths;  // overrides at a2,a3,a4,b2,b3,b4
    int max_retries = 14;
};

struct Genus2Result {
    EmbeddingState state;
    std::array<Divisor, 3> tau;  // tropical divisors the coordinates realize
    int retries = 0;
    Rat used_gamma2, used_gamma3, used_delta2, used_delta3;
};

namespace detail {

inline void validate_config(const Genus2Config& cfg, const Rat& ggap, const Rat& dgap) {
    if (cfg.spacing <= 0) throw std::invalid_argument("spacing must be positive");
    if (ggap <= 0 || dgap <= 0) throw std::invalid_argument("gaps must be positive");
    if (!(ggap < cfg.spacing / 3) || !(dgap < cfg.spacing / 3))
        throw std::invalid_argument("gaps must stay below a third of the spacing");
    if (!(cfg.len_delta2 < cfg.len_delta3))
        throw std::invalid_argument("need len_delta2 < len_delta3");
    if (!(cfg.len_gamma3 < cfg.len_gamma2))
        throw std::invalid_argument("need len_gamma3 < len_gamma2");
    for (const Rat& l : {cfg.len_gamma2, cfg.len_gamma3, cfg.len_delta2, cfg.len_delta3})
        if (l <= 0) throw std::invalid_argument("bump lengths must be positive");
}

inline MetricGraph genus2_graph(const Rat& s, const Rat& ggap, const Rat& dgap) {
    Rat gend = (s - 3 * ggap) / 2;  // stretches on both sides of the g cluster
    Rat dend = (s - 3 * dgap) / 2;
    std::vector<std::string> vs = {"w",  "a1", "a2", "a3", "a4", "a5", "b1", "b2", "b3",
                                   "b4", "b5", "g1", "g2", "g3", "g4", "d1", "d2", "d3", "d4"};
    // the g cluster is indexed from the a1 side, the d cluster from the b1 side
    std::vector<GraphEdge> es = {
        {"ag0", "w", "g4", gend},   {"ag1", "g4", "g3", ggap}, {"ag2", "g3", "g2", ggap},
        {"ag3", "g2", "g1", ggap},  {"ag4", "g1", "a1", gend}, {"aa1", "a1", "a2", s},
        {"aa2", "a2", "a3", s},     {"aa3", "a3", "a4", s},    {"aa4", "a4", "a5", s},
        {"aa5", "a5", "w", s},      {"bb0", "w", "b1", s},     {"bd0", "b1", "d1", dend},
        {"bd1", "d1", "d2", dgap},  {"bd2", "d2", "d3", dgap}, {"bd3", "d3", "d4", dgap},
        {"bd4", "d4", "b2", dend},  {"bb2", "b2", "b3", s},    {"bb3", "b3", "b4", s},
        {"bb4", "b4", "b5", s},     {"bb5", "b5", "w", s}};
    return build_graph(std::move(vs), std::move(es));
}

inline Divisor vertex_divisor(const MetricGraph& g,
                              std::vector<std::pair<std::string, int>> terms) {
    Divisor d;
    for (auto& [v, c] : terms) {
        if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex: " + v);
        d.add(GraphPoint::on_vertex(v), c);
    }
    return d;
}

}  // namespace detail

// Builds the preset embedding: the three tropical divisors, coordinate
// functions realizing the planar-hexagon picture, and ray bundles whose lifts
// share stems at the multi-lift points. Bump stem lengths are retried on a
// deterministic escalating schedule until the exact checker reports no
// crossing.
inline Genus2Result genus2_preset(const Genus2Config& cfg) {
    Rat s = cfg.spacing;
    Rat ggap = cfg.gamma_gap.value_or(s / 5);
    Rat dgap = cfg.delta_gap.value_or(s / 5);
    detail::validate_config(cfg, ggap, dgap);
    MetricGraph g = detail::genus2_graph(s, ggap, dgap);

    std::array<Divisor, 3> tau = {
        detail::vertex_divisor(g, {{"a1", 1}, {"a3", -1}, {"a4", -1}, {"b2", 1}, {"b3", 1}, {"b5", -1}}),
        detail::vertex_divisor(g, {{"a1", 1}, {"a3", -1}, {"a4", -1}, {"b1", -1}, {"b3", 1}, {"b4", 1},
                                   {"g1", -1}, {"g2", 1}, {"g3", 1}, {"g4", -1}}),
        detail::vertex_divisor(g, {{"a1", 1}, {"a2", 1}, {"a4", -1}, {"a5", -1}, {"d1", -1}, {"d2", 1},
                                   {"d3", 1}, {"d4", -1}})};

    // The coordinates realize the mirror picture: div(F_i) = -tau_i, so the
    // rays carry the table's coefficient vectors verbatim as directions.
    std::vector<PLFunction> fs;
    for (const Divisor& t : tau) {
        if (!is_principal(g, t)) throw std::logic_error("preset divisor is not principal");
        PLFunction f = solve_poisson(g, -t);
        fs.push_back(pl_shift(f, -f.vertex_values.at("w")));
    }

    auto stem_default = [&](const std::string& at, int idx) {
        auto it = cfg.stem_lengths.find(at);
        if (it != cfg.stem_lengths.end()) return it->second;
        return s * (Rat(97 + idx) / 97);
    };

    Rat lg2 = cfg.len_gamma2, lg3 = cfg.len_gamma3;
    Rat ld2 = cfg.len_delta2, ld3 = cfg.len_delta3;

    Genus2Result res;
    for (int attempt = 0;; ++attempt) {
        ExtendedSkeleton sk;
        auto bundle = [&](const std::string& v, const Rat& stem,
                          std::vector<std::pair<std::vector<long long>, std::string>> branches) {
            RayBundle b;
            b.at = GraphPoint::on_vertex(v);
            b.kind = PointKind::custom;
            b.label = v;
            b.stem_len = stem;
            for (auto& [c3, name] : branches) {
                BranchSpec br;
                for (long long x : c3) br.coeffs.push_back(Int(x));
                br.label = name;
                b.branches.push_back(std::move(br));
            }
            sk.bundles.push_back(std::move(b));
        };
        bundle("a1", 0, {{{-1, -1, -1}, "x1"}});
        bundle("a2", stem_default("a2", 0),
               {{{-1, -1, -1}, "x2,0"}, {{1, 0, 0}, "x2,1"}, {{0, 1, 0}, "x2,2"}});
        bundle("a3", stem_default("a3", 1), {{{1, 0, 0}, "x3,1"}, {{0, 1, 0}, "x3,2"}});
        bundle("a4", stem_default("a4", 2),
               {{{1, 0, 0}, "x4,1"}, {{0, 1, 0}, "x4,2"}, {{0, 0, 1}, "x4,3"}});
        bundle("a5", 0, {{{0, 0, 1}, "x5"}});
        bundle("b1", 0, {{{0, 1, 0}, "y1"}});
        bundle("b2", stem_default("b2", 3),
               {{{-1, -1, -1}, "y2,0"}, {{0, 1, 0}, "y2,2"}, {{0, 0, 1}, "y2,3"}});
        bundle("b3", stem_default("b3", 4), {{{-1, -1, -1}, "y3,0"}, {{0, 0, 1}, "y3,3"}});
        bundle("b4", stem_default("b4", 5),
               {{{-1, -1, -1}, "y4,0"}, {{1, 0, 0}, "y4,1"}, {{0, 0, 1}, "y4,3"}});
        bundle("b5", 0, {{{1, 0, 0}, "y5"}});
        bundle("g1", 0, {{{0, 1, 0}, "u1"}});
        bundle("g2", lg2, {{{-1, -1, -1}, "u2,0"}, {{1, 0, 0}, "u2,1"}, {{0, 0, 1}, "u2,3"}});
        bundle("g3", lg3, {{{-1, -1, -1}, "u3,0"}, {{1, 0, 0}, "u3,1"}, {{0, 0, 1}, "u3,3"}});
        bundle("g4", 0, {{{0, 1, 0}, "u4"}});
        bundle("d1", 0, {{{0, 0, 1}, "v1"}});
        bundle("d2", ld2, {{{-1, -1, -1}, "v2,0"}, {{1, 0, 0}, "v2,1"}, {{0, 1, 0}, "v2,2"}});
        bundle("d3", ld3, {{{-1, -1, -1}, "v3,0"}, {{1, 0, 0}, "v3,1"}, {{0, 1, 0}, "v3,2"}});
        bundle("d4", 0, {{{0, 0, 1}, "v4"}});

        EmbeddingState st = make_state(g, spanning_tree(g).complement, sk, fs);
        if (check_injectivity(st.curve).empty()) {
            res.state = std::move(st);
            res.tau = tau;
            res.retries = attempt;
            res.used_gamma2 = lg2;
            res.used_gamma3 = lg3;
            res.used_delta2 = ld2;
            res.used_delta3 = ld3;
            return res;
        }
        if (attempt >= cfg.max_retries)
            throw std::logic_error("genus-2 preset could not clear all crossings");
        // escalate on the spacing scale: push the bump tops clear of the
        // hexagons, keep the ordering constraints, and nudge every length
        // off coincidences
        int t = attempt + 1;
        lg3 = s * Rat(1 + t) * Rat(97 + 1, 97);
        lg2 = lg3 + ggap * (Rat(1, 2) + Rat(t, 997));
        ld2 = s * Rat(1 + t) * Rat(97 + 2, 97);
        ld3 = ld2 + dgap * (Rat(1, 2) + Rat(t, 997));
    }
}

// Structural checks of the preset: planarity of the two loops away from the
// bumps, the hexagon vertex images, injectivity, smoothness with the expected
// tangent lattices, unit weights, and distinct boundary limits.
inline ConditionReport verify_genus2(const Genus2Result& res) {
    ConditionReport rep;
    const EmbeddingState& st = res.state;
    const MetricGraph& g = st.graph;
    Rat s = g.edge("aa1").length;

    auto record = [&](const std::string& id, bool ok, const std::string& wit) {
        rep.results.push_back({id, ok, ok ? "" : wit});
    };

    {  // alpha loop in the x = y plane, beta loop in z = 0, away from bumps
        bool ok = true;
        std::string wit;
        for (const char* eid : {"ag0", "ag4", "aa1", "aa2", "aa3", "aa4", "aa5"})
            for (const auto& [o, v] : st.fs[0].edge_samples.at(eid))
                if (v != evaluate(g, st.fs[1], canonical(g, GraphPoint::on_edge(eid, o)))) {
                    ok = false;
                    wit = "x != y on " + std::string(eid);
                }
        for (const char* eid : {"bb0", "bd0", "bd4", "bb2", "bb3", "bb4", "bb5"})
            for (const auto& [o, v] : st.fs[2].edge_samples.at(eid))
                if (v != 0) {
                    ok = false;
                    wit = "z != 0 on " + std::string(eid);
                }
        record("planes", ok, wit);
    }

    {  // hexagon vertex images up to one signed permutation of coordinates
        std::vector<std::vector<Rat>> expect = {{0, 0, 0},  {0, 0, 1},   {-1, -1, 1},
                                                {-2, -2, 0}, {-2, -2, -1}, {-1, -1, -1}};
        for (auto& p : expect)
            for (Rat& x : p) x *= s;
        std::set<std::vector<Rat>> want(expect.begin(), expect.end());
        std::vector<std::vector<Rat>> got;
        for (const char* v : {"w", "a1", "a2", "a3", "a4", "a5"}) {
            std::vector<Rat> x;
            for (const PLFunction& f : st.fs) x.push_back(f.vertex_values.at(v));
            got.push_back(std::move(x));
        }
        bool ok = false;
        int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (int pi = 0; pi < 6 && !ok; ++pi)
            for (int sgn = 0; sgn < 8 && !ok; ++sgn) {
                std::set<std::vector<Rat>> mapped;
                for (const auto& x : got) {
                    std::vector<Rat> y(3);
                    for (int i = 0; i < 3; ++i)
                        y[i] = ((sgn >> i) & 1) ? Rat(-x[perm[pi][i]]) : x[perm[pi][i]];
                    mapped.insert(std::move(y));
                }
                ok = mapped == want;
            }
        record("hexagons", ok, "vertex images differ from the reference hexagons");
    }

    auto cols = check_injectivity(st.curve);
    record("injective", cols.empty(),
           cols.empty() ? "" : cols.front().a + " meets " + cols.front().b);

    {  // smooth everywhere
        auto prof = nonsmoothness_profile(st.curve);
        std::string wit;
        bool ok = true;
        for (const auto& [node, n] : prof)
            if (n != 0) {
                ok = false;
                wit = node + " has defect " + std::to_string(n);
                break;
            }
        record("smooth", ok, wit);
    }
    {  // tangent lattice at a1 is {x = y}, at w all of Z^3
        auto stars = node_stars(st.curve);
        bool ok = true;
        std::string wit;
        std::vector<IntVector> at_a1, at_w;
        for (const StarEntry& e : stars.at(vertex_node("a1"))) at_a1.push_back(IntVector{e.dir});
        for (const StarEntry& e : stars.at(vertex_node("w"))) at_w.push_back(IntVector{e.dir});
        for (const IntVector& v : at_a1)
            if (v.entries[0] != v.entries[1]) {
                ok = false;
                wit = "a1 direction leaves the x = y plane";
            }
        if (ok && (linear_rank(at_a1) != 2 || !is_saturated(at_a1))) {
            ok = false;
            wit = "a1 lattice is not the saturated rank-2 plane lattice";
        }
        if (ok && (linear_rank(at_w) != 3 || !is_saturated(at_w))) {
            ok = false;
            wit = "w lattice is not all of Z^3";
        }
        record("lattices", ok, wit);
    }
    {  // unit weights
        bool ok = true;
        for (const Segment& sg : st.curve.segments)
            if (sg.weight != 1) ok = false;
        for (const Ray& r : st.curve.rays)
            if (r.weight != 1) ok = false;
        record("weights", ok, "a piece has weight above 1");
    }
    {  // ray directions drawn from one sign-consistent primitive 4-set
        std::set<std::vector<Int>> allowed = {{Int(1), Int(1), Int(1)},
                                              {Int(-1), Int(0), Int(0)},
                                              {Int(0), Int(-1), Int(0)},
                                              {Int(0), Int(0), Int(-1)}};
        bool ok = true;
        std::string wit;
        for (const Ray& r : st.curve.rays)
            if (!allowed.count(r.dir)) {
                ok = false;
                wit = "ray " + r.name + " leaves the terminal direction set";
                break;
            }
        record("ray_directions", ok, wit);
    }
    {  // distinct limits at the boundary of tropical projective space
        auto lc = limit_collisions(st.curve, Compactification::tp);
        record("tp_limits_distinct", lc.empty(),
               lc.empty() ? "" : lc.front().first + " and " + lc.front().second);
    }
    {
        bool balanced = check_balancing(st.curve);
        record("balanced", balanced, "unbalanced image vertex");
    }
    record("fully_faithful_tp",
           classify_faithfulness(st.curve, Compactification::tp) == Faithfulness::fully_faithful,
           "not fully faithful in tropical projective space");
    return rep;
}

}  // namespace tropcurve
