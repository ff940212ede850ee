#pragma once

#include "tropcurve/embedding.hpp"
#include "tropcurve/lattice.hpp"
#include "tropcurve/poisson.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropcurve {

// A tropical embedding of a graph skeleton: the model, the designated
// spanning-tree complement, the ray bundles, the coordinate functions, and
// the derived curve.
struct EmbeddingState {
    MetricGraph graph;
    std::vector<std::string> complement;
    ExtendedSkeleton skeleton;
    std::vector<PLFunction> fs;
    EmbeddedTropicalCurve curve;
};

inline EmbeddingState make_state(const MetricGraph& g, std::vector<std::string> complement,
                                 ExtendedSkeleton sk, std::vector<PLFunction> fs) {
    EmbeddingState st;
    st.graph = g;
    st.complement = std::move(complement);
    st.skeleton = std::move(sk);
    st.fs = std::move(fs);
    st.curve = tropicalize(st.graph, st.skeleton, st.fs);
    return st;
}

// ---------------------------------------------------------------------------
// Local degree of non-smoothness

struct StarEntry {
    std::vector<Int> dir;  // primitive outgoing direction
    bool is_ray = false;
};

inline std::map<std::string, std::vector<StarEntry>> node_stars(const EmbeddedTropicalCurve& c) {
    std::map<std::string, std::vector<StarEntry>> stars;
    auto dir_between = [&](const std::vector<Rat>& from, const std::vector<Rat>& to) {
        std::vector<Rat> d(c.dim);
        for (std::size_t i = 0; i < c.dim; ++i) d[i] = to[i] - from[i];
        return primitive_direction(d);
    };
    for (const Segment& s : c.segments) {
        stars[s.node_a].push_back({dir_between(s.a, s.b), false});
        stars[s.node_b].push_back({dir_between(s.b, s.a), false});
    }
    for (const Ray& r : c.rays) stars[r.node].push_back({r.dir, true});
    return stars;
}

inline std::size_t nonsmoothness_from_star(const std::vector<StarEntry>& star) {
    std::vector<IntVector> dirs;
    dirs.reserve(star.size());
    for (const StarEntry& e : star) dirs.push_back(IntVector{e.dir});
    std::size_t k = max_saturated_rank_subset(dirs);
    return star.size() > k + 1 ? star.size() - 1 - k : 0;
}

// deg(x) - 1 - max rank of a saturated family of tangent directions at x.
// Zero exactly at the smooth points.
inline std::size_t local_nonsmoothness(const EmbeddedTropicalCurve& c, const std::string& node) {
    auto stars = node_stars(c);
    auto it = stars.find(node);
    if (it == stars.end())
        throw std::invalid_argument("not a finite vertex of the embedded curve: " + node);
    return nonsmoothness_from_star(it->second);
}

inline std::map<std::string, std::size_t> nonsmoothness_profile(const EmbeddedTropicalCurve& c) {
    std::map<std::string, std::size_t> out;
    for (const auto& [node, star] : node_stars(c)) out[node] = nonsmoothness_from_star(star);
    return out;
}

inline std::size_t max_nonsmoothness(const std::map<std::string, std::size_t>& profile) {
    std::size_t m = 0;
    for (const auto& [node, n] : profile) m = std::max(m, n);
    return m;
}

// ---------------------------------------------------------------------------
// One resolution step: append a coordinate that lowers every positive local
// degree of non-smoothness by one.

struct StepReport {
    std::map<std::string, std::size_t> before, after;
    Divisor correction;     // the divisor of the appended coordinate
    std::size_t dim_after = 0;
    bool acted = false;     // false when the input was already smooth
};

namespace detail {

struct GraphSide {
    std::string edge;
    Rat at;        // offset of the node on the edge
    int sign;      // +1 toward larger offsets
    Rat span;      // distance to the next breakpoint that way
    std::vector<Int> dir;
};

}  // namespace detail

inline EmbeddingState resolution_step(const EmbeddingState& st, StepReport* report = nullptr) {
    const MetricGraph& g = st.graph;
    std::size_t k = st.fs.size();
    auto stars = node_stars(st.curve);
    std::map<std::string, std::size_t> profile;
    for (const auto& [node, star] : stars) profile[node] = nonsmoothness_from_star(star);
    if (report) {
        report->before = profile;
        report->dim_after = k;
        report->acted = false;
    }

    bool any = false;
    for (const auto& [node, n] : profile)
        if (n > 0) any = true;
    if (!any) return st;  // already smooth

    auto offsets = edge_breakpoint_offsets(g, st.skeleton, st.fs);

    auto image_at = [&](const GraphPoint& p) {
        std::vector<Rat> x(k);
        for (std::size_t i = 0; i < k; ++i) x[i] = evaluate(g, st.fs[i], p);
        return x;
    };
    auto side_dir = [&](const std::string& eid, const Rat& at, int sign, const Rat& span) {
        GraphPoint here = canonical(g, GraphPoint::on_edge(eid, at));
        GraphPoint there = canonical(g, GraphPoint::on_edge(eid, at + Rat(sign) * span));
        std::vector<Rat> a = image_at(here), b = image_at(there);
        std::vector<Rat> d(k);
        for (std::size_t i = 0; i < k; ++i) d[i] = b[i] - a[i];
        return primitive_direction(d);
    };

    // graph sides of a node
    auto sides_of = [&](const std::string& node) {
        std::vector<detail::GraphSide> sides;
        const GraphPoint& pt = st.curve.node_points.at(node);
        if (pt.at_vertex) {
            for (const GraphEdge& e : g.edges) {
                const std::vector<Rat>& offs = offsets.at(e.id);
                if (e.u == pt.vertex) {
                    Rat span = offs[1] - offs[0];
                    sides.push_back({e.id, Rat(0), +1, span, side_dir(e.id, Rat(0), +1, span)});
                }
                if (e.w == pt.vertex) {
                    Rat span = offs[offs.size() - 1] - offs[offs.size() - 2];
                    sides.push_back({e.id, e.length, -1, span, side_dir(e.id, e.length, -1, span)});
                }
            }
        } else {
            const std::vector<Rat>& offs = offsets.at(pt.edge);
            auto it = std::lower_bound(offs.begin(), offs.end(), pt.offset);
            std::size_t i = it - offs.begin();
            sides.push_back({pt.edge, pt.offset, -1, pt.offset - offs[i - 1],
                             side_dir(pt.edge, pt.offset, -1, pt.offset - offs[i - 1])});
            sides.push_back({pt.edge, pt.offset, +1, offs[i + 1] - pt.offset,
                             side_dir(pt.edge, pt.offset, +1, offs[i + 1] - pt.offset)});
        }
        return sides;
    };

    Divisor correction;
    PLFunction f_new = pl_zero(g);
    std::map<std::string, std::set<Rat>> placed;  // new support offsets per edge

    auto add_profile = [&](const std::string& eid, std::vector<std::pair<Rat, Rat>> pts) {
        std::sort(pts.begin(), pts.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        PLFunction local = pl_zero(g);
        const GraphEdge& e = g.edge(eid);
        std::vector<std::pair<Rat, Rat>> s = {{Rat(0), Rat(0)}};
        for (auto& pv : pts) s.push_back(pv);
        s.push_back({e.length, Rat(0)});
        local.edge_samples[eid] = std::move(s);
        validate(g, local);
        f_new = pl_add(g, f_new, local);
    };

    for (const auto& [node, n] : profile) {
        if (n == 0) continue;
        if (!st.curve.node_points.count(node))
            throw std::logic_error("non-smooth point off the graph: " + node);
        std::vector<detail::GraphSide> sides = sides_of(node);
        const std::vector<StarEntry>& star = stars.at(node);
        std::size_t deg = star.size();
        std::size_t rays_here = 0;
        for (const StarEntry& e : star) rays_here += e.is_ray ? 1 : 0;
        if (sides.size() + rays_here != deg)
            throw std::logic_error("stem-adjacent vertex cannot be re-embedded: " + node);
        std::size_t ksat = deg - 1 - n;
        if (deg < ksat + 2) throw std::logic_error("degenerate star at " + node);

        // family candidates: rays first so the chosen family prefers them
        std::vector<std::vector<Int>> dirs;
        std::vector<bool> from_side;
        std::vector<std::size_t> side_index;
        for (const StarEntry& e : star)
            if (e.is_ray) {
                dirs.push_back(e.dir);
                from_side.push_back(false);
                side_index.push_back(0);
            }
        for (std::size_t i = 0; i < sides.size(); ++i) {
            dirs.push_back(sides[i].dir);
            from_side.push_back(true);
            side_index.push_back(i);
        }

        std::vector<std::size_t> family;
        if (ksat > 0) {
            bool found = lattice_family_search(dirs, ksat, family);
            if (!found) throw std::logic_error("no saturated family at " + node);
        }
        std::set<std::size_t> in_family(family.begin(), family.end());
        std::vector<std::size_t> free_sides;
        for (std::size_t i = 0; i < dirs.size(); ++i)
            if (!in_family.count(i) && from_side[i]) free_sides.push_back(side_index[i]);
        if (free_sides.size() < 2)
            throw std::logic_error("fewer than two free directions at " + node);

        const detail::GraphSide& s0 = sides[free_sides[0]];
        const detail::GraphSide& s1 = sides[free_sides[1]];
        Rat eps = std::min(s0.span, s1.span) / 3;

        // bump: dips along side 0, rises along side 1, closed on both sides
        for (int which = 0; which < 2; ++which) {
            const detail::GraphSide& sd = which == 0 ? s0 : s1;
            Rat sgn = which == 0 ? Rat(-1) : Rat(1);
            Rat po = sd.at + Rat(sd.sign) * eps / 4;
            Rat qo = sd.at + Rat(sd.sign) * eps / 2;
            Rat ro = sd.at + Rat(sd.sign) * eps * 3 / 4;
            correction.add(GraphPoint::on_edge(sd.edge, po), which == 0 ? 1 : -1);
            correction.add(GraphPoint::on_edge(sd.edge, qo), which == 0 ? 1 : -1);
            correction.add(GraphPoint::on_edge(sd.edge, ro), which == 0 ? -1 : 1);
            add_profile(sd.edge, {{po, sgn * eps / 4}, {qo, sgn * eps / 4}, {ro, Rat(0)}});
            placed[sd.edge].insert({po, qo, ro});
        }
    }

    // one closed tent per complement edge, inside the widest free gap
    for (const std::string& eid : st.complement) {
        g.edge(eid);  // id validation
        std::set<Rat> offs(offsets.at(eid).begin(), offsets.at(eid).end());
        for (const Rat& o : placed[eid]) offs.insert(o);
        Rat lo = 0, hi = 0;
        Rat prev;
        bool first = true;
        for (const Rat& o : offs) {
            if (!first && o - prev > hi - lo) {
                lo = prev;
                hi = o;
            }
            prev = o;
            first = false;
        }
        Rat w = hi - lo;
        if (w <= 0) throw std::logic_error("no room for a tent on " + eid);
        Rat s1 = lo + w / 5, s2 = lo + w * 2 / 5, s3 = lo + w * 3 / 5, s4 = lo + w * 4 / 5;
        correction.add(GraphPoint::on_edge(eid, s1), 1);
        correction.add(GraphPoint::on_edge(eid, s2), -1);
        correction.add(GraphPoint::on_edge(eid, s3), -1);
        correction.add(GraphPoint::on_edge(eid, s4), 1);
        add_profile(eid, {{s1, Rat(0)}, {s2, w / 5}, {s3, w / 5}, {s4, Rat(0)}});
    }

    if (!(divisor_of(g, f_new) == correction))
        throw std::logic_error("appended coordinate does not match its divisor");
    if (!is_principal(g, correction))
        throw std::logic_error("correction divisor is not principal");

    EmbeddingState out;
    out.graph = g;
    out.complement = st.complement;
    out.skeleton = st.skeleton;
    for (RayBundle& b : out.skeleton.bundles)
        for (BranchSpec& br : b.branches) br.coeffs.push_back(0);
    for (const auto& [pt, c] : correction.coeffs) {
        RayBundle b;
        b.at = pt;
        b.kind = PointKind::custom;
        b.label = "r" + std::to_string(k + 1) + "@" + point_str(pt);
        std::vector<Int> coeffs(k + 1, Int(0));
        coeffs[k] = c;
        b.branches.push_back({std::move(coeffs), b.label});
        out.skeleton.bundles.push_back(std::move(b));
    }
    out.fs = st.fs;
    out.fs.push_back(std::move(f_new));
    out.curve = tropicalize(out.graph, out.skeleton, out.fs);

    if (report) {
        report->acted = true;
        report->correction = correction;
        report->dim_after = k + 1;
        for (const auto& [node, star] : node_stars(out.curve))
            report->after[node] = nonsmoothness_from_star(star);
    }
    return out;
}

// Iterates resolution steps until every finite vertex is smooth, verifying the
// measured decrease at every step.
inline EmbeddingState resolve_to_smooth(const EmbeddingState& st,
                                        std::vector<StepReport>* reports = nullptr) {
    std::size_t budget = max_nonsmoothness(nonsmoothness_profile(st.curve));
    EmbeddingState cur = st;
    for (std::size_t step = 0; step < budget; ++step) {
        StepReport rep;
        EmbeddingState next = resolution_step(cur, &rep);
        if (!rep.acted) break;
        for (const auto& [node, n] : rep.before) {
            std::size_t expect = n > 0 ? n - 1 : 0;
            auto it = rep.after.find(node);
            if (it == rep.after.end() || it->second > expect)
                throw std::logic_error("non-smoothness did not decrease at " + node);
        }
        if (reports) reports->push_back(rep);
        cur = std::move(next);
    }
    if (max_nonsmoothness(nonsmoothness_profile(cur.curve)) != 0)
        throw std::logic_error("resolution did not reach a smooth embedding");
    return cur;
}

}  // namespace tropcurve
