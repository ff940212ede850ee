#pragma once

#include "tropcurve/construction.hpp"
#include "tropcurve/lattice.hpp"
#include "tropcurve/metric_graph.hpp"
#include "tropcurve/pl_function.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tropcurve {

// ---------------------------------------------------------------------------
// Extended skeleton: ray bundles at marked points and vertices

enum class PointKind { vertex, c, a, p, q, b, d, custom };

inline std::string kind_str(PointKind k) {
    switch (k) {
        case PointKind::vertex: return "v";
        case PointKind::c: return "c";
        case PointKind::a: return "a";
        case PointKind::p: return "p";
        case PointKind::q: return "q";
        case PointKind::b: return "b";
        case PointKind::d: return "d";
        case PointKind::custom: return "x";
    }
    return "?";
}

// One modeled lifted point: its coefficient in each coordinate divisor.
struct BranchSpec {
    std::vector<Int> coeffs;
    std::string label;
};

struct RayBundle {
    GraphPoint at;
    PointKind kind = PointKind::custom;
    std::string label;
    std::string edge_id;  // owning edge for marked points, empty for vertices
    Rat stem_len = 0;
    std::vector<BranchSpec> branches;
};

struct ExtendedSkeleton {
    std::vector<RayBundle> bundles;
};

// Bundles for the three-function construction: one branch per marked point
// with coefficients read off the divisors, one branch per vertex.
inline ExtendedSkeleton extended_skeleton(const MetricGraph& g, const ParameterSet& ps) {
    validate_parameters(g, ps);
    ExtendedSkeleton sk;
    for (const GraphEdge& e : g.edges) {
        const EdgeParams& ep = ps.edges.at(e.id);
        bool comp = ps.is_complement(e.id);
        auto add = [&](MarkKind mk, std::vector<Int> coeffs) {
            RayBundle b;
            b.at = marked_point(g, ps, e.id, mk);
            b.kind = static_cast<PointKind>(static_cast<int>(PointKind::c) +
                                            static_cast<int>(mk) - static_cast<int>(MarkKind::c));
            b.label = std::string(1, mark_letter(mk)) + "@" + e.id;
            b.edge_id = e.id;
            b.branches.push_back({std::move(coeffs), b.label});
            sk.bundles.push_back(std::move(b));
        };
        if (comp) {
            add(MarkKind::c, {Int(0), Int(-1), Int(0)});
            add(MarkKind::a, {Int(0), Int(1), Int(1)});
            add(MarkKind::b, {Int(0), Int(1), Int(-1)});
            add(MarkKind::d, {Int(0), Int(-1), Int(0)});
        } else {
            add(MarkKind::a, {Int(0), Int(0), Int(1)});
            add(MarkKind::b, {Int(0), Int(0), Int(-1)});
        }
        add(MarkKind::p, {Int(-1), -ep.s, Int(0)});
        add(MarkKind::q, {Int(-1), -ep.s, Int(0)});
    }
    for (const std::string& v : g.vertices) {
        Int ssum = 0;
        for (const GraphEdge& e : g.edges) {
            if (e.u == v) ssum += ps.edges.at(e.id).s;
            if (e.w == v) ssum += ps.edges.at(e.id).s;
        }
        RayBundle b;
        b.at = GraphPoint::on_vertex(v);
        b.kind = PointKind::vertex;
        b.label = "v@" + v;
        b.branches.push_back({{Int(g.degree(v)), ssum, Int(0)}, b.label});
        sk.bundles.push_back(std::move(b));
    }
    return sk;
}

// ---------------------------------------------------------------------------
// Embedded tropical curve

struct Segment {
    std::vector<Rat> a, b;
    Int weight = 1;
    std::string node_a, node_b;
};

struct Ray {
    std::vector<Rat> base;
    std::vector<Int> dir;  // primitive
    Int weight = 1;
    std::string node;
    std::string name;
    PointKind kind = PointKind::custom;
    std::string edge_id;
};

struct EmbeddedTropicalCurve {
    std::size_t dim = 0;
    std::vector<Segment> segments;
    std::vector<Ray> rays;
    std::map<std::string, std::vector<Rat>> node_coords;
    std::map<std::string, GraphPoint> node_points;  // graph locations, where applicable

    void rebuild_nodes() {
        node_coords.clear();
        auto put = [&](const std::string& n, const std::vector<Rat>& c) {
            auto [it, fresh] = node_coords.emplace(n, c);
            if (!fresh && it->second != c)
                throw std::logic_error("node " + n + " has two image locations");
        };
        for (const Segment& s : segments) {
            put(s.node_a, s.a);
            put(s.node_b, s.b);
        }
        for (const Ray& r : rays) put(r.node, r.base);
    }
};

// gcd of the coordinate slopes along one edge of the image.
inline Int stretching_factor(const std::vector<Int>& slopes) {
    Int g = 0;
    for (const Int& s : slopes) g = int_gcd(g, s);
    if (g == 0) throw std::invalid_argument("collapsed edge");
    return g;
}

inline std::vector<Int> primitive_direction(const std::vector<Rat>& d) {
    Int scale = 1;
    for (const Rat& x : d) scale = int_lcm(scale, rat_den(x));
    std::vector<Int> v;
    v.reserve(d.size());
    for (const Rat& x : d) v.push_back(rat_num(x) * (scale / rat_den(x)));
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    if (g == 0) throw std::invalid_argument("zero direction");
    for (Int& x : v) x /= g;
    return v;
}

inline std::string vertex_node(const std::string& v) { return "v:" + v; }
inline std::string edge_node(const std::string& e, const Rat& off) {
    return "e:" + e + "@" + rat_str(off);
}
inline std::string point_node(const MetricGraph& g, const GraphPoint& p0) {
    GraphPoint p = canonical(g, p0);
    return p.at_vertex ? vertex_node(p.vertex) : edge_node(p.edge, p.offset);
}

// Sorted breakpoint offsets per edge: ends, function breakpoints, bundle points.
inline std::map<std::string, std::vector<Rat>> edge_breakpoint_offsets(
    const MetricGraph& g, const ExtendedSkeleton& sk, const std::vector<PLFunction>& fs) {
    std::map<std::string, std::vector<Rat>> out;
    for (const GraphEdge& e : g.edges) {
        std::set<Rat> offs = {Rat(0), e.length};
        for (const PLFunction& f : fs)
            for (const auto& [o, v] : f.edge_samples.at(e.id)) offs.insert(o);
        for (const RayBundle& b : sk.bundles) {
            GraphPoint pt = canonical(g, b.at);
            if (!pt.at_vertex && pt.edge == e.id) offs.insert(pt.offset);
        }
        out[e.id] = std::vector<Rat>(offs.begin(), offs.end());
    }
    return out;
}

// Image of the extended skeleton under x -> (F_1(x), ..., F_k(x)).
// Finite edges map to segments weighted by the gcd of their slopes, stems to
// segments, branches to rays with direction minus the coefficient vector.
inline EmbeddedTropicalCurve tropicalize(const MetricGraph& g, const ExtendedSkeleton& sk,
                                         const std::vector<PLFunction>& fs) {
    std::size_t k = fs.size();
    EmbeddedTropicalCurve curve;
    curve.dim = k;
    for (const PLFunction& f : fs)
        if (!is_integral(g, f)) throw std::invalid_argument("coordinate function is not integral");

    std::vector<Divisor> divs;
    divs.reserve(k);
    for (const PLFunction& f : fs) divs.push_back(divisor_of(g, f));

    // bundle consistency: branch coefficients must sum to the divisor coefficients
    std::set<GraphPoint> bundle_points;
    for (const RayBundle& b : sk.bundles) {
        GraphPoint pt = canonical(g, b.at);
        if (!bundle_points.insert(pt).second)
            throw std::invalid_argument("two bundles at " + point_str(pt));
        for (std::size_t i = 0; i < k; ++i) {
            Int sum = 0;
            for (const BranchSpec& br : b.branches) {
                if (br.coeffs.size() != k)
                    throw std::invalid_argument("branch dimension mismatch at " + b.label);
                sum += br.coeffs[i];
            }
            if (sum != divs[i].at(pt))
                throw std::invalid_argument("coefficient mismatch at " + b.label);
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (const auto& [pt, c] : divs[i].coeffs)
            if (!bundle_points.count(pt))
                throw std::invalid_argument("divisor support without a bundle at " + point_str(pt));

    auto image_at = [&](const GraphPoint& p) {
        std::vector<Rat> x;
        x.reserve(k);
        for (const PLFunction& f : fs) x.push_back(evaluate(g, f, p));
        return x;
    };

    auto note_point = [&](const std::string& node, const GraphPoint& p) {
        curve.node_points.emplace(node, p);
    };

    // finite part
    auto offsets = edge_breakpoint_offsets(g, sk, fs);
    for (const GraphEdge& e : g.edges) {
        const std::vector<Rat>& sorted = offsets.at(e.id);
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
            GraphPoint pa = canonical(g, GraphPoint::on_edge(e.id, sorted[i]));
            GraphPoint pb = canonical(g, GraphPoint::on_edge(e.id, sorted[i + 1]));
            Segment s;
            s.a = image_at(pa);
            s.b = image_at(pb);
            std::vector<Int> slopes;
            Rat len = sorted[i + 1] - sorted[i];
            for (std::size_t j = 0; j < k; ++j) {
                Rat sl = (s.b[j] - s.a[j]) / len;
                if (rat_den(sl) != 1) throw std::logic_error("non-integer slope on " + e.id);
                slopes.push_back(rat_num(sl));
            }
            s.weight = stretching_factor(slopes);  // throws on a collapsed edge
            s.node_a = point_node(g, pa);
            s.node_b = point_node(g, pb);
            note_point(s.node_a, pa);
            note_point(s.node_b, pb);
            curve.segments.push_back(std::move(s));
        }
    }

    // stems and rays
    for (const RayBundle& b : sk.bundles) {
        GraphPoint pt = canonical(g, b.at);
        std::vector<Rat> base = image_at(pt);
        std::string base_node = point_node(g, pt);
        if (b.stem_len > 0) {
            std::vector<Int> stem_slope(k, Int(0));
            for (const BranchSpec& br : b.branches)
                for (std::size_t i = 0; i < k; ++i) stem_slope[i] -= br.coeffs[i];
            Segment s;
            s.a = base;
            s.b = base;
            for (std::size_t i = 0; i < k; ++i) s.b[i] += b.stem_len * stem_slope[i];
            s.weight = stretching_factor(stem_slope);
            s.node_a = base_node;
            s.node_b = "t:" + b.label;
            base = s.b;
            base_node = s.node_b;
            curve.segments.push_back(std::move(s));
        }
        for (const BranchSpec& br : b.branches) {
            std::vector<Int> d;
            d.reserve(k);
            for (const Int& c : br.coeffs) d.push_back(-c);
            Ray r;
            r.base = base;
            r.weight = stretching_factor(d);
            for (Int& x : d) x /= r.weight;
            r.dir = std::move(d);
            r.node = base_node;
            r.name = (br.label == b.label) ? b.label : b.label + "/" + br.label;
            r.kind = b.kind;
            r.edge_id = b.edge_id;
            curve.rays.push_back(std::move(r));
        }
    }

    curve.rebuild_nodes();
    return curve;
}

// ---------------------------------------------------------------------------
// Balancing

// At every image point: sum of weight * primitive outgoing direction over the
// incident segment ends and rays. Returns the violating points, if any.
inline std::vector<std::string> balancing_violations(const EmbeddedTropicalCurve& c) {
    std::map<std::vector<Rat>, std::vector<Rat>> sums;
    std::map<std::vector<Rat>, std::string> names;
    auto accumulate = [&](const std::vector<Rat>& at, const std::vector<Rat>& toward,
                          const Int& w, const std::string& nm) {
        std::vector<Rat> d(c.dim);
        for (std::size_t i = 0; i < c.dim; ++i) d[i] = toward[i] - at[i];
        std::vector<Int> prim = primitive_direction(d);
        auto it = sums.find(at);
        if (it == sums.end()) it = sums.emplace(at, std::vector<Rat>(c.dim, Rat(0))).first;
        for (std::size_t i = 0; i < c.dim; ++i) it->second[i] += Rat(w) * Rat(prim[i]);
        names.emplace(at, nm);
    };
    for (const Segment& s : c.segments) {
        accumulate(s.a, s.b, s.weight, s.node_a);
        accumulate(s.b, s.a, s.weight, s.node_b);
    }
    for (const Ray& r : c.rays) {
        std::vector<Rat> toward = r.base;
        for (std::size_t i = 0; i < c.dim; ++i) toward[i] += Rat(r.dir[i]);
        accumulate(r.base, toward, r.weight, r.node);
    }
    std::vector<std::string> bad;
    for (const auto& [at, sum] : sums)
        for (const Rat& x : sum)
            if (x != 0) {
                bad.push_back(names.at(at));
                break;
            }
    return bad;
}

inline bool check_balancing(const EmbeddedTropicalCurve& c) {
    return balancing_violations(c).empty();
}

// ---------------------------------------------------------------------------
// Exact pairwise intersection checking

struct Collision {
    std::string a, b;
    std::string description;
};

namespace detail {

struct Piece {
    std::vector<Rat> A;
    std::vector<Rat> U;       // direction; param range [0, tmax] or [0, inf)
    bool bounded = true;
    std::vector<std::string> prov;
    std::string name;
};

inline bool coords_equal(const std::vector<Rat>& a, const std::vector<Rat>& b) { return a == b; }

// interval on piece P1's parameter axis
struct ParamInterval {
    bool lo_inf = false, hi_inf = false;
    Rat lo, hi;
};

struct PairHit {
    bool any = false;
    bool interval = false;
    std::vector<Rat> point;
};

inline PairHit intersect_pieces(const Piece& P, const Piece& Q) {
    std::size_t k = P.A.size();
    bool parallel = true;
    for (std::size_t i = 0; i < k && parallel; ++i)
        for (std::size_t j = i + 1; j < k && parallel; ++j)
            if (P.U[i] * Q.U[j] - P.U[j] * Q.U[i] != 0) parallel = false;

    std::vector<Rat> W(k);
    for (std::size_t i = 0; i < k; ++i) W[i] = Q.A[i] - P.A[i];

    PairHit hit;
    if (parallel) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (P.U[i] * W[j] - P.U[j] * W[i] != 0) return hit;  // distinct parallel lines
        std::size_t ax = 0;
        while (P.U[ax] == 0) ++ax;
        Rat t0 = W[ax] / P.U[ax];
        Rat rho = Q.U[ax] / P.U[ax];
        ParamInterval qi;  // Q's params mapped onto P's axis
        if (Q.bounded) {
            Rat t1 = t0 + rho;
            qi.lo = std::min(t0, t1);
            qi.hi = std::max(t0, t1);
        } else if (rho > 0) {
            qi.lo = t0;
            qi.hi_inf = true;
        } else {
            qi.hi = t0;
            qi.lo_inf = true;
        }
        ParamInterval pi;
        pi.lo = 0;
        if (P.bounded) pi.hi = 1;
        else pi.hi_inf = true;
        // intersect
        bool lo_inf = pi.lo_inf && qi.lo_inf;
        bool hi_inf = pi.hi_inf && qi.hi_inf;
        Rat lo = qi.lo_inf ? pi.lo : (pi.lo_inf ? qi.lo : std::max(pi.lo, qi.lo));
        Rat hi = qi.hi_inf ? (pi.hi_inf ? Rat(0) : pi.hi) : (pi.hi_inf ? qi.hi : std::min(pi.hi, qi.hi));
        if (!lo_inf && !hi_inf && lo > hi) return hit;
        hit.any = true;
        if (lo_inf || hi_inf || lo < hi) {
            hit.interval = true;
            return hit;
        }
        hit.point.resize(k);
        for (std::size_t i = 0; i < k; ++i) hit.point[i] = P.A[i] + lo * P.U[i];
        return hit;
    }

    std::size_t bi = 0, bj = 0;
    Rat det = 0;
    for (std::size_t i = 0; i < k && det == 0; ++i)
        for (std::size_t j = i + 1; j < k && det == 0; ++j) {
            Rat d = Q.U[i] * P.U[j] - P.U[i] * Q.U[j];
            if (d != 0) {
                det = d;
                bi = i;
                bj = j;
            }
        }
    Rat t = (Q.U[bi] * W[bj] - W[bi] * Q.U[bj]) / det;
    Rat s = (P.U[bi] * W[bj] - W[bi] * P.U[bj]) / det;
    if (t < 0 || s < 0) return hit;
    if (P.bounded && t > 1) return hit;
    if (Q.bounded && s > 1) return hit;
    for (std::size_t i = 0; i < k; ++i)
        if (P.A[i] + t * P.U[i] != Q.A[i] + s * Q.U[i]) return hit;
    hit.any = true;
    hit.point.resize(k);
    for (std::size_t i = 0; i < k; ++i) hit.point[i] = P.A[i] + t * P.U[i];
    return hit;
}

struct Box {
    std::vector<double> lo, hi;
};

inline double pad_down(double x) { return x - (std::fabs(x) * 1e-9 + 1e-9); }
inline double pad_up(double x) { return x + (std::fabs(x) * 1e-9 + 1e-9); }

inline Box piece_box(const Piece& p) {
    std::size_t k = p.A.size();
    Box b;
    b.lo.resize(k);
    b.hi.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        double a = to_double(p.A[i]);
        if (p.bounded) {
            double c = to_double(Rat(p.A[i] + p.U[i]));
            b.lo[i] = pad_down(std::min(a, c));
            b.hi[i] = pad_up(std::max(a, c));
        } else {
            b.lo[i] = p.U[i] < 0 ? -1e300 : pad_down(a);
            b.hi[i] = p.U[i] > 0 ? 1e300 : pad_up(a);
        }
    }
    return b;
}

inline bool boxes_overlap(const Box& a, const Box& b) {
    for (std::size_t i = 0; i < a.lo.size(); ++i)
        if (a.hi[i] < b.lo[i] || b.hi[i] < a.lo[i]) return false;
    return true;
}

inline std::vector<Piece> curve_pieces(const EmbeddedTropicalCurve& c) {
    std::vector<Piece> ps;
    ps.reserve(c.segments.size() + c.rays.size());
    for (const Segment& s : c.segments) {
        Piece p;
        p.A = s.a;
        p.U.resize(c.dim);
        for (std::size_t i = 0; i < c.dim; ++i) p.U[i] = s.b[i] - s.a[i];
        p.bounded = true;
        p.prov = {s.node_a, s.node_b};
        p.name = "seg " + s.node_a + " .. " + s.node_b;
        ps.push_back(std::move(p));
    }
    for (const Ray& r : c.rays) {
        Piece p;
        p.A = r.base;
        p.U.resize(c.dim);
        for (std::size_t i = 0; i < c.dim; ++i) p.U[i] = Rat(r.dir[i]);
        p.bounded = false;
        p.prov = {r.node};
        p.name = "ray " + r.name;
        ps.push_back(std::move(p));
    }
    return ps;
}

}  // namespace detail

// Exact pairwise intersection tests among segments and rays. Intersections at
// the shared image point of combinatorially adjacent pieces are allowed;
// anything else is reported. `prefilter` skips pairs whose padded bounding
// boxes are disjoint; `jobs` splits the pair loop across threads.
inline std::vector<Collision> check_injectivity(const EmbeddedTropicalCurve& c,
                                                unsigned jobs = 1, bool prefilter = true) {
    std::vector<detail::Piece> ps = detail::curve_pieces(c);
    std::vector<detail::Box> boxes;
    if (prefilter) {
        boxes.reserve(ps.size());
        for (const detail::Piece& p : ps) boxes.push_back(detail::piece_box(p));
    }

    auto test_pair = [&](std::size_t i, std::size_t j, std::vector<Collision>& out) {
        if (prefilter && !detail::boxes_overlap(boxes[i], boxes[j])) return;
        detail::PairHit hit = detail::intersect_pieces(ps[i], ps[j]);
        if (!hit.any) return;
        if (hit.interval) {
            out.push_back({ps[i].name, ps[j].name, "overlap along a segment"});
            return;
        }
        for (const std::string& na : ps[i].prov)
            for (const std::string& nb : ps[j].prov)
                if (na == nb && c.node_coords.at(na) == hit.point) return;  // shared endpoint
        std::string where;
        for (const Rat& x : hit.point) where += (where.empty() ? "(" : ", ") + rat_str(x);
        out.push_back({ps[i].name, ps[j].name, "meet at " + where + ")"});
    };

    std::size_t n = ps.size();
    std::vector<Collision> out;
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) test_pair(i, j, out);
    } else {
        std::vector<std::vector<Collision>> parts(jobs);
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w)
            threads.emplace_back([&, w]() {
                for (std::size_t i = w; i < n; i += jobs)
                    for (std::size_t j = i + 1; j < n; ++j) test_pair(i, j, parts[w]);
            });
        for (auto& t : threads) t.join();
        for (auto& part : parts)
            for (auto& col : part) out.push_back(std::move(col));
    }
    std::sort(out.begin(), out.end(), [](const Collision& x, const Collision& y) {
        return std::tie(x.a, x.b, x.description) < std::tie(y.a, y.b, y.description);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Boundary limits and faithfulness

enum class Compactification { tp, p1cube };

struct LimitCoord {
    int sign = 0;  // -1: -inf, 0: finite, +1: +inf
    Rat value;     // meaningful when finite

    bool operator==(const LimitCoord& o) const {
        return sign == o.sign && (sign != 0 || value == o.value);
    }
    bool operator<(const LimitCoord& o) const {
        if (sign != o.sign) return sign < o.sign;
        return sign == 0 && value < o.value;
    }
};

struct BoundaryPoint {
    Compactification tag = Compactification::p1cube;
    std::vector<LimitCoord> coords;

    bool operator==(const BoundaryPoint& o) const { return tag == o.tag && coords == o.coords; }
    bool operator<(const BoundaryPoint& o) const {
        if (tag != o.tag) return tag < o.tag;
        return coords < o.coords;
    }
};

// Limit of base + t*dir as t grows: per coordinate in a product of tropical
// lines; for tropical projective space, append the homogeneous coordinate
// (direction 0, base 0) and keep the coordinates of maximal growth.
inline BoundaryPoint boundary_limit(const Ray& r, Compactification comp) {
    BoundaryPoint bp;
    bp.tag = comp;
    if (comp == Compactification::p1cube) {
        for (std::size_t i = 0; i < r.dir.size(); ++i) {
            LimitCoord lc;
            if (r.dir[i] > 0) lc.sign = 1;
            else if (r.dir[i] < 0) lc.sign = -1;
            else lc.value = r.base[i];
            bp.coords.push_back(lc);
        }
        return bp;
    }
    std::vector<Int> d(r.dir);
    d.push_back(0);
    std::vector<Rat> base(r.base);
    base.push_back(0);
    Int m = d[0];
    for (const Int& x : d) m = std::max(m, x);
    for (std::size_t i = 0; i < d.size(); ++i) {
        LimitCoord lc;
        if (d[i] == m) lc.value = base[i];
        else lc.sign = -1;
        bp.coords.push_back(lc);
    }
    return bp;
}

inline std::string limit_str(const BoundaryPoint& bp) {
    std::string s = bp.tag == Compactification::tp ? "[" : "(";
    for (std::size_t i = 0; i < bp.coords.size(); ++i) {
        if (i) s += bp.tag == Compactification::tp ? " : " : ", ";
        const LimitCoord& lc = bp.coords[i];
        s += lc.sign < 0 ? "-inf" : lc.sign > 0 ? "inf" : rat_str(lc.value);
    }
    return s + (bp.tag == Compactification::tp ? "]" : ")");
}

// Pairs of rays whose boundary limits coincide in the given compactification.
inline std::vector<std::pair<std::string, std::string>> limit_collisions(
    const EmbeddedTropicalCurve& c, Compactification comp) {
    std::map<BoundaryPoint, std::vector<std::string>> groups;
    for (const Ray& r : c.rays) groups[boundary_limit(r, comp)].push_back(r.name);
    std::vector<std::pair<std::string, std::string>> out;
    for (auto& [bp, names] : groups) {
        std::sort(names.begin(), names.end());
        for (std::size_t i = 0; i + 1 < names.size(); ++i)
            for (std::size_t j = i + 1; j < names.size(); ++j)
                out.push_back({names[i], names[j]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

enum class Faithfulness { not_faithful, totally_faithful, fully_faithful };

inline std::string faithfulness_str(Faithfulness f) {
    switch (f) {
        case Faithfulness::not_faithful: return "not_faithful";
        case Faithfulness::totally_faithful: return "totally_faithful";
        case Faithfulness::fully_faithful: return "fully_faithful";
    }
    return "?";
}

// totally faithful: injective with unit stretching factors everywhere;
// fully faithful: additionally all ray limits distinct at the boundary.
inline Faithfulness classify_faithfulness(const EmbeddedTropicalCurve& c, Compactification comp,
                                          unsigned jobs = 1) {
    for (const Segment& s : c.segments)
        if (s.weight != 1) return Faithfulness::not_faithful;
    for (const Ray& r : c.rays)
        if (r.weight != 1) return Faithfulness::not_faithful;
    if (!check_injectivity(c, jobs).empty()) return Faithfulness::not_faithful;
    if (!limit_collisions(c, comp).empty()) return Faithfulness::totally_faithful;
    return Faithfulness::fully_faithful;
}

}  // namespace tropcurve
