#include "tropcurve/pl_function.hpp"
#include "tropcurve/poisson.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace tropcurve;
namespace tt = tropcurve::testing;

namespace {

MetricGraph single_edge(const Rat& len) {
    return build_graph({"v", "w"}, {{"e", "v", "w", len}});
}

}  // namespace

TEST_CASE("divisor of a tent profile") {
    MetricGraph g = single_edge(Rat(12));
    PLFunction f;
    f.vertex_values = {{"v", Rat(0)}, {"w", Rat(0)}};
    f.edge_samples["e"] = {{Rat(0), Rat(0)}, {Rat(5), Rat(5)}, {Rat(7), Rat(5)}, {Rat(12), Rat(0)}};
    Divisor d = divisor_of(g, f);
    CHECK(d.at(GraphPoint::on_vertex("v")) == 1);
    CHECK(d.at(GraphPoint::on_vertex("w")) == 1);
    CHECK(d.at(GraphPoint::on_edge("e", Rat(5))) == -1);
    CHECK(d.at(GraphPoint::on_edge("e", Rat(7))) == -1);
    CHECK(d.degree() == 0);

    CHECK(evaluate(g, f, GraphPoint::on_vertex("v")) == 0);
    CHECK(evaluate(g, f, GraphPoint::on_edge("e", Rat(5))) == 5);
    CHECK(evaluate(g, f, GraphPoint::on_edge("e", Rat(6))) == 5);   // on the plateau
    CHECK(evaluate(g, f, GraphPoint::on_edge("e", Rat(2))) == 2);
}

TEST_CASE("constant functions have the zero divisor") {
    MetricGraph g = tt::make_theta();
    PLFunction f = pl_shift(pl_zero(g), Rat(7, 3));
    CHECK(divisor_of(g, f).coeffs.empty());
}

TEST_CASE("divisor_of requires integer slopes") {
    MetricGraph g = single_edge(Rat(2));
    PLFunction f;
    f.vertex_values = {{"v", Rat(0)}, {"w", Rat(1)}};  // slope 1/2
    f.edge_samples["e"] = {{Rat(0), Rat(0)}, {Rat(2), Rat(1)}};
    CHECK_FALSE(is_integral(g, f));
    CHECK_THROWS_AS(divisor_of(g, f), std::invalid_argument);
}

TEST_CASE("kirchhoff solve on a circle") {
    MetricGraph c = build_graph({"p", "q"}, {{"a1", "p", "q", Rat(1, 3)}, {"a2", "q", "p", Rat(2, 3)}});
    Divisor d = make_divisor(c, {{GraphPoint::on_vertex("p"), Int(1)},
                                 {GraphPoint::on_vertex("q"), Int(-1)}});
    PLFunction f = solve_poisson(c, d);
    auto slope = [&](const char* eid) {
        const auto& s = f.edge_samples.at(eid);
        return (s.back().second - s.front().second) / (s.back().first - s.front().first);
    };
    CHECK(slope("a1") == Rat(2, 3));
    CHECK(slope("a2") == Rat(-1, 3));
    CHECK(divisor_of(c, pl_scale(f, 3)).degree() == 0);
    CHECK_FALSE(is_principal(c, d));

    // degenerate and failing inputs
    CHECK(pl_equal(c, solve_poisson(c, Divisor{}), pl_zero(c)));
    Divisor bad;
    bad.add(GraphPoint::on_vertex("p"), 1);
    CHECK_THROWS_WITH_AS(solve_poisson(c, bad), doctest::Contains("no solution"),
                         std::invalid_argument);
}

TEST_CASE("poisson solve inverts divisor_of up to a constant") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 60; ++it) {
        MetricGraph g = tt::random_graph(rng);
        PLFunction f = tt::random_integral_pl(rng, g);
        Divisor d = divisor_of(g, f);
        PLFunction back = solve_poisson(g, d);
        Rat shift = f.vertex_values.at(g.vertices.front()) -
                    back.vertex_values.at(g.vertices.front());
        CAPTURE(it);
        CHECK(pl_equal(g, f, pl_shift(back, shift)));
        CHECK(is_principal(g, d));
    }
}

TEST_CASE("divisor_of is additive") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 30; ++it) {
        MetricGraph g = tt::random_graph(rng);
        PLFunction f = tt::random_integral_pl(rng, g);
        PLFunction h = tt::random_integral_pl(rng, g);
        CHECK(divisor_of(g, pl_add(g, f, h)) == divisor_of(g, f) + divisor_of(g, h));
    }
}

TEST_CASE("principality is invariant under subdivision") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 25; ++it) {
        MetricGraph g = tt::random_graph(rng, 3);
        // a divisor that may or may not be principal
        Divisor d;
        const GraphEdge& e1 = g.edges[rng() % g.edges.size()];
        const GraphEdge& e2 = g.edges[rng() % g.edges.size()];
        GraphPoint x = canonical(g, GraphPoint::on_edge(e1.id, e1.length / 4));
        GraphPoint y = canonical(g, GraphPoint::on_edge(e2.id, e2.length / 2));
        if (x == y) continue;
        d.add(x, 1);
        d.add(y, -1);
        bool before = is_principal(g, d);

        const GraphEdge& es = g.edges[rng() % g.edges.size()];
        Rat cut = es.length * Rat(3, 7);
        Subdivision sub = subdivide(g, GraphPoint::on_edge(es.id, cut));
        Divisor d2;
        for (const auto& [p, c] : d.coeffs) {
            GraphPoint q = p;
            if (!p.at_vertex && p.edge == es.id) {
                if (p.offset == cut) q = GraphPoint::on_vertex(sub.new_vertex);
                else if (p.offset < cut) q = GraphPoint::on_edge(es.id + "[", p.offset);
                else q = GraphPoint::on_edge(es.id + "]", p.offset - cut);
            }
            d2.add(canonical(sub.graph, q), c);
        }
        CHECK(is_principal(sub.graph, d2) == before);
    }
}

TEST_CASE("break divisors on the theta graph") {
    MetricGraph g = tt::make_theta();
    Divisor two_edges;
    two_edges.add(GraphPoint::on_edge("t0", Rat(1, 2)), 1);
    two_edges.add(GraphPoint::on_edge("t1", Rat(1, 3)), 1);
    CHECK(is_break_divisor(g, two_edges));

    Divisor wrong_degree;
    wrong_degree.add(GraphPoint::on_edge("t0", Rat(1, 2)), 1);
    CHECK_FALSE(is_break_divisor(g, wrong_degree));

    Divisor same_edge;
    same_edge.add(GraphPoint::on_edge("t0", Rat(1, 3)), 1);
    same_edge.add(GraphPoint::on_edge("t0", Rat(2, 3)), 1);
    CHECK_FALSE(is_break_divisor(g, same_edge));

    Divisor negative;
    negative.add(GraphPoint::on_edge("t0", Rat(1, 2)), 2);
    negative.add(GraphPoint::on_edge("t1", Rat(1, 2)), 1);
    negative.add(GraphPoint::on_edge("t2", Rat(1, 2)), -1);
    CHECK_FALSE(is_break_divisor(g, negative));
}
