#include "tropcurve/resolution.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace tropcurve;
namespace tt = tropcurve::testing;

namespace {

EmbeddingState state_for(const MetricGraph& g, std::uint64_t seed = 0) {
    SynthesizedModel m = synthesize_parameters(prepare_model(g), seed);
    auto fs3 = build_coordinate_functions(m.graph, m.params);
    return make_state(m.graph, m.params.complement, extended_skeleton(m.graph, m.params),
                      {fs3[0], fs3[1], fs3[2]});
}

EmbeddedTropicalCurve star_curve(const std::vector<std::vector<long long>>& dirs) {
    EmbeddedTropicalCurve c;
    c.dim = dirs.front().size();
    int i = 0;
    for (const auto& d : dirs) {
        Segment s;
        s.a.assign(c.dim, Rat(0));
        for (long long x : d) s.b.push_back(Rat(x));
        s.node_a = "center";
        s.node_b = "tip" + std::to_string(i++);
        c.segments.push_back(std::move(s));
    }
    c.rebuild_nodes();
    return c;
}

}  // namespace

TEST_CASE("local degree of non-smoothness from a star") {
    // a four-valent planar crossing misses a unimodular pair only by one
    CHECK(local_nonsmoothness(star_curve({{1, 1}, {-1, -1}, {1, 0}, {-1, 0}}), "center") == 1);
    // a trivalent unimodular corner is smooth
    CHECK(local_nonsmoothness(star_curve({{1, 0}, {0, 1}, {-1, -1}}), "center") == 0);
    CHECK_THROWS_WITH_AS(local_nonsmoothness(star_curve({{1, 0}, {0, 1}}), "nowhere"),
                         doctest::Contains("not a finite vertex"), std::invalid_argument);
}

TEST_CASE("construction vertices have defect one below their degree") {
    EmbeddingState st = state_for(tt::make_theta());
    auto prof = nonsmoothness_profile(st.curve);
    // the two original trivalent vertices
    CHECK(prof.at(vertex_node("u")) == 2);
    CHECK(prof.at(vertex_node("v")) == 2);
    // marked points are already smooth
    std::size_t smooth = 0, positive = 0;
    for (const auto& [node, n] : prof) (n == 0 ? smooth : positive)++;
    CHECK(positive > 0);
    CHECK(smooth > 0);
    // every refinement vertex of degree two has defect one
    for (const std::string& v : st.graph.vertices)
        if (st.graph.degree(v) == 2) CHECK(prof.at(vertex_node(v)) == 1);
}

TEST_CASE("one step lowers every positive defect by exactly one") {
    EmbeddingState st = state_for(tt::make_theta());
    StepReport rep;
    EmbeddingState next = resolution_step(st, &rep);
    CHECK(rep.acted);
    CHECK(next.fs.size() == 4);
    CHECK(rep.dim_after == 4);
    for (const auto& [node, n] : rep.before) {
        std::size_t expect = n > 0 ? n - 1 : 0;
        CHECK(rep.after.at(node) == expect);
    }
    // the new support points are smooth
    for (const auto& [node, n] : rep.after)
        if (!rep.before.count(node)) CHECK(n == 0);
    // the correction divisor is principal and realized by the new coordinate
    CHECK(is_principal(next.graph, rep.correction));
    CHECK(divisor_of(next.graph, next.fs.back()) == rep.correction);
    // faithfulness survives the step
    CHECK(classify_faithfulness(next.curve, Compactification::p1cube) ==
          Faithfulness::fully_faithful);
}

TEST_CASE("already smooth states pass through unchanged") {
    EmbeddingState st = state_for(tt::make_theta());
    EmbeddingState done = resolve_to_smooth(st);
    StepReport rep;
    EmbeddingState again = resolution_step(done, &rep);
    CHECK_FALSE(rep.acted);
    CHECK(again.fs.size() == done.fs.size());
    std::vector<StepReport> reps;
    EmbeddingState still = resolve_to_smooth(done, &reps);
    CHECK(reps.empty());
    CHECK(still.fs.size() == done.fs.size());
}

TEST_CASE("resolution terminates within the degree bound") {
    EmbeddingState st = state_for(tt::make_theta());  // max vertex degree 3
    std::vector<StepReport> reps;
    EmbeddingState done = resolve_to_smooth(st, &reps);
    CHECK(reps.size() <= 2);                  // C - 1
    CHECK(done.fs.size() <= 5);               // C + 2
    CHECK(done.fs.size() <= 2 * genus(st.graph) + 2);
    CHECK(max_nonsmoothness(nonsmoothness_profile(done.curve)) == 0);
    CHECK(check_balancing(done.curve));
    CHECK(classify_faithfulness(done.curve, Compactification::p1cube) ==
          Faithfulness::fully_faithful);
}
