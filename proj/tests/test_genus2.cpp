#include "tropcurve/genus2.hpp"

#include <doctest.h>

using namespace tropcurve;

TEST_CASE("preset divisors match the two-loop table") {
    Genus2Result res = genus2_preset(Genus2Config{});
    const MetricGraph& g = res.state.graph;
    auto at = [&](const Divisor& d, const char* v) { return d.at(GraphPoint::on_vertex(v)); };

    const Divisor& d1 = res.tau[0];
    CHECK(at(d1, "a1") == 1);
    CHECK(at(d1, "a3") == -1);
    CHECK(at(d1, "a4") == -1);
    CHECK(at(d1, "b2") == 1);
    CHECK(at(d1, "b3") == 1);
    CHECK(at(d1, "b5") == -1);
    CHECK(d1.coeffs.size() == 6);

    const Divisor& d2 = res.tau[1];
    CHECK(at(d2, "g1") == -1);
    CHECK(at(d2, "g2") == 1);
    CHECK(at(d2, "g3") == 1);
    CHECK(at(d2, "g4") == -1);
    CHECK(at(d2, "b1") == -1);
    CHECK(at(d2, "b3") == 1);
    CHECK(at(d2, "b4") == 1);

    const Divisor& d3 = res.tau[2];
    CHECK(at(d3, "a1") == 1);
    CHECK(at(d3, "a2") == 1);
    CHECK(at(d3, "a4") == -1);
    CHECK(at(d3, "a5") == -1);
    CHECK(at(d3, "d1") == -1);
    CHECK(at(d3, "d2") == 1);
    CHECK(at(d3, "d3") == 1);
    CHECK(at(d3, "d4") == -1);

    for (const Divisor& d : res.tau) {
        CHECK(d.degree() == 0);
        CHECK(is_principal(g, d));
    }
}

TEST_CASE("preset verification report is all green") {
    Genus2Result res = genus2_preset(Genus2Config{});
    ConditionReport rep = verify_genus2(res);
    for (const ConditionResult& r : rep.results) {
        CAPTURE(r.id);
        CAPTURE(r.witness);
        CHECK(r.pass);
    }
}

TEST_CASE("hexagon vertex images with unit spacing") {
    Genus2Result res = genus2_preset(Genus2Config{});
    auto img = [&](const char* v) {
        std::vector<Rat> x;
        for (const PLFunction& f : res.state.fs) x.push_back(f.vertex_values.at(v));
        return x;
    };
    CHECK(img("w") == std::vector<Rat>{0, 0, 0});
    CHECK(img("a1") == std::vector<Rat>{0, 0, 1});
    CHECK(img("a2") == std::vector<Rat>{-1, -1, 1});
    CHECK(img("a3") == std::vector<Rat>{-2, -2, 0});
    CHECK(img("a4") == std::vector<Rat>{-2, -2, -1});
    CHECK(img("a5") == std::vector<Rat>{-1, -1, -1});
    CHECK(img("b1") == std::vector<Rat>{1, 0, 0});
    CHECK(img("b3") == std::vector<Rat>{2, 2, 0});
}

TEST_CASE("the four-valent junction and the loop corners are smooth") {
    Genus2Result res = genus2_preset(Genus2Config{});
    auto prof = nonsmoothness_profile(res.state.curve);
    for (const auto& [node, n] : prof) {
        CAPTURE(node);
        CHECK(n == 0);
    }
    // the glue vertex has the full-rank lattice, the hexagon corner the plane
    auto stars = node_stars(res.state.curve);
    std::vector<IntVector> at_w;
    for (const StarEntry& e : stars.at(vertex_node("w"))) at_w.push_back(IntVector{e.dir});
    CHECK(at_w.size() == 4);
    CHECK(linear_rank(at_w) == 3);
    CHECK(is_saturated(at_w));
}

TEST_CASE("balancing holds including the stem junctions") {
    Genus2Result res = genus2_preset(Genus2Config{});
    CHECK(check_balancing(res.state.curve));
    // stems exist: segment count exceeds the 20 loop edges
    CHECK(res.state.curve.segments.size() > 20);
}

TEST_CASE("shrinking the cluster gaps keeps the embedding injective") {
    for (int denom : {5, 10, 20}) {
        Genus2Config cfg;
        cfg.gamma_gap = Rat(1, denom);
        cfg.delta_gap = Rat(1, denom);
        Genus2Result res = genus2_preset(cfg);
        CAPTURE(denom);
        CHECK(check_injectivity(res.state.curve).empty());
        CHECK(classify_faithfulness(res.state.curve, Compactification::tp) ==
              Faithfulness::fully_faithful);
    }
}

TEST_CASE("config validation") {
    Genus2Config bad;
    bad.len_delta2 = Rat(2, 5);
    bad.len_delta3 = Rat(1, 5);
    CHECK_THROWS_AS(genus2_preset(bad), std::invalid_argument);
    Genus2Config too_wide;
    too_wide.gamma_gap = Rat(1, 2);
    CHECK_THROWS_AS(genus2_preset(too_wide), std::invalid_argument);
}
