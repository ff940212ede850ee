#pragma once

#include "tropcurve/construction.hpp"
#include "tropcurve/embedding.hpp"
#include "tropcurve/genus2.hpp"
#include "tropcurve/json_io.hpp"
#include "tropcurve/obj_export.hpp"
#include "tropcurve/resolution.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace tropcurve {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitInput = 2;

struct RunReport {
    ConditionReport conditions;
    Faithfulness class_p1 = Faithfulness::not_faithful;
    Faithfulness class_tp = Faithfulness::not_faithful;
    std::vector<Collision> crossings;
    std::vector<std::pair<std::string, std::string>> tp_limit_pairs;
    bool balanced = false;
    std::map<std::size_t, std::size_t> n_histogram;
    std::uint64_t seed = 0;
    double seconds = 0;
};

inline json report_json(const RunReport& r) {
    json conds = json::object();
    for (const ConditionResult& c : r.conditions.results)
        conds[c.id] = c.pass ? json{{"pass", true}} : json{{"pass", false}, {"witness", c.witness}};
    json crossings = json::array();
    for (const Collision& c : r.crossings)
        crossings.push_back({{"a", c.a}, {"b", c.b}, {"at", c.description}});
    json pairs = json::array();
    for (const auto& [a, b] : r.tp_limit_pairs) pairs.push_back({a, b});
    json hist = json::object();
    for (const auto& [n, count] : r.n_histogram) hist[std::to_string(n)] = count;
    return {{"conditions", conds},
            {"faithfulness", {{"p1cube", faithfulness_str(r.class_p1)}, {"tp", faithfulness_str(r.class_tp)}}},
            {"crossings", crossings},
            {"tp_limit_collisions", pairs},
            {"balanced", r.balanced},
            {"nonsmoothness", hist},
            {"seed", r.seed}};
}

struct EmbedRun {
    SynthesizedModel model;
    EmbeddingState state;
    RunReport report;
};

// Full pipeline: prepare, synthesize, build the coordinate functions,
// tropicalize, verify.
inline EmbedRun run_embed(const MetricGraph& g, std::uint64_t seed, unsigned jobs = 1) {
    auto t0 = std::chrono::steady_clock::now();
    EmbedRun run;
    PreparedModel pm = prepare_model(g);
    run.model = synthesize_parameters(pm, seed);
    auto fs3 = build_coordinate_functions(run.model.graph, run.model.params);
    ExtendedSkeleton sk = extended_skeleton(run.model.graph, run.model.params);
    run.state = make_state(run.model.graph, run.model.params.complement, std::move(sk),
                           {fs3[0], fs3[1], fs3[2]});

    RunReport& rep = run.report;
    rep.seed = seed;
    rep.conditions = verify_parameters(run.model.graph, run.model.params);
    rep.crossings = check_injectivity(run.state.curve, jobs);
    rep.balanced = check_balancing(run.state.curve);
    rep.class_p1 = classify_faithfulness(run.state.curve, Compactification::p1cube, jobs);
    rep.class_tp = classify_faithfulness(run.state.curve, Compactification::tp, jobs);
    rep.tp_limit_pairs = limit_collisions(run.state.curve, Compactification::tp);
    for (const auto& [node, n] : nonsmoothness_profile(run.state.curve)) rep.n_histogram[n]++;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return run;
}

inline json run_file_json(const EmbeddingState& st, const RunReport& rep,
                          const ParameterSet* params = nullptr) {
    return {{"schema", kRunSchema},
            {"state", state_json(st, params)},
            {"embedding", embedding_json(st.curve)},
            {"report", report_json(rep)}};
}

// ---------------------------------------------------------------------------
// Subcommand bodies; each returns a process exit code.

inline int cmd_embed(const std::string& input, const std::string& out, std::uint64_t seed,
                     const std::string& target, unsigned jobs) {
    if (target != "tp3" && target != "p1cube") {
        std::cerr << "unknown target: " << target << " (use tp3 or p1cube)\n";
        return kExitInput;
    }
    MetricGraph g;
    try {
        g = graph_from_json(load_json_file(input));
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    EmbedRun run = run_embed(g, seed, jobs);
    if (!out.empty()) save_json_file(out, run_file_json(run.state, run.report, &run.model.params));

    Faithfulness cls = target == "p1cube" ? run.report.class_p1 : run.report.class_tp;
    bool achieved = target == "p1cube" ? cls == Faithfulness::fully_faithful
                                       : cls != Faithfulness::not_faithful;
    json summary = report_json(run.report);
    summary["target"] = target;
    summary["class"] = faithfulness_str(cls);
    summary["achieved"] = achieved;
    summary["seconds"] = run.report.seconds;
    std::cout << summary.dump(2) << "\n";
    return achieved ? kExitOk : kExitVerification;
}

inline int cmd_resolve(const std::string& input, const std::string& out, unsigned jobs) {
    EmbeddingState st;
    try {
        json j = load_json_file(input);
        st = state_from_json(j.contains("state") ? j.at("state") : j);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    try {
        if (classify_faithfulness(st.curve, Compactification::p1cube, jobs) !=
            Faithfulness::fully_faithful) {
            std::cerr << "input embedding is not fully faithful\n";
            return kExitVerification;
        }
        std::vector<StepReport> steps;
        EmbeddingState final_state = resolve_to_smooth(st, &steps);

        json jsteps = json::array();
        for (const StepReport& sr : steps) {
            std::map<std::size_t, std::size_t> before, after;
            for (const auto& [node, n] : sr.before) before[n]++;
            for (const auto& [node, n] : sr.after) after[n]++;
            json jb = json::object(), ja = json::object();
            for (const auto& [n, c] : before) jb[std::to_string(n)] = c;
            for (const auto& [n, c] : after) ja[std::to_string(n)] = c;
            jsteps.push_back({{"dim_after", sr.dim_after}, {"before", jb}, {"after", ja}});
        }
        RunReport rep;
        rep.crossings = check_injectivity(final_state.curve, jobs);
        rep.balanced = check_balancing(final_state.curve);
        rep.class_p1 = classify_faithfulness(final_state.curve, Compactification::p1cube, jobs);
        rep.class_tp = classify_faithfulness(final_state.curve, Compactification::tp, jobs);
        rep.tp_limit_pairs = limit_collisions(final_state.curve, Compactification::tp);
        for (const auto& [node, n] : nonsmoothness_profile(final_state.curve)) rep.n_histogram[n]++;

        json file = run_file_json(final_state, rep);
        file["resolution_steps"] = jsteps;
        if (!out.empty()) save_json_file(out, file);
        json summary = {{"steps", jsteps},
                        {"dim", final_state.fs.size()},
                        {"smooth", max_nonsmoothness(nonsmoothness_profile(final_state.curve)) == 0},
                        {"class_p1cube", faithfulness_str(rep.class_p1)}};
        std::cout << summary.dump(2) << "\n";
        bool ok = rep.class_p1 == Faithfulness::fully_faithful;
        return ok ? kExitOk : kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "resolution failed: " << e.what() << "\n";
        return kExitVerification;
    }
}

inline int cmd_genus2(const std::string& spacing, const std::string& bumps, const std::string& out,
                      unsigned jobs) {
    Genus2Config cfg;
    try {
        if (!spacing.empty()) cfg.spacing = parse_rat(spacing);
        if (!bumps.empty()) {
            std::vector<Rat> vals;
            std::string cur;
            for (char ch : bumps + ",") {
                if (ch == ',') {
                    vals.push_back(parse_rat(cur));
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
            if (vals.size() != 4)
                throw std::invalid_argument("--bumps wants four rationals: g2,g3,d2,d3");
            cfg.len_gamma2 = vals[0];
            cfg.len_gamma3 = vals[1];
            cfg.len_delta2 = vals[2];
            cfg.len_delta3 = vals[3];
        }
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    try {
        Genus2Result res = genus2_preset(cfg);
        ConditionReport rep = verify_genus2(res);
        RunReport rr;
        rr.conditions = rep;
        rr.crossings = check_injectivity(res.state.curve, jobs);
        rr.balanced = check_balancing(res.state.curve);
        rr.class_p1 = classify_faithfulness(res.state.curve, Compactification::p1cube, jobs);
        rr.class_tp = classify_faithfulness(res.state.curve, Compactification::tp, jobs);
        for (const auto& [node, n] : nonsmoothness_profile(res.state.curve)) rr.n_histogram[n]++;
        if (!out.empty()) {
            json file = run_file_json(res.state, rr);
            file["bump_lengths"] = {{"g2", rat_json(res.used_gamma2)},
                                    {"g3", rat_json(res.used_gamma3)},
                                    {"d2", rat_json(res.used_delta2)},
                                    {"d3", rat_json(res.used_delta3)}};
            save_json_file(out, file);
        }
        json summary = report_json(rr);
        summary["retries"] = res.retries;
        std::cout << summary.dump(2) << "\n";
        return rep.all_pass() ? kExitOk : kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "genus2 failed: " << e.what() << "\n";
        return kExitVerification;
    }
}

inline int cmd_check(const std::string& input, unsigned jobs) {
    json j;
    EmbeddingState st;
    try {
        j = load_json_file(input);
        if (!j.contains("schema") || j.at("schema") != kRunSchema)
            throw std::invalid_argument("run file schema mismatch: expected " +
                                        std::string(kRunSchema));
        st = state_from_json(j.at("state"));
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    std::vector<std::string> failures;
    json stored = j.at("embedding");
    json fresh = embedding_json(st.curve);
    if (stored != fresh) {
        std::string what = "embedding";
        if (stored.contains("segments") && fresh.at("segments") != stored.at("segments"))
            what = "embedding.segments (endpoints or weights)";
        else if (stored.contains("rays") && fresh.at("rays") != stored.at("rays"))
            what = "embedding.rays (directions, weights or limits)";
        failures.push_back(what + " differs from the recomputation");
    }
    if (!check_balancing(st.curve)) failures.push_back("balancing");
    if (!check_injectivity(st.curve, jobs).empty()) failures.push_back("injectivity");
    if (j.at("state").contains("params")) {
        ParameterSet ps = params_from_json(j.at("state").at("params"));
        ConditionReport rep = verify_parameters(st.graph, ps);
        json conds = j.at("report").at("conditions");
        for (const ConditionResult& c : rep.results) {
            bool stored_pass = conds.contains(c.id) && conds.at(c.id).at("pass").get<bool>();
            if (stored_pass != c.pass) failures.push_back("condition " + c.id);
        }
    }
    if (j.contains("report")) {
        std::string want_p1 = j.at("report").at("faithfulness").at("p1cube").get<std::string>();
        if (want_p1 != faithfulness_str(classify_faithfulness(st.curve, Compactification::p1cube, jobs)))
            failures.push_back("faithfulness class (p1cube)");
    }
    if (failures.empty()) {
        std::cout << "{\"check\":\"pass\"}\n";
        return kExitOk;
    }
    json out = {{"check", "fail"}, {"failed", failures}};
    std::cout << out.dump(2) << "\n";
    return kExitVerification;
}

inline int cmd_export(const std::string& input, const std::string& out,
                      const std::string& ray_length) {
    try {
        json j = load_json_file(input);
        json je = j.contains("embedding") ? j.at("embedding") : j;
        if (!je.contains("schema") || je.at("schema") != kEmbeddingSchema)
            throw std::invalid_argument("embedding schema mismatch: expected " +
                                        std::string(kEmbeddingSchema));
        EmbeddedTropicalCurve c;
        c.dim = je.at("dim").get<std::size_t>();
        for (const json& js : je.at("segments")) {
            Segment s;
            s.a = rat_vec_from_json(js.at("from"));
            s.b = rat_vec_from_json(js.at("to"));
            s.weight = int_from_json(js.at("weight"));
            s.node_a = js.at("nodes").at(0).get<std::string>();
            s.node_b = js.at("nodes").at(1).get<std::string>();
            c.segments.push_back(std::move(s));
        }
        for (const json& jr : je.at("rays")) {
            Ray r;
            r.base = rat_vec_from_json(jr.at("base"));
            r.dir = int_vec_from_json(jr.at("dir"));
            r.weight = int_from_json(jr.at("weight"));
            r.node = jr.at("node").get<std::string>();
            r.name = jr.at("name").get<std::string>();
            c.rays.push_back(std::move(r));
        }
        c.rebuild_nodes();
        export_obj(c, out, ray_length.empty() ? Rat(1) : parse_rat(ray_length));
        std::cout << "{\"exported\":\"" << out << "\"}\n";
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace tropcurve
