#include "tropcurve/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"tropcurve: exact tropical embeddings of rational metric graphs"};
    app.require_subcommand(1);

    std::string input, out, target = "p1cube", ray_length = "1", spacing, bumps;
    std::uint64_t seed = 0;
    unsigned jobs = 1;

    auto* embed = app.add_subcommand(
        "embed", "Embed a metric graph in 3-space and verify the result");
    embed->add_option("--input", input, "graph JSON")->required();
    embed->add_option("--out", out, "run file to write");
    embed->add_option("--seed", seed, "synthesis seed");
    embed->add_option("--target", target, "tp3 or p1cube");
    embed->add_option("--jobs", jobs, "threads for the intersection checker");

    auto* resolve = app.add_subcommand(
        "resolve", "Append coordinates until the embedding is smooth");
    resolve->add_option("--input", input, "run or state file")->required();
    resolve->add_option("--out", out, "run file to write");
    resolve->add_option("--jobs", jobs, "threads for the intersection checker");

    auto* genus2 = app.add_subcommand("genus2", "Run the two-loop preset");
    genus2->add_option("--spacing", spacing, "loop spacing (rational)");
    genus2->add_option("--bumps", bumps, "bump stem lengths g2,g3,d2,d3");
    genus2->add_option("--out", out, "run file to write");
    genus2->add_option("--jobs", jobs, "threads for the intersection checker");

    auto* check = app.add_subcommand("check", "Re-verify a stored run file");
    check->add_option("--input", input, "run file")->required();
    check->add_option("--jobs", jobs, "threads for the intersection checker");

    auto* exp = app.add_subcommand("export", "Export an embedding to OBJ");
    exp->add_option("--input", input, "run or embedding file")->required();
    exp->add_option("--out", out, "OBJ path")->required();
    exp->add_option("--ray-length", ray_length, "ray truncation length");

    CLI11_PARSE(app, argc, argv);

    try {
        if (embed->parsed()) return tropcurve::cmd_embed(input, out, seed, target, jobs);
        if (resolve->parsed()) return tropcurve::cmd_resolve(input, out, jobs);
        if (genus2->parsed()) return tropcurve::cmd_genus2(spacing, bumps, out, jobs);
        if (check->parsed()) return tropcurve::cmd_check(input, jobs);
        if (exp->parsed()) return tropcurve::cmd_export(input, out, ray_length);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return tropcurve::kExitVerification;
    }
    return tropcurve::kExitInput;
}
