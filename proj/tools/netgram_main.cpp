// Command line front end: flag parsing only, all work happens in the library.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "netgram/cli.hpp"

namespace {

using netgram::Command;
using netgram::Family;
using netgram::GraphSpec;
using netgram::Orientation;
using netgram::RunConfig;

struct CommonFlags {
    std::string family;
    bool directed = false;
    bool undirected = false;
    std::string n_range;
    std::string input;
    std::string gamma = "auto";
    std::string leaders = "all";
    std::string output;
};

void add_graph_flags(CLI::App* cmd, CommonFlags& f, bool with_input) {
    cmd->add_option("--family", f.family, "graph family: star, path, ring, complete");
    cmd->add_flag("--directed", f.directed, "directed orientation");
    cmd->add_flag("--undirected", f.undirected, "undirected orientation");
    cmd->add_option("--n", f.n_range, "node count (sweeps accept lo..hi[:step])");
    if (with_input)
        cmd->add_option("--input", f.input, "adjacency file instead of a family");
    cmd->add_option("--gamma", f.gamma, "scaling gamma, or \"auto\" (default)");
    cmd->add_option("--output", f.output, "write to this file instead of stdout");
}

Family parse_family(const std::string& name) {
    if (name == "star") return Family::star;
    if (name == "path") return Family::path;
    if (name == "ring") return Family::ring;
    if (name == "complete") return Family::complete;
    throw netgram::invalid_spec("unknown family \"" + name + "\"");
}

// Translates common flags into the run configuration; a family selector needs
// an orientation and a size.
void apply_common(const CommonFlags& f, RunConfig& cfg, bool family_needs_n) {
    if (!f.family.empty()) {
        if (f.directed == f.undirected)
            throw netgram::invalid_spec("pick exactly one of --directed / --undirected");
        GraphSpec spec;
        spec.family = parse_family(f.family);
        spec.orientation = f.directed ? Orientation::directed : Orientation::undirected;
        if (family_needs_n) {
            if (f.n_range.empty()) throw netgram::invalid_spec("--n is required");
            std::size_t lo = 0, hi = 0, step = 1;
            netgram::parse_range(f.n_range, lo, hi, step);
            if (lo != hi) throw netgram::invalid_spec("this command takes a single --n");
            spec.n = lo;
        }
        cfg.spec = spec;
    }
    if (!f.input.empty()) cfg.input_path = f.input;
    if (f.gamma == "auto") {
        cfg.gamma_auto = true;
    } else {
        cfg.gamma_auto = false;
        cfg.gamma = netgram::cli_detail::parse_real(f.gamma, "gamma");
    }
    cfg.leaders = netgram::parse_leaders(f.leaders);
    cfg.output_path = f.output;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Controllability Gramian analysis for networked single integrators"};
    app.require_subcommand(1);

    CommonFlags gen_f, analyze_f, bounds_f, ssize_f, sleaders_f, energy_f;
    std::string mode = "exact";
    std::size_t t_max = netgram::kSeriesDefaultSteps;
    std::size_t divisors = 0;
    std::string block_length, leaders_per_block, placement, target;
    std::size_t steps = netgram::kSeriesDefaultSteps;

    CLI::App* gen = app.add_subcommand("gen", "write a family adjacency file");
    add_graph_flags(gen, gen_f, false);

    CLI::App* analyze = app.add_subcommand("analyze", "Gramian spectrum summary");
    add_graph_flags(analyze, analyze_f, true);
    analyze->add_option("--leaders", analyze_f.leaders, "leader pattern descriptor");
    analyze->add_option("--mode", mode, "gramian mode: exact or series");
    analyze->add_option("--t-max", t_max, "series horizon");

    CLI::App* bounds = app.add_subcommand("bounds", "bound report rows");
    add_graph_flags(bounds, bounds_f, true);
    bounds->add_option("--leaders", bounds_f.leaders, "leader pattern descriptor");

    CLI::App* ssize = app.add_subcommand("sweep-size", "condition number and bounds across sizes");
    add_graph_flags(ssize, ssize_f, false);

    CLI::App* sleaders = app.add_subcommand("sweep-leaders", "ring block leader placements");
    sleaders->add_option("--n", sleaders_f.n_range, "ring size");
    sleaders->add_option("--gamma", sleaders_f.gamma, "scaling gamma (default 2)");
    sleaders->add_option("--output", sleaders_f.output, "write to this file instead of stdout");
    sleaders->add_option("--divisors", divisors, "one leader per block over the first k divisors");
    sleaders->add_option("--block-length", block_length, "fixed block length");
    sleaders->add_option("--leaders-per-block", leaders_per_block,
                         "leaders per block, single value or lo..hi");
    sleaders->add_option("--placement", placement, "spread or clustered");

    CLI::App* energy = app.add_subcommand("energy", "least-norm steering cost");
    add_graph_flags(energy, energy_f, true);
    energy->add_option("--leaders", energy_f.leaders, "leader pattern descriptor");
    energy->add_option("--target", target, "target state: e<k> or comma list");
    energy->add_option("--t", steps, "steering horizon in steps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    RunConfig cfg;
    try {
        if (gen->parsed()) {
            cfg.command = Command::gen;
            apply_common(gen_f, cfg, true);
            if (!cfg.spec) throw netgram::invalid_spec("gen needs --family");
        } else if (analyze->parsed()) {
            cfg.command = Command::analyze;
            apply_common(analyze_f, cfg, true);
            if (mode == "exact") cfg.mode = netgram::GramianMode::exact;
            else if (mode == "series") cfg.mode = netgram::GramianMode::series;
            else throw netgram::invalid_spec("mode must be \"exact\" or \"series\"");
            cfg.t_max = t_max;
        } else if (bounds->parsed()) {
            cfg.command = Command::bounds;
            apply_common(bounds_f, cfg, true);
        } else if (ssize->parsed()) {
            cfg.command = Command::sweep_size;
            apply_common(ssize_f, cfg, false);
            if (!cfg.spec) throw netgram::invalid_spec("sweep-size needs --family");
            if (ssize_f.n_range.empty()) throw netgram::invalid_spec("--n is required");
            netgram::parse_range(ssize_f.n_range, cfg.sweep_lo, cfg.sweep_hi, cfg.sweep_step);
        } else if (sleaders->parsed()) {
            cfg.command = Command::sweep_leaders;
            if (sleaders_f.n_range.empty()) throw netgram::invalid_spec("--n is required");
            std::size_t step = 1;
            netgram::parse_range(sleaders_f.n_range, cfg.sweep_lo, cfg.sweep_hi, step);
            if (cfg.sweep_lo != cfg.sweep_hi)
                throw netgram::invalid_spec("sweep-leaders takes a single --n");
            if (sleaders_f.gamma == "auto") cfg.gamma_auto = true;
            else cfg.gamma = netgram::cli_detail::parse_real(sleaders_f.gamma, "gamma");
            cfg.output_path = sleaders_f.output;
            cfg.divisor_count = divisors;
            if (!block_length.empty())
                cfg.block_length = netgram::cli_detail::parse_index(block_length, "block length");
            if (!leaders_per_block.empty()) {
                std::size_t step2 = 1;
                netgram::parse_range(leaders_per_block, cfg.leaders_lo, cfg.leaders_hi, step2);
            }
            if (!placement.empty()) {
                cfg.placement_set = true;
                if (placement == "spread") cfg.placement = netgram::Placement::spread;
                else if (placement == "clustered") cfg.placement = netgram::Placement::clustered;
                else throw netgram::invalid_spec("placement must be \"spread\" or \"clustered\"");
            }
        } else if (energy->parsed()) {
            cfg.command = Command::energy;
            apply_common(energy_f, cfg, true);
            if (target.empty()) throw netgram::invalid_spec("energy needs --target");
            netgram::parse_target(target, cfg);
            cfg.steps = steps;
        }
    } catch (const netgram::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    return netgram::run(cfg);
}
