#pragma once

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "netgram/bounds.hpp"
#include "netgram/errors.hpp"
#include "netgram/format.hpp"
#include "netgram/gramian.hpp"
#include "netgram/graphs.hpp"
#include "netgram/leader_pattern.hpp"
#include "netgram/leader_sweep.hpp"

namespace netgram {

enum class Command { gen, analyze, bounds, sweep_size, sweep_leaders, energy };

inline constexpr double kAutoGammaMargin = 1.05;

// Fully resolved invocation.  The command either names a canonical family
// (spec) or points at an adjacency file (input_path); gamma is explicit or
// derived with a 1.05 margin.
struct RunConfig {
    Command command = Command::analyze;
    std::optional<GraphSpec> spec;
    std::optional<std::string> input_path;
    double gamma = 0.0;
    bool gamma_auto = false;
    LeaderPattern leaders;
    std::string output_path; // empty writes to the stream handed to run()
    GramianMode mode = GramianMode::exact;
    std::size_t t_max = kSeriesDefaultSteps;

    std::size_t sweep_lo = 0, sweep_hi = 0, sweep_step = 1; // sweep-size
    std::size_t divisor_count = 0;                          // sweep-leaders regime A
    std::size_t block_length = 0;                           // sweep-leaders regime B
    std::size_t leaders_lo = 1, leaders_hi = 1;
    Placement placement = Placement::clustered;
    bool placement_set = false;

    std::vector<double> target; // energy; resolved against n by run()
    std::optional<std::size_t> target_unit;
    std::size_t steps = kSeriesDefaultSteps;
};

// ---- descriptor parsing ------------------------------------------------

namespace cli_detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline std::size_t parse_index(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size() || v < 1) throw std::invalid_argument(s);
        return std::size_t(v);
    } catch (const std::exception&) {
        throw invalid_spec("cannot parse " + what + " \"" + s + "\"");
    }
}

inline double parse_real(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw invalid_spec("cannot parse " + what + " \"" + s + "\"");
    }
}

inline double parse_fraction(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return parse_real(s, "fraction");
    const double num = parse_real(s.substr(0, slash), "fraction numerator");
    const double den = parse_real(s.substr(slash + 1), "fraction denominator");
    if (den == 0.0) throw invalid_spec("fraction denominator is zero");
    return num / den;
}

} // namespace cli_detail

// Leader descriptor: "all", "explicit:1,3,5", "fraction:1/4[:phase]",
// "blocks:L:m:spread|clustered".
inline LeaderPattern parse_leaders(const std::string& desc) {
    using cli_detail::parse_fraction;
    using cli_detail::parse_index;
    using cli_detail::split;
    const auto parts = split(desc, ':');
    const std::string& head = parts[0];
    if (head == "all") {
        if (parts.size() != 1) throw invalid_pattern("leader descriptor \"all\" takes no arguments");
        return LeaderPattern::all_nodes();
    }
    if (head == "explicit") {
        if (parts.size() != 2 || parts[1].empty())
            throw invalid_pattern("expected explicit:<i,j,...>");
        std::vector<std::size_t> idx;
        for (const auto& tok : split(parts[1], ','))
            idx.push_back(parse_index(tok, "leader node"));
        return LeaderPattern::explicit_nodes(std::move(idx));
    }
    if (head == "fraction") {
        if (parts.size() < 2 || parts.size() > 3)
            throw invalid_pattern("expected fraction:<f>[:<phase>]");
        const double f = parse_fraction(parts[1]);
        if (!(f > 0.0) || f > 1.0) throw invalid_pattern("leader fraction must lie in (0, 1]");
        const std::size_t phase = parts.size() == 3 ? parse_index(parts[2], "phase") : 1;
        return LeaderPattern::uniform(f, phase);
    }
    if (head == "blocks") {
        if (parts.size() != 4) throw invalid_pattern("expected blocks:<L>:<m>:<spread|clustered>");
        const std::size_t len = parse_index(parts[1], "block length");
        const std::size_t m = parse_index(parts[2], "leaders per block");
        Placement placement;
        if (parts[3] == "spread") placement = Placement::spread;
        else if (parts[3] == "clustered") placement = Placement::clustered;
        else throw invalid_pattern("placement must be \"spread\" or \"clustered\"");
        return LeaderPattern::block_pattern(len, m, placement);
    }
    throw invalid_pattern("unknown leader descriptor \"" + desc + "\"");
}

// Size range: "n", "lo..hi", or "lo..hi:step".
inline void parse_range(const std::string& s, std::size_t& lo, std::size_t& hi,
                        std::size_t& step) {
    using cli_detail::parse_index;
    step = 1;
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        lo = hi = parse_index(s, "size");
        return;
    }
    lo = parse_index(s.substr(0, dots), "range start");
    std::string rest = s.substr(dots + 2);
    const auto colon = rest.find(':');
    if (colon != std::string::npos) {
        step = parse_index(rest.substr(colon + 1), "range step");
        rest = rest.substr(0, colon);
    }
    hi = parse_index(rest, "range end");
    if (hi < lo) throw invalid_spec("range end precedes range start");
}

// Target descriptor: "e<k>" for a unit vector or a comma list of reals.
inline void parse_target(const std::string& s, RunConfig& cfg) {
    cfg.target.clear();
    cfg.target_unit.reset();
    if (s.size() > 1 && s[0] == 'e' && std::isdigit(static_cast<unsigned char>(s[1]))) {
        cfg.target_unit = cli_detail::parse_index(s.substr(1), "unit target index");
        return;
    }
    for (const auto& tok : cli_detail::split(s, ','))
        cfg.target.push_back(cli_detail::parse_real(tok, "target entry"));
}

// ---- command execution -------------------------------------------------

namespace cli_detail {

struct ResolvedSystem {
    Matrix a;
    std::optional<GraphSpec> spec;
};

inline ResolvedSystem resolve_matrix(const RunConfig& cfg) {
    if (cfg.spec && cfg.input_path)
        throw invalid_spec("give either a family or an input file, not both");
    if (cfg.spec) return {build_adjacency(*cfg.spec), cfg.spec};
    if (cfg.input_path) {
        std::ifstream in(*cfg.input_path);
        if (!in) throw invalid_spec("cannot open \"" + *cfg.input_path + "\"");
        return {read_adjacency(in), std::nullopt};
    }
    throw invalid_spec("no graph given: use a family selector or an input file");
}

// Auto gamma uses the family-wide closed form when the family is known and
// the measured largest singular value otherwise, both with a 1.05 margin.
inline double resolve_gamma(const RunConfig& cfg, const ResolvedSystem& rs,
                            std::size_t n_max) {
    if (!cfg.gamma_auto) {
        if (!(cfg.gamma > 0.0)) throw invalid_gamma("gamma must be positive");
        return cfg.gamma;
    }
    if (rs.spec)
        return choose_gamma(rs.spec->family, rs.spec->orientation, n_max, kAutoGammaMargin);
    return kAutoGammaMargin * largest_singular_value(rs.a);
}

inline LeaderPattern adapt_leaders(const RunConfig& cfg) {
    LeaderPattern p = cfg.leaders;
    // Uniform placement wraps around on rings and truncates elsewhere.
    if (p.kind == LeaderPattern::Kind::uniform_fraction)
        p.wrap = cfg.spec && cfg.spec->family == Family::ring;
    return p;
}

inline std::string flag(bool v) { return v ? "1" : "0"; }

inline void emit_bound_row(std::ostream& out, const BoundReport& r) {
    out << r.bound_name << "," << (r.kind == BoundKind::upper ? "upper" : "lower") << ","
        << format_double(r.bound_value) << "," << format_double(r.measured_value) << ","
        << flag(r.satisfied) << "," << (r.alt_bound ? format_double(*r.alt_bound) : "")
        << "," << r.inputs_digest << "\n";
}

inline void run_gen(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.spec) throw invalid_spec("gen needs a family selector");
    write_adjacency(out, build_adjacency(*cfg.spec));
}

inline void run_analyze(const RunConfig& cfg, std::ostream& out) {
    const ResolvedSystem rs = resolve_matrix(cfg);
    const double gamma = resolve_gamma(cfg, rs, rs.a.rows());
    ControlSystem sys = make_system(rs.a, gamma, adapt_leaders(cfg));
    sys.source_spec = rs.spec;
    const GramianAnalysis g = compute_gramian(sys, cfg.mode, kDefaultTol, cfg.t_max);
    out << "n,gamma,kappa,lambda_min,pd\n";
    out << rs.a.rows() << "," << format_double(gamma) << "," << format_double(g.kappa)
        << "," << format_double(g.lambda_min) << "," << flag(g.positive_definite) << "\n";
}

inline void run_bounds(const RunConfig& cfg, std::ostream& out) {
    const ResolvedSystem rs = resolve_matrix(cfg);
    const double gamma = resolve_gamma(cfg, rs, rs.a.rows());
    const std::size_t n = rs.a.rows();

    out << "bound_name,kind,bound_value,measured_value,satisfied,alt_bound,inputs_digest\n";

    // Condition bounds are stated for the all-leader Gramian.
    BoundReport sigma = condition_number_bound(scale_adjacency(rs.a, gamma));
    emit_bound_row(out, sigma);
    if (rs.spec) emit_bound_row(out, family_condition_bound(*rs.spec, gamma));

    const BoundednessReport lb = local_bound(rs.a);
    BoundReport cap;
    cap.bound_name = "local_bound_condition";
    cap.kind = BoundKind::upper;
    cap.bound_value = (lb.m > 0.0 && gamma > lb.m)
        ? uniform_condition_bound(lb.m, gamma)
        : std::numeric_limits<double>::infinity();
    cap.measured_value = sigma.measured_value;
    cap.satisfied = bound_holds(cap.kind, cap.bound_value, cap.measured_value);
    {
        std::ostringstream digest;
        digest << "n=" << n << ";gamma=" << gamma << ";m=" << lb.m;
        cap.inputs_digest = digest.str();
    }
    emit_bound_row(out, cap);

    const SchurBound sb = schur_bound(rs.a);
    const double s1_sq = singular_values_squared(rs.a).max();
    for (const auto& [name, value] :
         {std::pair<const char*, double>{"schur_intermediate_sigma1_sq", sb.intermediate},
          std::pair<const char*, double>{"schur_coarse_sigma1_sq", sb.coarse}}) {
        BoundReport r;
        r.bound_name = name;
        r.kind = BoundKind::upper;
        r.bound_value = value;
        r.measured_value = s1_sq;
        r.satisfied = bound_holds(r.kind, r.bound_value, r.measured_value);
        std::ostringstream digest;
        digest << "n=" << n;
        r.inputs_digest = digest.str();
        emit_bound_row(out, r);
    }

    // Eigenvalue envelope for the requested leader set.
    ControlSystem sys = make_system(rs.a, gamma, adapt_leaders(cfg));
    sys.source_spec = rs.spec;
    const auto env = gramian_eigenvalue_bounds(sys);
    const GramianAnalysis g = compute_gramian(sys);
    std::ostringstream digest;
    digest << "n=" << n << ";gamma=" << gamma;
    for (const auto& [name, kind, bound, measured] :
         {std::tuple<const char*, BoundKind, double, double>{
              "eigenvalue_upper", BoundKind::upper, env.front().upper, g.eigenvalues.max()},
          std::tuple<const char*, BoundKind, double, double>{
              "eigenvalue_lower", BoundKind::lower, env.back().lower, g.eigenvalues.min()}}) {
        BoundReport r;
        r.bound_name = name;
        r.kind = kind;
        r.bound_value = bound;
        r.measured_value = measured;
        r.satisfied = bound_holds(kind, bound, measured);
        r.inputs_digest = digest.str();
        emit_bound_row(out, r);
    }
}

inline void run_sweep_size(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.spec) throw invalid_spec("sweep-size needs a family selector");
    if (cfg.sweep_lo < 2) throw invalid_spec("sweep sizes start at 2");
    GraphSpec spec = *cfg.spec;
    spec.n = cfg.sweep_hi;
    const double gamma = resolve_gamma(cfg, ResolvedSystem{Matrix(), spec}, cfg.sweep_hi);

    out << "n,gamma,kappa,bound_eq4,bound_family,bound_theorem2,lambda_min\n";
    for (std::size_t n = cfg.sweep_lo; n <= cfg.sweep_hi; n += cfg.sweep_step) {
        spec.n = n;
        validate(spec);
        const Matrix a = build_adjacency(spec);
        ControlSystem sys = make_system(a, gamma, LeaderPattern::all_nodes());
        sys.source_spec = spec;
        const GramianAnalysis g = compute_gramian(sys);

        const Spectrum s2 = singular_values_squared(sys.a_scaled);
        const double bound_sigma = (1.0 - s2.min()) / (1.0 - s2.max());
        const double bound_family = family_bound_value(spec, gamma);
        const double m = local_bound(a).m;
        const double bound_cap = (m > 0.0 && gamma > m)
            ? uniform_condition_bound(m, gamma)
            : std::numeric_limits<double>::infinity();

        out << n << "," << format_double(gamma) << "," << format_double(g.kappa) << ","
            << format_double(bound_sigma) << "," << format_double(bound_family) << ","
            << format_double(bound_cap) << "," << format_double(g.lambda_min) << "\n";
    }
}

inline void run_sweep_leaders(const RunConfig& cfg, std::ostream& out) {
    if (cfg.spec || cfg.input_path)
        throw invalid_spec("sweep-leaders runs on the directed ring; give --n, not a family");
    const std::size_t n = cfg.sweep_hi;
    if (n < 3) throw invalid_spec("sweep-leaders needs a ring size of at least 3");
    const double gamma = cfg.gamma_auto ? 2.0 : cfg.gamma;

    std::vector<LeaderPattern> configs;
    if (cfg.divisor_count > 0) {
        // One leader per block, at the block start unless a placement is forced.
        const Placement p = cfg.placement_set ? cfg.placement : Placement::spread;
        for (std::size_t d : first_divisors(n, cfg.divisor_count))
            configs.push_back(LeaderPattern::block_pattern(d, 1, p));
    } else if (cfg.block_length > 0) {
        const Placement p = cfg.placement_set ? cfg.placement : Placement::clustered;
        for (std::size_t m = cfg.leaders_lo; m <= cfg.leaders_hi; ++m)
            configs.push_back(LeaderPattern::block_pattern(cfg.block_length, m, p));
    } else {
        throw invalid_spec("sweep-leaders needs --divisors or --block-length");
    }

    out << "n,fraction,block_length,leaders_per_block,lambda_min,kappa\n";
    for (const SweepRow& r : ring_leader_sweep(n, gamma, configs))
        out << r.n << "," << fraction_string(r) << "," << r.block_length << ","
            << r.leaders_per_block << "," << format_double(r.lambda_min) << ","
            << format_double(r.kappa) << "\n";
}

inline void run_energy(const RunConfig& cfg, std::ostream& out) {
    const ResolvedSystem rs = resolve_matrix(cfg);
    const double gamma = resolve_gamma(cfg, rs, rs.a.rows());
    ControlSystem sys = make_system(rs.a, gamma, adapt_leaders(cfg));
    sys.source_spec = rs.spec;

    std::vector<double> x_des;
    if (cfg.target_unit) {
        if (*cfg.target_unit > sys.n())
            throw invalid_spec("unit target index exceeds the node count");
        x_des.assign(sys.n(), 0.0);
        x_des[*cfg.target_unit - 1] = 1.0;
    } else if (!cfg.target.empty()) {
        if (cfg.target.size() != sys.n())
            throw invalid_spec("target length differs from the node count");
        x_des = cfg.target;
    } else {
        throw invalid_spec("energy needs --target");
    }

    const double energy = min_energy(sys, x_des, cfg.steps);
    const auto us = least_norm_input(sys, x_des, cfg.steps);
    out << "quantity,value\n";
    out << "min_energy," << format_double(energy) << "\n";
    for (std::size_t t = 0; t < us.size(); ++t)
        out << "input_norm_" << t << "," << format_double(norm2(us[t])) << "\n";
}

} // namespace cli_detail

// Executes one resolved invocation, writing CSV (or an adjacency file for
// gen) to output_path or `fallback`.  Returns the process exit code: 0 on
// success, 1 for configuration errors, 2 for numerical failures.
inline int run(const RunConfig& cfg, std::ostream& fallback = std::cout,
               std::ostream& err = std::cerr) {
    try {
        std::ofstream file;
        std::ostream* out = &fallback;
        if (!cfg.output_path.empty()) {
            file.open(cfg.output_path);
            if (!file) throw invalid_spec("cannot open output file \"" + cfg.output_path + "\"");
            out = &file;
        }
        switch (cfg.command) {
            case Command::gen: cli_detail::run_gen(cfg, *out); break;
            case Command::analyze: cli_detail::run_analyze(cfg, *out); break;
            case Command::bounds: cli_detail::run_bounds(cfg, *out); break;
            case Command::sweep_size: cli_detail::run_sweep_size(cfg, *out); break;
            case Command::sweep_leaders: cli_detail::run_sweep_leaders(cfg, *out); break;
            case Command::energy: cli_detail::run_energy(cfg, *out); break;
        }
        return 0;
    } catch (const config_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const numerical_error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}

} // namespace netgram
