#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "netgram/errors.hpp"
#include "netgram/gramian.hpp"
#include "netgram/graphs.hpp"
#include "netgram/leader_pattern.hpp"

namespace netgram {

// One evaluated leader placement on a ring.  fraction_num/fraction_den is the
// leader share of the node count as a reduced rational, kept exact so rows
// can be grouped without float comparisons.
struct SweepRow {
    std::size_t n = 0;
    std::size_t fraction_num = 0;
    std::size_t fraction_den = 1;
    std::size_t block_length = 0;
    std::size_t leaders_per_block = 0;
    double lambda_min = 0.0;
    double kappa = 0.0;
};

inline std::string fraction_string(const SweepRow& r) {
    if (r.fraction_den == 1) return std::to_string(r.fraction_num);
    return std::to_string(r.fraction_num) + "/" + std::to_string(r.fraction_den);
}

// First `count` divisors of n in increasing order.
inline std::vector<std::size_t> first_divisors(std::size_t n, std::size_t count) {
    std::vector<std::size_t> out;
    for (std::size_t d = 1; d <= n && out.size() < count; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

// Evaluates block leader placements on the directed n-ring scaled by gamma.
// Each config must be a block pattern whose length divides n.  Rows come back
// in config order with the Gramian's extreme eigenvalues summarized.
inline std::vector<SweepRow> ring_leader_sweep(std::size_t n, double gamma,
                                               const std::vector<LeaderPattern>& configs) {
    const GraphSpec ring{Family::ring, Orientation::directed, n};
    const Matrix a = build_adjacency(ring);
    std::vector<SweepRow> rows;
    rows.reserve(configs.size());
    for (const LeaderPattern& p : configs) {
        if (p.kind != LeaderPattern::Kind::blocks)
            throw invalid_pattern("ring_leader_sweep: configs must be block patterns");
        ControlSystem sys = make_system(a, gamma, p);
        sys.source_spec = ring;
        const GramianAnalysis g = compute_gramian(sys, GramianMode::exact);
        SweepRow row;
        row.n = n;
        const std::size_t gcd = std::gcd(p.leaders_per_block, p.block_length);
        row.fraction_num = p.leaders_per_block / gcd;
        row.fraction_den = p.block_length / gcd;
        row.block_length = p.block_length;
        row.leaders_per_block = p.leaders_per_block;
        row.lambda_min = g.lambda_min;
        row.kappa = g.kappa;
        rows.push_back(row);
    }
    return rows;
}

} // namespace netgram
