#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "netgram/errors.hpp"
#include "netgram/matrix.hpp"

namespace netgram {

enum class Placement { spread, clustered };

// Which nodes receive an input.  Node indices are 1-based.
//
//  - all: every node is a leader.
//  - explicit_set: exactly the listed nodes.
//  - uniform_fraction: roughly a fraction f of nodes, one every ceil(1/f)
//    starting at `phase`; positions wrap around for ring-like placement and
//    truncate otherwise.
//  - blocks: the node set splits into consecutive blocks of block_length;
//    each block holds leaders_per_block leaders, either spread evenly from
//    the block start or clustered at the block start.
struct LeaderPattern {
    enum class Kind { all, explicit_set, uniform_fraction, blocks };

    Kind kind = Kind::all;
    std::vector<std::size_t> nodes;   // explicit_set
    double fraction = 0.0;            // uniform_fraction
    std::size_t phase = 1;
    bool wrap = false;
    std::size_t block_length = 0;     // blocks
    std::size_t leaders_per_block = 0;
    Placement placement = Placement::spread;

    static LeaderPattern all_nodes() { return LeaderPattern{}; }

    static LeaderPattern explicit_nodes(std::vector<std::size_t> idx) {
        LeaderPattern p;
        p.kind = Kind::explicit_set;
        p.nodes = std::move(idx);
        return p;
    }

    static LeaderPattern uniform(double f, std::size_t phase = 1, bool wrap = false) {
        LeaderPattern p;
        p.kind = Kind::uniform_fraction;
        p.fraction = f;
        p.phase = phase;
        p.wrap = wrap;
        return p;
    }

    static LeaderPattern block_pattern(std::size_t block_length,
                                       std::size_t leaders_per_block,
                                       Placement placement) {
        LeaderPattern p;
        p.kind = Kind::blocks;
        p.block_length = block_length;
        p.leaders_per_block = leaders_per_block;
        p.placement = placement;
        return p;
    }
};

// Resolves a pattern to the sorted set of leader nodes for an n-node graph.
inline std::vector<std::size_t> leader_nodes(const LeaderPattern& p, std::size_t n) {
    if (n < 1) throw invalid_pattern("leader_nodes: empty graph");
    std::set<std::size_t> out;
    switch (p.kind) {
        case LeaderPattern::Kind::all:
            for (std::size_t i = 1; i <= n; ++i) out.insert(i);
            break;
        case LeaderPattern::Kind::explicit_set:
            for (std::size_t i : p.nodes) {
                if (i < 1 || i > n)
                    throw invalid_pattern("leader node " + std::to_string(i)
                                          + " outside 1.." + std::to_string(n));
                out.insert(i);
            }
            break;
        case LeaderPattern::Kind::uniform_fraction: {
            if (!(p.fraction > 0.0) || p.fraction > 1.0)
                throw invalid_pattern("leader fraction must lie in (0, 1]");
            if (p.phase < 1 || p.phase > n)
                throw invalid_pattern("leader phase must lie in 1.." + std::to_string(n));
            const std::size_t stride = std::size_t(std::ceil(1.0 / p.fraction));
            if (p.wrap) {
                const std::size_t count = (n + stride - 1) / stride;
                for (std::size_t k = 0; k < count; ++k)
                    out.insert((p.phase - 1 + k * stride) % n + 1);
            } else {
                for (std::size_t pos = p.phase; pos <= n; pos += stride) out.insert(pos);
            }
            break;
        }
        case LeaderPattern::Kind::blocks: {
            if (p.block_length < 1 || n % p.block_length != 0)
                throw invalid_pattern("block length must divide the node count");
            if (p.leaders_per_block < 1 || p.leaders_per_block > p.block_length)
                throw invalid_pattern("leaders per block must lie in 1..block_length");
            const std::size_t step =
                p.placement == Placement::spread ? p.block_length / p.leaders_per_block : 1;
            for (std::size_t start = 0; start < n; start += p.block_length)
                for (std::size_t k = 0; k < p.leaders_per_block; ++k)
                    out.insert(start + k * step + 1);
            break;
        }
    }
    return std::vector<std::size_t>(out.begin(), out.end());
}

// Diagonal 0/1 input matrix selecting the pattern's leader nodes.
inline Matrix build_leader_matrix(const LeaderPattern& p, std::size_t n) {
    Matrix b(n, n);
    for (std::size_t i : leader_nodes(p, n)) b(i - 1, i - 1) = 1.0;
    return b;
}

// Infinite-horizon Gramian of the hub-to-leaves star under 1/gamma scaling,
// assembled entry by entry: the hub decouples, every leaf picks up the hub's
// mass attenuated once, and leaf pairs couple through the hub alone.
inline Matrix star_gramian_closed_form(std::size_t n, double gamma, const Matrix& b) {
    if (n < 2) throw invalid_pattern("star needs at least 2 nodes");
    if (b.rows() != n || b.cols() != n)
        throw dimension_mismatch("star_gramian_closed_form: leader matrix size differs");
    if (!(gamma > std::sqrt(double(n - 1))))
        throw invalid_gamma("star_gramian_closed_form: gamma must exceed sqrt(n-1)");
    const double hub = b(0, 0);
    const double relay = hub / (gamma * gamma);
    Matrix g(n, n);
    g(0, 0) = hub;
    for (std::size_t i = 1; i < n; ++i) {
        g(i, i) = relay + b(i, i);
        for (std::size_t j = 1; j < i; ++j) {
            g(i, j) = relay;
            g(j, i) = relay;
        }
    }
    return g;
}

// Infinite-horizon Gramian of the directed chain under 1/gamma scaling.
// Diagonal: node i accumulates every upstream leader k <= i attenuated by
// gamma^(2(k-i)).  Evaluated by a Horner-style recurrence, exact for
// power-of-two gamma.
inline Matrix path_gramian_closed_form(std::size_t n, double gamma, const Matrix& b) {
    if (n < 2) throw invalid_pattern("path needs at least 2 nodes");
    if (b.rows() != n || b.cols() != n)
        throw dimension_mismatch("path_gramian_closed_form: leader matrix size differs");
    if (!(gamma > 1.0))
        throw invalid_gamma("path_gramian_closed_form: gamma must exceed 1");
    const double decay = 1.0 / (gamma * gamma);
    Matrix g(n, n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc = acc * decay + b(i, i);
        g(i, i) = acc;
    }
    return g;
}

// Floor on the smallest Gramian eigenvalue of a chain whose leaders are
// placed uniformly with fraction f: every node sits within 1/f of an
// upstream leader, so its diagonal entry is at least gamma^(-2/f).
inline double path_lambda_min_lower_bound(double f, double gamma) {
    if (!(f > 0.0) || f > 1.0) throw invalid_pattern("leader fraction must lie in (0, 1]");
    if (!(gamma > 1.0)) throw invalid_gamma("gamma must exceed 1");
    return std::pow(gamma, -2.0 / f);
}

// A star is controllable exactly when the hub is a leader and at most one
// leaf is not: two input-free leaves are interchangeable and cannot be
// steered apart.
inline bool star_controllable(std::size_t n, const std::vector<std::size_t>& leaders) {
    if (n < 2) throw invalid_pattern("star needs at least 2 nodes");
    bool hub = false;
    std::set<std::size_t> leaves;
    for (std::size_t i : leaders) {
        if (i < 1 || i > n)
            throw invalid_pattern("leader node " + std::to_string(i)
                                  + " outside 1.." + std::to_string(n));
        if (i == 1) hub = true;
        else leaves.insert(i);
    }
    return hub && leaves.size() + 2 >= n;
}

} // namespace netgram
