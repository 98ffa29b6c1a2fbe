#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "netgram/errors.hpp"
#include "netgram/graphs.hpp"
#include "netgram/leader_pattern.hpp"
#include "netgram/lyapunov.hpp"
#include "netgram/matrix.hpp"
#include "netgram/spectral.hpp"

namespace netgram {

// x(t+1) = a_scaled x(t) + b u(t), with a_scaled = A/gamma certified to be a
// strict contraction and b a diagonal 0/1 leader selection.
struct ControlSystem {
    Matrix a_scaled;
    Matrix b;
    double gamma = 1.0;
    std::optional<GraphSpec> source_spec;

    std::size_t n() const { return a_scaled.rows(); }
};

enum class GramianMode { exact, series };

inline constexpr std::size_t kSeriesDefaultSteps = 500;

// A series term this small relative to the accumulated sum cannot change it.
inline constexpr double kSeriesTermFloor = 1e-14;

// Definiteness test is relative to the largest eigenvalue.
inline constexpr double kPdThresholdFactor = 1e-10;

struct GramianAnalysis {
    Matrix gramian;
    Spectrum eigenvalues;
    double kappa = std::numeric_limits<double>::infinity(); // +inf when singular
    double lambda_min = 0.0;
    bool positive_definite = false;
};

inline ControlSystem make_system(const Matrix& a, double gamma,
                                 const LeaderPattern& leaders) {
    if (!a.square()) throw dimension_mismatch("make_system: adjacency not square");
    if (!all_finite(a)) throw invalid_spec("make_system: adjacency has non-finite entries");
    const double s1 = largest_singular_value(a);
    if (!(gamma > s1))
        throw unstable("make_system: gamma " + std::to_string(gamma)
                       + " does not exceed the largest singular value "
                       + std::to_string(s1));
    ControlSystem sys;
    sys.a_scaled = scale_adjacency(a, gamma);
    sys.b = build_leader_matrix(leaders, a.rows());
    sys.gamma = gamma;
    return sys;
}

inline ControlSystem make_system(const GraphSpec& spec, double gamma,
                                 const LeaderPattern& leaders) {
    ControlSystem sys = make_system(build_adjacency(spec), gamma, leaders);
    sys.source_spec = spec;
    return sys;
}

namespace detail {

// Partial sum over t = 0..steps of a^t q (a^T)^t.  A zero term_floor sums
// every term; a positive one stops once a term is negligible relative to the
// accumulated sum.
inline Matrix gramian_partial_sum(const Matrix& a, const Matrix& q,
                                  std::size_t steps, double term_floor) {
    Matrix g = q;
    Matrix term = q;
    for (std::size_t t = 1; t <= steps; ++t) {
        term = congruence(a, term);
        const double tn = frobenius_norm(term);
        if (tn == 0.0) break;
        g = add(g, term);
        if (term_floor > 0.0 && tn < term_floor * frobenius_norm(g)) break;
    }
    return g;
}

} // namespace detail

// Gramian of the leader-selected system plus its spectral summary.  Exact
// mode solves the Lyapunov fixed point; series mode sums the first t_max
// reachability terms with early exit once terms stop contributing.
inline GramianAnalysis compute_gramian(const ControlSystem& sys,
                                       GramianMode mode = GramianMode::exact,
                                       double tol = kDefaultTol,
                                       std::size_t t_max = kSeriesDefaultSteps) {
    const Matrix q = multiply(sys.b, transpose(sys.b));
    GramianAnalysis out;
    out.gramian = (mode == GramianMode::exact)
        ? solve_discrete_lyapunov(sys.a_scaled, q, tol)
        : detail::gramian_partial_sum(sys.a_scaled, q, t_max, kSeriesTermFloor);
    out.eigenvalues = symmetric_eigenvalues(out.gramian, tol);
    const double alpha1 = out.eigenvalues.max();
    out.lambda_min = out.eigenvalues.min();
    out.positive_definite = out.lambda_min > kPdThresholdFactor * alpha1;
    out.kappa = out.positive_definite ? alpha1 / out.lambda_min
                                      : std::numeric_limits<double>::infinity();
    return out;
}

// Runs the dynamics from x0 under the given input sequence.
inline std::vector<double> simulate(const ControlSystem& sys,
                                    const std::vector<double>& x0,
                                    const std::vector<std::vector<double>>& inputs) {
    if (x0.size() != sys.n()) throw dimension_mismatch("simulate: state length differs");
    std::vector<double> x = x0;
    for (const auto& u : inputs) {
        if (u.size() != sys.n()) throw dimension_mismatch("simulate: input length differs");
        std::vector<double> ax = multiply(sys.a_scaled, x);
        std::vector<double> bu = multiply(sys.b, u);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = ax[i] + bu[i];
    }
    return x;
}

namespace detail {

inline Matrix steering_gramian(const ControlSystem& sys, std::size_t t) {
    if (t < 1) throw invalid_spec("steering horizon must be at least 1 step");
    const Matrix q = multiply(sys.b, transpose(sys.b));
    return gramian_partial_sum(sys.a_scaled, q, t - 1, 0.0);
}

} // namespace detail

// Minimum-energy input sequence u(0..t-1) driving the state from the origin
// to x_des in t steps: u(s) = B (A^T)^(t-1-s) y with y solving G y = x_des
// over the t-step reachability Gramian G.
inline std::vector<std::vector<double>> least_norm_input(const ControlSystem& sys,
                                                         const std::vector<double>& x_des,
                                                         std::size_t t) {
    if (x_des.size() != sys.n())
        throw dimension_mismatch("least_norm_input: target length differs");
    const Matrix g = detail::steering_gramian(sys, t);
    std::vector<double> v;
    try {
        v = solve_spd(g, x_des);
    } catch (const not_positive_definite&) {
        throw not_positive_definite("least_norm_input: the " + std::to_string(t)
                                    + "-step Gramian is singular; target unreachable");
    }
    const Matrix at = transpose(sys.a_scaled);
    std::vector<std::vector<double>> us(t);
    for (std::size_t back = 0; back < t; ++back) {
        us[t - 1 - back] = multiply(sys.b, v);
        if (back + 1 < t) v = multiply(at, v);
    }
    return us;
}

// Energy of the least-norm t-step steering input: x_des^T G^{-1} x_des over
// the same t-step reachability Gramian least_norm_input uses.
inline double min_energy(const ControlSystem& sys, const std::vector<double>& x_des,
                         std::size_t t) {
    if (x_des.size() != sys.n()) throw dimension_mismatch("min_energy: target length differs");
    const Matrix g = detail::steering_gramian(sys, t);
    return dot(x_des, solve_spd(g, x_des));
}

} // namespace netgram
