#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "netgram/errors.hpp"
#include "netgram/gramian.hpp"
#include "netgram/graphs.hpp"
#include "netgram/matrix.hpp"
#include "netgram/spectral.hpp"

namespace netgram {

enum class BoundKind { upper, lower };

// Slack used when judging whether a measured value respects a bound.
inline constexpr double kBoundSlack = 1e-9;

struct BoundReport {
    std::string bound_name;
    BoundKind kind = BoundKind::upper;
    double bound_value = 0.0;
    double measured_value = 0.0;
    bool satisfied = false;
    // Alternate published form of the same bound, where one exists (the
    // directed-star bound is also quoted with the spectral gap squared).
    std::optional<double> alt_bound;
    std::string inputs_digest;
};

inline bool bound_holds(BoundKind kind, double bound, double measured) {
    const double slack = kBoundSlack * std::max(1.0, std::fabs(bound));
    return kind == BoundKind::upper ? measured <= bound + slack
                                    : measured >= bound - slack;
}

// Two-sided envelope for the i-th largest Gramian eigenvalue in terms of the
// sorted input-matrix diagonal beta and the extreme squared singular values
// of the scaled adjacency:
//   beta_i + sN^2 beta_n / (1 - sN^2)  <=  alpha_i  <=  beta_i + s1^2 beta_1 / (1 - s1^2).
struct EigenvalueEnvelope {
    double lower = 0.0;
    double upper = 0.0;
};

inline std::vector<EigenvalueEnvelope> gramian_eigenvalue_bounds(const ControlSystem& sys) {
    const Spectrum s2 = singular_values_squared(sys.a_scaled);
    const double s1 = s2.max();
    const double sn = s2.min();
    if (!(s1 < 1.0))
        throw unstable("gramian_eigenvalue_bounds: scaled adjacency is not a contraction");
    std::vector<double> beta(sys.n());
    for (std::size_t i = 0; i < sys.n(); ++i) beta[i] = sys.b(i, i);
    std::sort(beta.begin(), beta.end(), std::greater<double>());
    const double lift_low = sn * beta.back() / (1.0 - sn);
    const double lift_high = s1 * beta.front() / (1.0 - s1);
    std::vector<EigenvalueEnvelope> out(sys.n());
    for (std::size_t i = 0; i < sys.n(); ++i)
        out[i] = EigenvalueEnvelope{beta[i] + lift_low, beta[i] + lift_high};
    return out;
}

// Condition-number bound from the extreme squared singular values of an
// already scaled adjacency: kappa <= (1 - sN^2) / (1 - s1^2), measured
// against the all-leader Gramian of the same matrix.
inline BoundReport condition_number_bound(const Matrix& a_scaled,
                                          double tol = kDefaultTol) {
    const Spectrum s2 = singular_values_squared(a_scaled, tol);
    const double s1 = s2.max();
    const double sn = s2.min();
    if (!(s1 < 1.0))
        throw unstable("condition_number_bound: largest singular value "
                       + std::to_string(std::sqrt(s1)) + " is not below 1");
    BoundReport r;
    r.bound_name = "sigma_gap_condition";
    r.kind = BoundKind::upper;
    r.bound_value = (1.0 - sn) / (1.0 - s1);

    ControlSystem sys;
    sys.a_scaled = a_scaled;
    sys.b = identity(a_scaled.rows());
    sys.gamma = 1.0;
    r.measured_value = compute_gramian(sys, GramianMode::exact, tol).kappa;
    r.satisfied = bound_holds(r.kind, r.bound_value, r.measured_value);

    std::ostringstream digest;
    digest << "n=" << a_scaled.rows() << ";sigma1_sq=" << s1 << ";sigmaN_sq=" << sn;
    r.inputs_digest = digest.str();
    return r;
}

// Row/column-sum bounds on the largest squared singular value of an unscaled
// adjacency: the intermediate form max_i sum_j |a_ij| C_j (C_j the j-th
// absolute column sum) and the coarse cap M^2 from the local bound.
struct SchurBound {
    double intermediate = 0.0;
    double coarse = 0.0;
};

inline SchurBound schur_bound(const Matrix& a) {
    if (!a.square()) throw dimension_mismatch("schur_bound: matrix not square");
    const std::size_t n = a.rows();
    std::vector<double> col(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) col[j] += std::fabs(a(i, j));
    SchurBound out;
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += std::fabs(a(i, j)) * col[j];
        out.intermediate = std::max(out.intermediate, acc);
    }
    const double m = local_bound(a).m;
    out.coarse = m * m;
    return out;
}

// Size-independent condition cap for locally bounded networks: any family
// whose row and column sums stay below m obeys kappa <= gamma^2/(gamma^2 - m^2)
// once gamma exceeds m.
inline double uniform_condition_bound(double m, double gamma) {
    if (!(m > 0.0)) throw invalid_gamma("uniform_condition_bound: m must be positive");
    if (!(gamma > m))
        throw invalid_gamma("uniform_condition_bound: gamma " + std::to_string(gamma)
                            + " must exceed the local bound " + std::to_string(m));
    const double g2 = gamma * gamma;
    return g2 / (g2 - m * m);
}

// Closed-form condition bound for a canonical family: the singular-value gap
// bound evaluated with the analytic spectrum's extreme magnitudes.
inline double family_bound_value(const GraphSpec& spec, double gamma) {
    validate(spec);
    if (!(gamma > 0.0)) throw invalid_gamma("gamma must be positive");
    const Spectrum cf = closed_form_spectrum(spec);
    double s1_sq = 0.0, sn_sq = 0.0; // squared singular values of A/gamma
    const double g2 = gamma * gamma;
    if (cf.kind == SpectrumKind::eigenvalues) {
        double hi = 0.0, lo = std::numeric_limits<double>::infinity();
        for (double v : cf.values) {
            hi = std::max(hi, std::fabs(v));
            lo = std::min(lo, std::fabs(v));
        }
        s1_sq = hi * hi / g2;
        sn_sq = lo * lo / g2;
    } else {
        s1_sq = cf.max() / g2;
        sn_sq = cf.min() / g2;
    }
    if (!(s1_sq < 1.0))
        throw unstable("family_bound_value: gamma " + std::to_string(gamma)
                       + " does not stabilize " + family_name(spec.family)
                       + " of size " + std::to_string(spec.n));
    return (1.0 - sn_sq) / (1.0 - s1_sq);
}

// Family bound with the measured all-leader kappa alongside.  For the
// directed star the squared-gap variant of the bound is reported too.
inline BoundReport family_condition_bound(const GraphSpec& spec, double gamma) {
    BoundReport r;
    r.bound_name = "family_condition";
    r.kind = BoundKind::upper;
    r.bound_value = family_bound_value(spec, gamma);
    if (spec.family == Family::star && spec.orientation == Orientation::directed) {
        // Squared-gap variant; only meaningful once gamma clears n-1 itself.
        const double gap = double(spec.n - 1) * double(spec.n - 1);
        if (gamma * gamma > gap) r.alt_bound = gamma * gamma / (gamma * gamma - gap);
    }
    r.measured_value =
        compute_gramian(make_system(spec, gamma, LeaderPattern::all_nodes())).kappa;
    r.satisfied = bound_holds(r.kind, r.bound_value, r.measured_value);

    std::ostringstream digest;
    digest << "family=" << family_name(spec.family)
           << ";orientation=" << orientation_name(spec.orientation)
           << ";n=" << spec.n << ";gamma=" << gamma;
    r.inputs_digest = digest.str();
    return r;
}

} // namespace netgram
