#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "netgram/errors.hpp"
#include "netgram/matrix.hpp"

namespace netgram {

inline constexpr double kDefaultTol = 1e-12;

// Jacobi sweep budget.  Cyclic sweeps converge quadratically once the
// off-diagonal mass is small; well-conditioned symmetric matrices finish in
// under fifteen sweeps, so a hundred signals something is wrong.
inline constexpr int kJacobiMaxSweeps = 100;

// Squared singular values below this are treated as exact zeros.
inline constexpr double kSigmaSquaredFloor = 1e-14;

enum class SpectrumKind { eigenvalues, squared_singular_values };

// Eigenvalues or squared singular values, always sorted descending.
struct Spectrum {
    std::vector<double> values;
    SpectrumKind kind = SpectrumKind::eigenvalues;

    double max() const { return values.front(); }
    double min() const { return values.back(); }
    std::size_t size() const { return values.size(); }
};

namespace detail {

inline double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

} // namespace detail

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotation sweeps.
// Invariant: the Frobenius norm of the working matrix never changes, so the
// stopping test compares the off-diagonal norm against tol * ||m||_F.
inline Spectrum symmetric_eigenvalues(const Matrix& m, double tol = kDefaultTol) {
    if (!m.square()) throw dimension_mismatch("symmetric_eigenvalues: matrix not square");
    if (!is_symmetric(m, tol))
        throw not_symmetric("symmetric_eigenvalues: matrix is not symmetric within tolerance");

    const std::size_t n = m.rows();
    Matrix a = symmetrize(m);
    const double total = frobenius_norm(a);
    const double target = tol * total;
    // Entries this small cannot push the off-diagonal norm above the target
    // even if every off-diagonal slot held one, so rotations on them are skipped.
    const double skip = (n > 1) ? target / double(2 * n) : 0.0;

    if (total > 0.0) {
        bool converged = false;
        for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
            if (detail::off_diagonal_norm(a) <= target) {
                converged = true;
                break;
            }
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const double apq = a(p, q);
                    if (std::fabs(apq) <= skip) continue;
                    const double app = a(p, p);
                    const double aqq = a(q, q);
                    const double theta = (aqq - app) / (2.0 * apq);
                    const double t = (theta >= 0.0)
                        ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                        : -1.0 / (-theta + std::sqrt(theta * theta + 1.0));
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;
                    for (std::size_t r = 0; r < n; ++r) {
                        if (r == p || r == q) continue;
                        const double arp = a(r, p);
                        const double arq = a(r, q);
                        const double np = c * arp - s * arq;
                        const double nq = s * arp + c * arq;
                        a(r, p) = np;
                        a(p, r) = np;
                        a(r, q) = nq;
                        a(q, r) = nq;
                    }
                    a(p, p) = app - t * apq;
                    a(q, q) = aqq + t * apq;
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                }
            }
        }
        if (!converged && detail::off_diagonal_norm(a) > target)
            throw no_convergence("symmetric_eigenvalues: off-diagonal norm "
                                 + std::to_string(detail::off_diagonal_norm(a))
                                 + " still above target after "
                                 + std::to_string(kJacobiMaxSweeps) + " sweeps");
    }

    Spectrum s;
    s.kind = SpectrumKind::eigenvalues;
    s.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.values[i] = a(i, i);
    std::sort(s.values.begin(), s.values.end(), std::greater<double>());
    return s;
}

// Squared singular values of a general square matrix, as eigenvalues of a a^T.
// Values below kSigmaSquaredFloor (including small negative roundoff) clamp to 0.
inline Spectrum singular_values_squared(const Matrix& a, double tol = kDefaultTol) {
    if (!a.square()) throw dimension_mismatch("singular_values_squared: matrix not square");
    const std::size_t n = a.rows();
    // Build a a^T from row dot products; filling both triangles from one
    // computation keeps the product exactly symmetric.
    Matrix aat(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double* ri = a.row_ptr(i);
        for (std::size_t j = i; j < n; ++j) {
            const double* rj = a.row_ptr(j);
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += ri[k] * rj[k];
            aat(i, j) = acc;
            aat(j, i) = acc;
        }
    }
    Spectrum s = symmetric_eigenvalues(aat, tol);
    s.kind = SpectrumKind::squared_singular_values;
    for (double& v : s.values)
        if (v < kSigmaSquaredFloor) v = 0.0;
    return s;
}

inline double largest_singular_value(const Matrix& a, double tol = kDefaultTol) {
    return std::sqrt(singular_values_squared(a, tol).max());
}

// Ratio of extreme spectrum entries.  Requires a positive smallest entry.
inline double condition_number(const Spectrum& s) {
    if (s.values.empty()) throw dimension_mismatch("condition_number: empty spectrum");
    if (s.min() <= 0.0)
        throw singular_matrix("condition_number: smallest spectrum entry "
                              + std::to_string(s.min()) + " is not positive");
    return s.max() / s.min();
}

} // namespace netgram
