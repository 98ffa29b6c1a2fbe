#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "netgram/errors.hpp"
#include "netgram/matrix.hpp"

namespace netgram {

// Doubling iteration budget.  ||A^(2^k)|| contracts quadratically for any
// Schur-stable matrix, so 64 squarings is far more than spectral radii up to
// 1 - 1e-7 ever need.
inline constexpr int kDoublingBudget = 64;

// A Schur-stability certificate: some power of the iterate must fall below
// this norm within the budget, otherwise the matrix is treated as unstable.
inline constexpr double kStabilityThreshold = 1e-8;

namespace detail {

// Once ||A_k||_F is this small the next update A_k G A_k^T cannot move any
// representable entry of G, including subnormal diagonal tails.
inline constexpr double kTailCutoff = 1e-155;

inline constexpr double kDivergenceGuard = 1e100;

} // namespace detail

// Solves A X A^T - X = -Q for the series limit X = sum_t A^t Q (A^T)^t by
// doubling: after k rounds the accumulator holds the partial sum over
// t < 2^k and the iterate holds A^(2^k).  Iteration continues past the
// stability certificate until the iterate norm underflows, so diagonal
// entries fed only by long paths are still collected.
inline Matrix solve_discrete_lyapunov(const Matrix& a, const Matrix& q,
                                      double tol = 1e-12) {
    if (!a.square()) throw dimension_mismatch("solve_discrete_lyapunov: a not square");
    if (q.rows() != a.rows() || q.cols() != a.cols())
        throw dimension_mismatch("solve_discrete_lyapunov: q shape differs from a");
    if (!is_symmetric(q, 1e-10))
        throw not_symmetric("solve_discrete_lyapunov: q is not symmetric");

    const double qnorm = frobenius_norm(q);
    Matrix g = symmetrize(q);
    if (qnorm == 0.0) return g;

    Matrix ak = a;
    bool certified = false;
    for (int it = 0; it < kDoublingBudget; ++it) {
        const double na = frobenius_norm(ak);
        if (!std::isfinite(na) || na > detail::kDivergenceGuard)
            throw no_convergence("solve_discrete_lyapunov: iterate norm diverged; "
                                 "state matrix is not Schur stable");
        if (na < kStabilityThreshold) certified = true;
        if (na < detail::kTailCutoff) break;
        g = add(g, congruence(ak, g));
        ak = multiply(ak, ak);
    }
    if (!certified)
        throw no_convergence("solve_discrete_lyapunov: ||A_k||_F stayed at "
                             + std::to_string(frobenius_norm(ak)) + " after "
                             + std::to_string(kDoublingBudget)
                             + " doublings; state matrix is not Schur stable");

    g = symmetrize(g);
    const double residual = frobenius_norm(subtract(add(congruence(a, g), q), g));
    if (residual > tol * qnorm)
        throw no_convergence("solve_discrete_lyapunov: relative residual "
                             + std::to_string(residual / qnorm)
                             + " exceeds tolerance");
    return g;
}

namespace detail {

// Lower Cholesky factor of a symmetric positive definite matrix.
inline Matrix cholesky(const Matrix& g) {
    const std::size_t n = g.rows();
    Matrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double acc = g(i, j);
            for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * l(j, k);
            if (i == j) {
                if (acc <= 0.0)
                    throw not_positive_definite(
                        "cholesky: pivot " + std::to_string(acc) + " at index "
                        + std::to_string(i + 1) + " is not positive");
                l(i, i) = std::sqrt(acc);
            } else {
                l(i, j) = acc / l(j, j);
            }
        }
    }
    return l;
}

} // namespace detail

// Solves g x = rhs for symmetric positive definite g via Cholesky
// factorization and forward/back substitution.
inline std::vector<double> solve_spd(const Matrix& g, const std::vector<double>& rhs) {
    if (!g.square()) throw dimension_mismatch("solve_spd: matrix not square");
    if (g.rows() != rhs.size())
        throw dimension_mismatch("solve_spd: right-hand side length differs");
    if (!is_symmetric(g, 1e-10)) throw not_symmetric("solve_spd: matrix is not symmetric");

    const std::size_t n = g.rows();
    const Matrix l = detail::cholesky(g);
    std::vector<double> y(n), x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = rhs[i];
        for (std::size_t k = 0; k < i; ++k) acc -= l(i, k) * y[k];
        y[i] = acc / l(i, i);
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double acc = y[ii];
        for (std::size_t k = ii + 1; k < n; ++k) acc -= l(k, ii) * x[k];
        x[ii] = acc / l(ii, ii);
    }
    return x;
}

} // namespace netgram
