#pragma once

#include "bergex/errors.hpp"
#include "bergex/space.hpp"

#include <cstddef>

namespace bergex {

struct SolverOptions {
    /// Stop once the KKT alignment residual drops below this.
    double kkt_tol = 1e-9;
    int max_iterations = 100000;
    /// Restrict to real coefficients (only valid for kernels with real coefficients).
    bool real_coefficients = false;
    /// Budget for the projected-gradient warm start before Newton polishing.
    int warm_start_iterations = 200;
    /// Residual at which the warm start hands over to Newton.
    double warm_start_tol = 1e-3;
    /// Quadrature sizes for non-even p; 0 selects default_rule sizes.
    std::size_t quad_radial = 0;
    std::size_t quad_angular = 0;
};

/// Maximizer of Re <f, k> over polynomials of degree <= n with unit A^p_alpha norm.
struct ExtremalSolution {
    Polynomial F;
    double value = 0.0;
    /// || value * trunc_n(P_alpha(|F|^p / conj F)) - trunc_n(k) ||_2 / || trunc_n(k) ||_2
    /// over coefficient vectors.
    double kkt_residual = 0.0;
    int iterations = 0;
};

struct BestApproximation {
    Polynomial P;
    double error = 0.0;
    /// Relative size of the low-degree part of P_alpha(|f-P|^p/conj(f-P)); zero at the optimum.
    double residual = 0.0;
    int iterations = 0;
};

/// Raised when an iterative solve exhausts its budget; carries the best iterate.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, Polynomial best, double value, double residual, int iterations)
        : Error(what), best(std::move(best)), value(value), residual(residual), iterations(iterations)
    {
    }

    Polynomial best;
    double value;
    double residual;
    int iterations;
};

/// Degree-n extremal polynomial for the kernel k.
///
/// The problem is convex with a unique solution. Even p uses exact
/// coefficient-convolution derivatives of ||f||^p; other p integrate them by
/// quadrature. Throws DomainError for k = 0 (after truncation to degree n) and
/// ConvergenceError when the iteration budget runs out.
ExtremalSolution solve_extremal(const Polynomial& k, const SpaceParams& params, int n,
                                const SolverOptions& opts = {});

/// E_n^{p,alpha}(f) and its minimizer over polynomials of degree <= n.
/// p = 2 is closed form (truncation); other p minimize ||f - P||^p by Newton.
BestApproximation solve_best_approx(const Polynomial& f, const SpaceParams& params, int n,
                                    const SolverOptions& opts = {});

/// Angle (radians) between the coefficient vectors of trunc_n(P_alpha(|F|^p/conj F))
/// and trunc_n(k); even p only.
double kkt_angle(const Polynomial& F, const Polynomial& k, const SpaceParams& params, int n);

} // namespace bergex
