#pragma once

#include "bergex/space.hpp"
#include "bergex/summation.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace bergex {

struct RadialNode {
    double r;
    double w;
};

/// Product rule for dA_alpha = (alpha+1)/pi (1-|z|^2)^alpha dA on the unit disk.
///
/// Radially, s = r^2 carries the probability weight (alpha+1)(1-s)^alpha ds and
/// is integrated by Gauss-Jacobi; angularly, the M-point trapezoid rule is exact
/// for trigonometric polynomials of degree < M.
struct DiskRule {
    double alpha = 0.0;
    std::vector<RadialNode> radial;
    std::size_t angular_count = 0;

    /// Node z = r_j e^{2 pi i m / M}.
    cplx node(std::size_t j, std::size_t m) const
    {
        return std::polar(radial[j].r, 2.0 * std::numbers::pi * static_cast<double>(m) /
                                           static_cast<double>(angular_count));
    }

    /// Approximates int_D f dA_alpha; f maps cplx to double or cplx.
    /// The reduction order is fixed: angular sums per ring, then across rings.
    template <class F>
    auto integrate(F&& f) const
    {
        using R = decltype(f(cplx{}));
        std::vector<R> ring(angular_count);
        std::vector<R> rings(radial.size());
        for (std::size_t j = 0; j < radial.size(); ++j) {
            for (std::size_t m = 0; m < angular_count; ++m) ring[m] = f(node(j, m));
            rings[j] = pairwise_sum<R>(ring) * (radial[j].w / static_cast<double>(angular_count));
        }
        return pairwise_sum<R>(rings);
    }
};

/// Throws DomainError for alpha <= -1, n_radial < 1 or n_angular < 4.
DiskRule build_rule(double alpha, std::size_t n_radial, std::size_t n_angular);

/// Rule sized for polynomials of the given degree:
/// n_radial = max(40, degree+5), n_angular = max(128, 4*degree+4).
DiskRule default_rule(double alpha, int degree);

/// Quadrature L^p_alpha norm; any p > 0. |f|^p is taken as 0 where f = 0.
double norm_p(const Polynomial& f, double p, const DiskRule& rule);

/// norm_p of f(e^{it}.) + f(e^{-it}.) - 2 f.
double second_difference_norm(const Polynomial& f, double t, double p, const DiskRule& rule);

} // namespace bergex
