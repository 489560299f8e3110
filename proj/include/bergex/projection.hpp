#pragma once

#include "bergex/quadrature.hpp"
#include "bergex/space.hpp"

#include <functional>

namespace bergex {

/// P_alpha(z^m conj(z)^n) = gamma(m)/gamma(m-n) z^{m-n} for m >= n, else 0.
Polynomial project_monomial(int m, int n, double alpha);

/// P_alpha(A conj(B)) for analytic polynomials A, B; each output coefficient
/// is accumulated once, over pairs (n+j, n) of fixed difference j.
Polynomial project_product(const Polynomial& a, const Polynomial& b, double alpha);

/// P_alpha(|G|^p / conj(G)) = P_alpha(G^{p/2} conj(G^{p/2-1})) for even p.
///
/// Throws UnsupportedExponentError for p not an even integer and DomainError
/// for G = 0. The result has degree at most (p/2) deg G.
Polynomial nonlinear_kernel(const Polynomial& g, const SpaceParams& params);

/// Bergman projection of a sampled function onto degrees 0..max_degree:
/// c_j = <g, z^j>_{2,alpha} / gamma(j, alpha) with inner products by quadrature.
///
/// Accuracy is that of `rule` on g conj(z^j). For integrands such as
/// |G|^{p-1} sgn G with non-even p and zeros of G inside the disk, g is not
/// smooth there and the coefficients carry quadrature error with no
/// certified bound.
Polynomial project_numeric(const std::function<cplx(cplx)>& g, const DiskRule& rule, int max_degree);

/// Drops every coefficient of degree > n (orthogonal projection onto degree <= n).
Polynomial truncate(const Polynomial& f, int n);

} // namespace bergex
