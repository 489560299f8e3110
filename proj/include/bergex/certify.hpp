#pragma once

#include "bergex/quadrature.hpp"
#include "bergex/space.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bergex {

/// Uniform-convexity modulus inverse: if ||f|| = ||g|| = 1 and ||(f+g)/2|| > 1 - delta
/// then ||f - g|| is below this value. Requires p > 1 and 0 < delta < 1.
double convexity_eps(double p, double delta);

/// Distance between extremal functions of two functionals that differ by delta in dual norm.
double perturbation_bound(double p, double delta);

/// Bergman-norm distance from the extremal function F to a unit-norm G whose
/// nonlinear kernel lies within delta of a positive multiple of k.
/// Throws CertificateError unless 0 <= delta < 1 and UnsupportedExponentError at p = 2.
double ferrork_bound(double delta, double p);

struct Regularity {
    double exponent;
    double constant;
};
/// Lambda* regularity of F from a bound B on the second difference of k
/// (order beta): (beta/p, 2 p^{1/p} (B/2)^{1/p}) for p >= 2,
/// (beta/2, 2 (p-1)^{-1/2} B^{1/2}) for 1 < p < 2. B = 0 gives constant 0.
Regularity regularity_constant(double B, double p, double beta);

/// Hölder exponent of boundary values; eta only matters for p < 2.
/// Throws HypothesisError outside the admissible (p, alpha) window or for a
/// nonpositive exponent.
double holder_exponent(double p, double alpha, double eta = 0.0);

struct HolderConstant {
    double value;
    /// One entry per factor whose sign was flipped to make the product positive.
    std::vector<std::string> rectified;
};
/// Hölder constant of F given B = ||k||_{Lambda*, 2}. Throws HypothesisError
/// outside the admissible window and at p = 2, where the constant is infinite.
HolderConstant holder_constant(double B, double p, double alpha, double eta = 0.0);

/// Default eta for p < 2: one tenth of the admissible headroom 1 - 2/p - alpha/p.
double default_eta(double p, double alpha);

struct FlaggedValue {
    double value;
    /// eps < 2^{beta/2} C, the range in which the sup-norm estimate applies.
    bool valid;
    std::string warning;
};
/// Bergman-norm size below which a Hölder-(beta, C) function has sup norm below eps.
FlaggedValue delta_of_epsilon(double eps, double C, double beta, double p, double alpha);
/// Inverse of delta_of_epsilon in eps.
FlaggedValue epsilon_of_delta(double delta, double C, double beta, double p, double alpha);

enum class Scaling { first_coeff, least_squares };
Scaling parse_scaling(std::string_view name);
std::string_view to_string(Scaling s);

struct KernelResidual {
    double c_hat = 0.0;
    double delta = 0.0;
    /// Nonlinear kernel of the renormalized G.
    Polynomial k_tilde;
    /// ||G||_{p,alpha} before renormalization.
    double g_norm = 0.0;
};
/// Residual of the nonlinear kernel of G/||G|| against the best positive
/// multiple of k. first_coeff matches the constant terms; least_squares
/// minimizes the A^2_alpha distance. delta is the A^q_alpha norm by `rule`.
/// Even p only. Throws CertificateError when the chosen multiple is not positive.
KernelResidual kernel_residual(const Polynomial& G, const Polynomial& k, const SpaceParams& params,
                               const DiskRule& rule, Scaling scaling = Scaling::first_coeff);

struct BergmanCertificate {
    double p = 0.0;
    double alpha = 0.0;
    double c_hat = 0.0;
    double delta = 0.0;
    double bound = 0.0;
    Scaling scaling = Scaling::first_coeff;
    std::vector<std::string> warnings;

    static BergmanCertificate issue(const SpaceParams& params, double c_hat, double delta,
                                    Scaling scaling = Scaling::first_coeff);
    bool above_two() const noexcept { return p > 2.0; }
    /// Recomputes the bound from the stored fields and compares bit for bit.
    bool revalidate() const;
};

struct UniformCertificate {
    double p = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double eta = 0.0;
    double B = 0.0;
    double bergman_bound = 0.0;
    double C_first = 0.0;
    double C_second = 0.0;
    double C_total = 0.0;
    double eps = 0.0;
    bool valid = false;
    std::vector<std::string> warnings;

    bool revalidate() const;
};

/// Sup-norm bound on F - F_n from a Bergman certificate and B = ||k||_{Lambda*, 2}.
/// The Hölder constant is summed over k and k/(1 - bound); the latter covers the
/// rescaling needed so that F_n pairs with the kernel to at least 1.
UniformCertificate uniform_certificate(const BergmanCertificate& bergman, double B, const SpaceParams& params,
                                       double eta);

struct AprioriRate {
    /// Coefficient and exponent as displayed in the published statement.
    double literal_coefficient;
    double literal_exponent;
    /// Composition regularity -> Jackson -> convexity, computed here.
    double derived_coefficient;
    double derived_exponent;
};
/// Worst-case a priori bound ||F - F_n|| <= c n^{e}. lambda_norm_k is the
/// Lambda*_beta seminorm of k. Requires 0 < beta <= 2 and p != 2.
AprioriRate apriori_rate(double p, double alpha, double beta, double lambda_norm_k);

} // namespace bergex
