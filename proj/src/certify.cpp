#include "bergex/certify.hpp"

#include "bergex/errors.hpp"
#include "bergex/jackson.hpp"
#include "bergex/projection.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace bergex {

namespace {

constexpr double pi = std::numbers::pi;

void require_p(double p)
{
    if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("exponent p must exceed 1");
}

void require_holder_window(double p, double alpha)
{
    const auto params = SpaceParams::make(p, alpha);
    if (!params.holder_range_ok())
        throw HypothesisError("Hölder bounds need -1 < alpha < 0 for p >= 2, or -1 < alpha < p - 2 for 1 < p < 2 "
                              "(got p = " + std::to_string(p) + ", alpha = " + std::to_string(alpha) + ")");
}

// log of ((alpha+1) pi / 4)^{1/p} B(2/beta, p+1)^{1/p} C^{-2/(beta p)}
double log_delta_scale(double C, double beta, double p, double alpha)
{
    if (!(C > 0.0)) throw DomainError("Hölder constant must be positive");
    if (!(beta > 0.0 && beta <= 1.0)) throw DomainError("Hölder exponent must lie in (0, 1]");
    require_p(p);
    if (!(alpha > -1.0)) throw DomainError("alpha must exceed -1");
    return (std::log((alpha + 1.0) * pi / 4.0) + std::log(boost::math::beta(2.0 / beta, p + 1.0))) / p -
           2.0 / (beta * p) * std::log(C);
}

FlaggedValue flag(double value, double eps, double C, double beta)
{
    const double limit = std::pow(2.0, beta / 2.0) * C;
    FlaggedValue out{value, eps < limit, {}};
    if (!out.valid)
        out.warning = "eps = " + std::to_string(eps) + " is not below 2^{beta/2} C = " + std::to_string(limit) +
                      "; the sup-norm estimate does not apply";
    return out;
}

} // namespace

double convexity_eps(double p, double delta)
{
    require_p(p);
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("convexity defect must lie in (0, 1)");
    if (p <= 2.0) return std::sqrt(8.0 / (p - 1.0)) * std::sqrt(delta);
    return 2.0 * std::pow(p, 1.0 / p) * std::pow(delta, 1.0 / p);
}

double perturbation_bound(double p, double delta)
{
    require_p(p);
    if (p == 2.0) throw UnsupportedExponentError("perturbation bound is stated for p != 2");
    if (!(delta >= 0.0)) throw DomainError("delta must be nonnegative");
    if (p > 2.0) return std::pow(2.0, 1.0 - 1.0 / p) * std::pow(p, 1.0 / p) * std::pow(delta, 1.0 / p);
    return 2.0 / std::sqrt(p - 1.0) * std::sqrt(delta);
}

double ferrork_bound(double delta, double p)
{
    require_p(p);
    if (p == 2.0) throw UnsupportedExponentError("p = 2 is closed-form; no residual certificate");
    if (!(delta >= 0.0 && delta < 1.0))
        throw CertificateError("kernel residual delta = " + std::to_string(delta) + " must lie in [0, 1)");
    if (p > 2.0) return 2.0 * std::pow(p, 1.0 / p) * std::pow(delta, 1.0 / p);
    return 2.0 * std::numbers::sqrt2 / std::sqrt(p - 1.0) * std::sqrt(delta);
}

Regularity regularity_constant(double B, double p, double beta)
{
    require_p(p);
    if (!(B >= 0.0)) throw DomainError("regularity bound B must be nonnegative");
    if (p >= 2.0) return {beta / p, 2.0 * std::pow(p, 1.0 / p) * std::pow(B / 2.0, 1.0 / p)};
    return {beta / 2.0, 2.0 / std::sqrt(p - 1.0) * std::sqrt(B)};
}

double default_eta(double p, double alpha)
{
    return (1.0 - 2.0 / p - alpha / p) / 10.0;
}

double holder_exponent(double p, double alpha, double eta)
{
    require_holder_window(p, alpha);
    if (p >= 2.0) return -alpha / p;
    if (!(eta > 0.0)) throw HypothesisError("p < 2 needs eta > 0");
    const double beta = 1.0 - 2.0 / p - alpha / p - eta;
    if (!(beta > 0.0))
        throw HypothesisError("Hölder exponent 1 - 2/p - alpha/p - eta = " + std::to_string(beta) +
                              " is not positive");
    return beta;
}

HolderConstant holder_constant(double B, double p, double alpha, double eta)
{
    const double beta = holder_exponent(p, alpha, eta);
    if (p == 2.0) throw HypothesisError("Hölder constant is unbounded at p = 2");
    if (!(B >= 0.0)) throw DomainError("B must be nonnegative");
    const double q = p / (p - 1.0);
    const double gamma_factor = 2.0 * std::exp((std::lgamma(q - 1.0) - 2.0 * std::lgamma(q / 2.0)) / q);

    HolderConstant out{};
    auto take = [&out](double factor, const char* name) {
        if (factor < 0.0) {
            out.rectified.push_back(std::string(name) + " = " + std::to_string(factor) + " replaced by its absolute value");
            return -factor;
        }
        return factor;
    };
    if (p > 2.0) {
        out.value = regularity_constant(B, p, 2.0).constant * take(383.0 / (1.0 - 2.0 / p), "383(1-2/p)^-1") *
                    gamma_factor * take(1.0 - 2.0 * p / alpha, "(1-2p/alpha)");
    } else {
        out.value = regularity_constant(B, p, 2.0).constant * take(192.0 / (1.0 - 2.0 / p), "192(1-2/p)^-1") *
                    gamma_factor * take(1.0 - 2.0 / beta, "(1-2/beta)");
    }
    return out;
}

FlaggedValue delta_of_epsilon(double eps, double C, double beta, double p, double alpha)
{
    const double log_k = log_delta_scale(C, beta, p, alpha);
    if (!(eps >= 0.0)) throw DomainError("eps must be nonnegative");
    const double value = eps == 0.0 ? 0.0 : std::exp(log_k + (1.0 + 2.0 / (beta * p)) * std::log(eps));
    return flag(value, eps, C, beta);
}

FlaggedValue epsilon_of_delta(double delta, double C, double beta, double p, double alpha)
{
    const double log_k = log_delta_scale(C, beta, p, alpha);
    if (!(delta >= 0.0)) throw DomainError("delta must be nonnegative");
    const double eps = delta == 0.0 ? 0.0 : std::exp((std::log(delta) - log_k) / (1.0 + 2.0 / (beta * p)));
    return flag(eps, eps, C, beta);
}

Scaling parse_scaling(std::string_view name)
{
    if (name == "first-coeff" || name == "first_coeff") return Scaling::first_coeff;
    if (name == "least-squares" || name == "least_squares") return Scaling::least_squares;
    throw DomainError("unknown scaling '" + std::string(name) + "' (expected first-coeff or least-squares)");
}

std::string_view to_string(Scaling s)
{
    return s == Scaling::first_coeff ? "first-coeff" : "least-squares";
}

KernelResidual kernel_residual(const Polynomial& G, const Polynomial& k, const SpaceParams& params,
                               const DiskRule& rule, Scaling scaling)
{
    if (G.is_zero()) throw DomainError("G must be nonzero");
    if (k.is_zero()) throw DomainError("kernel must be nonzero");
    KernelResidual out;
    out.g_norm = norm_even_p(G, params);
    const Polynomial g = G * cplx(1.0 / out.g_norm);
    out.k_tilde = nonlinear_kernel(g, params);
    if (scaling == Scaling::first_coeff) {
        if (k[0] == cplx{}) throw CertificateError("first-coeff scaling needs k(0) != 0");
        out.c_hat = std::real(out.k_tilde[0] / k[0]);
    } else {
        out.c_hat = std::real(pairing(out.k_tilde, k, params.alpha())) / std::real(pairing(k, k, params.alpha()));
    }
    if (!(out.c_hat > 0.0))
        throw CertificateError("scaled kernel multiple c_hat = " + std::to_string(out.c_hat) + " is not positive");
    out.delta = norm_p(out.k_tilde - k * cplx(out.c_hat), params.q(), rule);
    return out;
}

BergmanCertificate BergmanCertificate::issue(const SpaceParams& params, double c_hat, double delta, Scaling scaling)
{
    if (!(c_hat > 0.0)) throw CertificateError("c_hat must be positive");
    BergmanCertificate c;
    c.p = params.p();
    c.alpha = params.alpha();
    c.c_hat = c_hat;
    c.delta = delta;
    c.scaling = scaling;
    c.bound = ferrork_bound(delta, params.p());
    c.warnings.push_back("G renormalized to unit A^p_alpha norm before forming its kernel");
    c.warnings.push_back("delta is a quadrature value without an interval enclosure");
    return c;
}

bool BergmanCertificate::revalidate() const
{
    try {
        return c_hat > 0.0 && ferrork_bound(delta, p) == bound;
    } catch (const Error&) {
        return false;
    }
}

UniformCertificate uniform_certificate(const BergmanCertificate& bergman, double B, const SpaceParams& params,
                                       double eta)
{
    if (!(bergman.bound < 1.0))
        throw CertificateError("Bergman bound " + std::to_string(bergman.bound) + " must be below 1");
    UniformCertificate u;
    u.p = params.p();
    u.alpha = params.alpha();
    u.eta = params.p() < 2.0 ? eta : 0.0;
    u.B = B;
    u.bergman_bound = bergman.bound;
    u.beta = holder_exponent(u.p, u.alpha, u.eta);
    const auto first = holder_constant(B, u.p, u.alpha, u.eta);
    const auto second = holder_constant(B / (1.0 - bergman.bound), u.p, u.alpha, u.eta);
    u.C_first = first.value;
    u.C_second = second.value;
    u.C_total = first.value + second.value;
    const auto eps = epsilon_of_delta(bergman.bound, u.C_total, u.beta, u.p, u.alpha);
    u.eps = eps.value;
    u.valid = eps.valid;
    for (const auto& r : first.rectified) u.warnings.push_back("Hölder constant: " + r);
    if (!eps.warning.empty()) u.warnings.push_back(eps.warning);
    u.warnings.push_back("assumes the pairing of F_n with the rescaled kernel is >= 1 (non-strict)");
    return u;
}

bool UniformCertificate::revalidate() const
{
    try {
        const double b = holder_exponent(p, alpha, eta);
        const double c1 = holder_constant(B, p, alpha, eta).value;
        const double c2 = holder_constant(B / (1.0 - bergman_bound), p, alpha, eta).value;
        const auto e = epsilon_of_delta(bergman_bound, c1 + c2, b, p, alpha);
        return b == beta && c1 == C_first && c2 == C_second && c1 + c2 == C_total && e.value == eps &&
               e.valid == valid;
    } catch (const Error&) {
        return false;
    }
}

AprioriRate apriori_rate(double p, double alpha, double beta, double lambda_norm_k)
{
    require_p(p);
    if (p == 2.0) throw UnsupportedExponentError("a priori rate is stated for p != 2");
    if (!(beta > 0.0 && beta <= 2.0)) throw DomainError("beta must lie in (0, 2]");
    if (!(lambda_norm_k >= 0.0)) throw DomainError("Lambda* seminorm must be nonnegative");
    (void)SpaceParams::make(p, alpha);

    AprioriRate r{};
    if (p > 2.0) {
        const double A = const_A_beta(beta / p).value;
        r.literal_coefficient = std::pow(2.0, 1.0 + 1.0 / p - 1.0 / (p * p)) * std::pow(p, 1.0 / p + 1.0 / (p * p)) *
                                std::pow(A, 1.0 / p) * std::pow(lambda_norm_k, 1.0 / p);
        r.literal_exponent = -beta / p;
        if (lambda_norm_k == 0.0) {
            r.derived_coefficient = 0.0;
        } else {
            const auto reg = regularity_constant(lambda_norm_k, p, beta);
            r.derived_coefficient = 2.0 * std::pow(p, 1.0 / p) * std::pow(A * reg.constant, 1.0 / p);
        }
        r.derived_exponent = -beta / (p * p);
    } else {
        const double A = beta < 2.0 ? const_A_beta(beta / 2.0).value : jackson_constants().Btilde[0];
        r.literal_coefficient =
            4.0 * std::pow(p - 1.0, -0.75) * std::sqrt(A) * std::pow(lambda_norm_k, 0.25);
        r.literal_exponent = -beta / 4.0;
        if (lambda_norm_k == 0.0) {
            r.derived_coefficient = 0.0;
        } else {
            const auto reg = regularity_constant(lambda_norm_k, p, beta);
            r.derived_coefficient = std::sqrt(8.0 / (p - 1.0)) * std::sqrt(A * reg.constant);
        }
        r.derived_exponent = -beta / 4.0;
    }
    return r;
}

} // namespace bergex
