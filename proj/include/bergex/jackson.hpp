#pragma once

#include "bergex/quadrature.hpp"
#include "bergex/space.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace bergex {

/// A numerically evaluated constant with an estimate of its absolute error.
struct EstimatedValue {
    double value = 0.0;
    double error = 0.0;
};

/// A_beta = (2^{1+beta}/pi) int_0^inf |cos t - cos 2t| t^{beta-2} dt for 0 < beta < 1.
///
/// The integral is split at T = 200 pi; [0, T] is integrated piecewise between
/// the kinks of |cos t - cos 2t| (multiples of 2pi/3), and the tail is summed
/// period by period through a Hurwitz-zeta expansion.
EstimatedValue const_A_beta(double beta);

/// Discretization of the iterated tails H_0(t) = h(t)/t^2, H_k(t) = int_t^inf H_{k-1},
/// h(t) = (cos t - cos 2t)/2.
struct TailKernelOptions {
    /// Beyond the cutoff, H_k is represented by its asymptotic expansion in 1/t.
    double cutoff = 200.0 * 3.14159265358979323846;
    double panel_width = 3.14159265358979323846 / 8.0;
    int nodes_per_panel = 17;
    /// |H_K| is integrated through [cutoff, far_cutoff] and estimated by its mean beyond.
    double far_cutoff = 2.0 * 3.14159265358979323846 * 5000.0;
};

/// Tabulated H_0..H_max_order on [0, cutoff] plus asymptotic tails.
class TailKernels {
public:
    static constexpr int max_order = 3;

    explicit TailKernels(const TailKernelOptions& opts = {});

    /// H_K(t) for t >= 0 and 0 <= K <= 3.
    double operator()(int K, double t) const;

    /// (4/pi) int_0^inf |H_K| dt.
    EstimatedValue C(int K) const;

private:
    struct Asymptotic {
        // H(t) = Re sum_{a=1,2} sum_m coef[a-1][m] e^{iat} t^{-m}
        std::array<std::vector<cplx>, 2> coef;
        double eval(double t) const;
    };

    double interpolate(int K, double t) const;
    double abs_integral_body(int K) const;
    double abs_integral_far(int K) const;

    TailKernelOptions opts_;
    std::size_t panels_ = 0;
    std::vector<double> nodes_;        // Chebyshev-Lobatto nodes on [-1, 1]
    std::vector<double> bary_;         // barycentric weights
    std::array<std::vector<double>, max_order + 1> values_;  // panel-major node values
    std::array<Asymptotic, max_order + 1> tails_;
};

/// C_K = (4/pi) int_0^inf |H_K| for 0 <= K <= 3, using a shared default table.
/// Throws UnsupportedExponentError for K outside 0..3.
EstimatedValue const_C_K(int K);

struct JacksonConstants {
    std::optional<double> beta;
    std::optional<EstimatedValue> A_beta;
    std::array<EstimatedValue, 4> C;       // C_0..C_3
    std::array<double, 3> B{};             // B_K = 2^K C_{K+1}/pi + 2^K C_K, K = 0..2
    std::array<double, 2> Btilde{};        // 2^K (C_{K+2}/pi + pi C_K), K = 0..1
};

/// All constants; A_beta only when beta is given.
JacksonConstants jackson_constants(std::optional<double> beta = std::nullopt);

/// k-th Cesàro mean: a_j -> (1 - j/(m+1)) a_j for j <= m, zero beyond.
Polynomial cesaro(const Polynomial& f, int m);

/// de la Vallée Poussin mean 2 sigma_{2m-1} - sigma_{m-1}; reproduces polynomials of degree <= m.
Polynomial vallee_poussin(const Polynomial& f, int m);

/// max over t in a uniform grid on [0, delta] of ||f(e^{it}.) - f||_{p,alpha};
/// an estimate from below of the Bergman modulus of continuity.
double modulus(const Polynomial& f, double delta, const SpaceParams& params, const DiskRule& rule,
               int t_samples = 256);

struct LambdaStarEstimate {
    /// sup over the t-grid of ||Delta_t^2 f|| / t^beta (from below).
    double lower = 0.0;
    /// beta = 2 only: sup |D_theta^2 f| over the closed disk, padded to be an upper bound.
    std::optional<double> upper;
};

LambdaStarEstimate lambda_star_estimate(const Polynomial& f, double beta, const SpaceParams& params,
                                        const DiskRule& rule, int t_samples = 256);

enum class BoundKind { lambda_star_beta, derivative_K, modulus_K, lambda_star1_K };

/// Parses "lambda_star_beta", "derivative_K", "modulus_K" or "lambda_star1_K".
BoundKind parse_bound_kind(std::string_view name);

struct BoundInputs {
    /// Seminorm M, derivative norm M, or the modulus value omega(2 pi / n), by kind.
    double measure = 0.0;
    int K = 0;
    double beta = 0.5;
};

/// Upper bound on E_n^{p,alpha}(f):
///   lambda_star_beta : A_beta n^{-beta} M
///   derivative_K     : 2^K C_K M n^{-K}
///   modulus_K        : B_K omega(2 pi/n) n^{-K}
///   lambda_star1_K   : Btilde_K M n^{-K-1}
double jackson_bound(BoundKind kind, const BoundInputs& in, int n, const JacksonConstants& constants);

} // namespace bergex
