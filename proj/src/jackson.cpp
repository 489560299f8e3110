#include "bergex/jackson.hpp"

#include "bergex/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bergex {

namespace {

constexpr double pi = std::numbers::pi;
using gauss20 = boost::math::quadrature::gauss<double, 20>;

// |cos t - cos 2t| written without cancellation.
double kink_profile(double t)
{
    return 2.0 * std::abs(std::sin(1.5 * t) * std::sin(0.5 * t));
}

// sum_{j >= J} j^{-s} by Euler-Maclaurin; J must be large (>= 50) for full precision.
double hurwitz_zeta_tail(double s, double J)
{
    double sum = std::pow(J, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(J, -s);
    double rising = s;  // s (s+1) ... (s+2k-2)
    for (int k = 1; k <= 10; ++k) {
        const double term = boost::math::bernoulli_b2n<double>(k) / boost::math::factorial<double>(2 * k) * rising *
                            std::pow(J, -s - 2.0 * k + 1.0);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
    }
    return sum;
}

// Lightweight sign-change localization plus root refinement on [a, b].
template <class F>
double integrate_abs(F&& f, double a, double b, int samples)
{
    std::vector<double> cuts{a};
    double x0 = a;
    double f0 = f(a);
    for (int i = 1; i <= samples; ++i) {
        const double x1 = a + (b - a) * static_cast<double>(i) / samples;
        const double f1 = f(x1);
        if ((f0 < 0.0 && f1 > 0.0) || (f0 > 0.0 && f1 < 0.0)) {
            boost::uintmax_t iters = 60;
            const auto bracket = boost::math::tools::toms748_solve(
                f, x0, x1, f0, f1, boost::math::tools::eps_tolerance<double>(52), iters);
            cuts.push_back(0.5 * (bracket.first + bracket.second));
        }
        x0 = x1;
        f0 = f1;
    }
    cuts.push_back(b);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] > cuts[i])
            total += gauss20::integrate([&](double x) { return std::abs(f(x)); }, cuts[i], cuts[i + 1]);
    }
    return total;
}

double H0(double t)
{
    if (t < 1e-6) return 0.75 - (65.0 / 192.0) * t * t;  // series of sin(3t/2) sin(t/2) / t^2
    return std::sin(1.5 * t) * std::sin(0.5 * t) / (t * t);
}

} // namespace

EstimatedValue const_A_beta(double beta)
{
    if (!(beta > 0.0 && beta < 1.0)) throw DomainError("A_beta needs 0 < beta < 1");
    const int periods = 100;  // cutoff T = 2 pi * periods = 200 pi
    const double piece = 2.0 * pi / 3.0;
    boost::math::quadrature::tanh_sinh<double> ts;

    auto integrand = [beta](double t) {
        if (t < 1e-8) return 1.5 * std::pow(t, beta);
        return kink_profile(t) * std::pow(t, beta - 2.0);
    };
    double body = 0.0;
    double err = 0.0;
    for (int i = 0; i < 3 * periods; ++i) {
        double e = 0.0;
        const double left = piece * i;
        body += ts.integrate([&](double x) { return integrand(left + x); }, 0.0, piece, 1e-14, &e);
        err += e;
    }

    // Tail: sum_{j >= J} int_0^{2pi} P(s) (s + 2 pi j)^{beta-2} ds
    //     = (2pi)^{beta-2} sum_m binom(beta-2, m) nu_m zeta(2-beta+m, J),
    // nu_m = int_0^{2pi} P(s) (s/2pi)^m ds.
    double tail = 0.0;
    double binom = 1.0;
    double last = 0.0;
    for (int m = 0; m < 80; ++m) {
        double nu = 0.0;
        for (int i = 0; i < 3; ++i) {
            nu += gauss20::integrate(
                [m](double s) { return kink_profile(s) * std::pow(s / (2.0 * pi), m); }, piece * i, piece * (i + 1));
        }
        last = binom * nu * hurwitz_zeta_tail(2.0 - beta + m, periods);
        tail += last;
        if (std::abs(last) < 1e-17 * std::abs(tail)) break;
        binom *= (beta - 2.0 - m) / (m + 1.0);
    }
    tail *= std::pow(2.0 * pi, beta - 2.0);

    const double scale = std::pow(2.0, 1.0 + beta) / pi;
    const double value = scale * (body + tail);
    return {value, scale * (err + std::abs(last)) + 4e-16 * value};
}

double TailKernels::Asymptotic::eval(double t) const
{
    const double u = 1.0 / t;
    double out = 0.0;
    for (int a = 1; a <= 2; ++a) {
        const auto& c = coef[a - 1];
        cplx acc{};
        for (std::size_t m = c.size(); m-- > 0;) acc = acc * u + c[m];
        out += std::real(acc * std::polar(1.0, a * t));
    }
    return out;
}

TailKernels::TailKernels(const TailKernelOptions& opts) : opts_(opts)
{
    if (!(opts.cutoff > 0.0) || !(opts.panel_width > 0.0) || opts.nodes_per_panel < 4 ||
        !(opts.far_cutoff > opts.cutoff))
        throw DomainError("invalid tail-kernel discretization");
    panels_ = static_cast<std::size_t>(std::ceil(opts.cutoff / opts.panel_width));
    const double width = opts.cutoff / static_cast<double>(panels_);
    opts_.panel_width = width;

    const int np = opts.nodes_per_panel;
    const int N = np - 1;
    nodes_.resize(np);
    bary_.resize(np);
    for (int i = 0; i < np; ++i) {
        nodes_[i] = -std::cos(pi * i / N);
        bary_[i] = (i % 2 == 0 ? 1.0 : -1.0) * ((i == 0 || i == N) ? 0.5 : 1.0);
    }
    auto lagrange = [&](int j, double x) {
        double num = 0.0, den = 0.0;
        for (int k = 0; k < np; ++k) {
            const double d = x - nodes_[k];
            if (d == 0.0) return k == j ? 1.0 : 0.0;
            den += bary_[k] / d;
            if (k == j) num = bary_[k] / d;
        }
        return num / den;
    };
    // S[i][j] = int_{x_i}^{1} l_j(x) dx
    std::vector<double> S(static_cast<std::size_t>(np * np));
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j)
            S[i * np + j] = i == N ? 0.0 : gauss20::integrate([&](double x) { return lagrange(j, x); }, nodes_[i], 1.0);

    // Asymptotic tails: H_0 = Re(0.5 e^{it} - 0.5 e^{2it}) t^{-2}; each further
    // order integrates term by term with
    //   int_t^inf e^{iax} x^{-m} dx = -(e^{iat}/(ia)) sum_j (m)_j (ia)^{-j} t^{-m-j}.
    constexpr std::size_t max_power = 64;
    tails_[0].coef[0] = std::vector<cplx>(max_power + 1);
    tails_[0].coef[1] = std::vector<cplx>(max_power + 1);
    tails_[0].coef[0][2] = 0.5;
    tails_[0].coef[1][2] = -0.5;
    for (int k = 1; k <= max_order; ++k) {
        for (int a = 1; a <= 2; ++a) {
            const auto& src = tails_[k - 1].coef[a - 1];
            std::vector<cplx> dst(max_power + 1);
            const cplx ia{0.0, static_cast<double>(a)};
            for (std::size_t m = 1; m <= max_power; ++m) {
                if (src[m] == cplx{}) continue;
                cplx factor = -src[m] / ia;
                for (std::size_t j = 0; m + j <= max_power; ++j) {
                    dst[m + j] += factor;
                    factor *= static_cast<double>(m + j) / ia;
                }
            }
            tails_[k].coef[a - 1] = std::move(dst);
        }
    }

    for (auto& v : values_) v.resize(panels_ * static_cast<std::size_t>(np));
    for (std::size_t p = 0; p < panels_; ++p)
        for (int i = 0; i < np; ++i) {
            const double t = width * (static_cast<double>(p) + 0.5 * (nodes_[i] + 1.0));
            values_[0][p * np + i] = H0(t);
        }
    for (int k = 1; k <= max_order; ++k) {
        double right = tails_[k].eval(opts.cutoff);
        for (std::size_t p = panels_; p-- > 0;) {
            const double* prev = &values_[k - 1][p * np];
            double* cur = &values_[k][p * np];
            for (int i = 0; i < np; ++i) {
                double acc = 0.0;
                for (int j = 0; j < np; ++j) acc += S[i * np + j] * prev[j];
                cur[i] = right + 0.5 * width * acc;
            }
            right = cur[0];
        }
    }
}

double TailKernels::interpolate(int K, double t) const
{
    const int np = opts_.nodes_per_panel;
    const double width = opts_.panel_width;
    std::size_t p = static_cast<std::size_t>(std::max(0.0, std::floor(t / width)));
    if (p >= panels_) p = panels_ - 1;
    const double x = 2.0 * (t - width * static_cast<double>(p)) / width - 1.0;
    const double* v = &values_[K][p * np];
    double num = 0.0, den = 0.0;
    for (int k = 0; k < np; ++k) {
        const double d = x - nodes_[k];
        if (d == 0.0) return v[k];
        const double w = bary_[k] / d;
        num += w * v[k];
        den += w;
    }
    return num / den;
}

double TailKernels::operator()(int K, double t) const
{
    if (K < 0 || K > max_order) throw UnsupportedExponentError("H_K is available for K = 0..3");
    if (t < 0.0) throw DomainError("H_K is defined for t >= 0");
    if (K == 0) return H0(t);
    if (t >= opts_.cutoff) return tails_[K].eval(t);
    return interpolate(K, t);
}

double TailKernels::abs_integral_body(int K) const
{
    const double width = opts_.panel_width;
    double total = 0.0;
    for (std::size_t p = 0; p < panels_; ++p) {
        const double a = width * static_cast<double>(p);
        total += integrate_abs([&](double t) { return K == 0 ? H0(t) : interpolate(K, t); }, a, a + width,
                               4 * opts_.nodes_per_panel);
    }
    return total;
}

double TailKernels::abs_integral_far(int K) const
{
    const auto& tail = tails_[K];
    const double step = pi / 4.0;
    double total = 0.0;
    for (double a = opts_.cutoff; a < opts_.far_cutoff; a += step) {
        const double b = std::min(a + step, opts_.far_cutoff);
        total += integrate_abs([&](double t) { return tail.eval(t); }, a, b, 16);
    }
    return total;
}

EstimatedValue TailKernels::C(int K) const
{
    if (K < 0 || K > max_order) throw UnsupportedExponentError("C_K is available for K = 0..3");
    const auto& tail = tails_[K];
    for (int a = 0; a < 2; ++a)
        for (std::size_t m = 0; m < 2; ++m)
            if (tail.coef[a][m] != cplx{})
                throw DomainError("int |H_K| diverges: tail decays slower than t^-2");

    // Beyond far_cutoff: |H_K| ~ |lead(t)| t^{-2} with lead 2pi-periodic.
    auto lead = [&](double t) {
        return std::real(tail.coef[0][2] * std::polar(1.0, t) + tail.coef[1][2] * std::polar(1.0, 2.0 * t));
    };
    const int grid = 1 << 14;
    double mean = 0.0, peak = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double v = std::abs(lead(2.0 * pi * (i + 0.5) / grid));
        mean += v;
        peak = std::max(peak, v);
    }
    mean /= grid;
    const double T2 = opts_.far_cutoff;
    const double rest = mean / T2;

    const double total = abs_integral_body(K) + abs_integral_far(K) + rest;
    // Neglected beyond T2: higher powers of 1/t and the oscillation of |lead| about its mean.
    double higher = 0.0;
    for (int a = 0; a < 2; ++a)
        for (std::size_t m = 3; m < tail.coef[a].size(); ++m)
            higher += std::abs(tail.coef[a][m]) * std::pow(T2, 1.0 - static_cast<double>(m)) / (m - 1.0);
    const double err = higher + 2.0 * pi * peak / (T2 * T2);
    return {4.0 / pi * total, 4.0 / pi * (err + 1e-13 * total)};
}

EstimatedValue const_C_K(int K)
{
    if (K < 0 || K > TailKernels::max_order) throw UnsupportedExponentError("C_K is available for K = 0..3");
    static const std::array<EstimatedValue, 4> cached = [] {
        const TailKernels table;
        return std::array<EstimatedValue, 4>{table.C(0), table.C(1), table.C(2), table.C(3)};
    }();
    return cached[static_cast<std::size_t>(K)];
}

JacksonConstants jackson_constants(std::optional<double> beta)
{
    JacksonConstants c;
    if (beta) {
        c.beta = beta;
        c.A_beta = const_A_beta(*beta);
    }
    for (int k = 0; k <= 3; ++k) c.C[k] = const_C_K(k);
    for (int k = 0; k <= 2; ++k) c.B[k] = std::ldexp(c.C[k + 1].value / pi + c.C[k].value, k);
    for (int k = 0; k <= 1; ++k) c.Btilde[k] = std::ldexp(c.C[k + 2].value / pi + pi * c.C[k].value, k);
    return c;
}

Polynomial cesaro(const Polynomial& f, int m)
{
    if (m < 0) throw DomainError("Cesàro index must be nonnegative");
    std::vector<cplx> c(static_cast<std::size_t>(m + 1));
    for (int j = 0; j <= m; ++j) c[j] = (1.0 - static_cast<double>(j) / (m + 1.0)) * f[static_cast<std::size_t>(j)];
    return Polynomial(std::move(c));
}

Polynomial vallee_poussin(const Polynomial& f, int m)
{
    if (m < 1) throw DomainError("de la Vallée Poussin index must be >= 1");
    // Weights of 2 sigma_{2m-1} - sigma_{m-1}: 1 up to degree m, then 2 - j/m.
    std::vector<cplx> c(static_cast<std::size_t>(2 * m));
    for (int j = 0; j < 2 * m; ++j) {
        const double w = j <= m ? 1.0 : 2.0 - static_cast<double>(j) / m;
        c[j] = w * f[static_cast<std::size_t>(j)];
    }
    return Polynomial(std::move(c));
}

double modulus(const Polynomial& f, double delta, const SpaceParams& params, const DiskRule& rule, int t_samples)
{
    if (t_samples < 16) throw DomainError("modulus needs at least 16 t-samples");
    if (delta < 0.0) throw DomainError("modulus needs delta >= 0");
    double best = 0.0;
    for (int i = 1; i <= t_samples; ++i) {
        const double t = delta * i / t_samples;
        best = std::max(best, norm_p(rotate(f, t) - f, params.p(), rule));
    }
    return best;
}

LambdaStarEstimate lambda_star_estimate(const Polynomial& f, double beta, const SpaceParams& params,
                                        const DiskRule& rule, int t_samples)
{
    if (t_samples < 16) throw DomainError("lambda_star_estimate needs at least 16 t-samples");
    if (!(beta > 0.0 && beta <= 2.0)) throw DomainError("Lambda* exponent must lie in (0, 2]");
    LambdaStarEstimate out;
    for (int i = 1; i <= t_samples; ++i) {
        const double t = pi * i / t_samples;
        out.lower = std::max(out.lower, second_difference_norm(f, t, params.p(), rule) / std::pow(t, beta));
    }
    if (beta == 2.0) {
        const std::size_t samples = std::max<std::size_t>(std::size_t{1} << 16,
                                                          64 * static_cast<std::size_t>(std::max(f.degree(), 0) + 1));
        out.upper = sup_modulus(theta_derivative(f, 2), samples, true);
    }
    return out;
}

BoundKind parse_bound_kind(std::string_view name)
{
    if (name == "lambda_star_beta") return BoundKind::lambda_star_beta;
    if (name == "derivative_K") return BoundKind::derivative_K;
    if (name == "modulus_K") return BoundKind::modulus_K;
    if (name == "lambda_star1_K") return BoundKind::lambda_star1_K;
    throw DomainError("unknown Jackson bound kind '" + std::string(name) + "'");
}

double jackson_bound(BoundKind kind, const BoundInputs& in, int n, const JacksonConstants& constants)
{
    if (n < 1) throw DomainError("Jackson bounds need n >= 1");
    if (in.measure < 0.0) throw DomainError("seminorm inputs must be nonnegative");
    const double nn = static_cast<double>(n);
    switch (kind) {
    case BoundKind::lambda_star_beta: {
        const double A = (constants.beta && *constants.beta == in.beta && constants.A_beta)
                             ? constants.A_beta->value
                             : const_A_beta(in.beta).value;
        return A * std::pow(nn, -in.beta) * in.measure;
    }
    case BoundKind::derivative_K:
        if (in.K < 0 || in.K > 3) throw UnsupportedExponentError("derivative bound needs 0 <= K <= 3");
        return std::ldexp(constants.C[in.K].value, in.K) * in.measure * std::pow(nn, -in.K);
    case BoundKind::modulus_K:
        if (in.K < 0 || in.K > 2) throw UnsupportedExponentError("modulus bound needs 0 <= K <= 2");
        return constants.B[in.K] * in.measure * std::pow(nn, -in.K);
    case BoundKind::lambda_star1_K:
        if (in.K < 0 || in.K > 1) throw UnsupportedExponentError("Lambda*_1 bound needs 0 <= K <= 1");
        return constants.Btilde[in.K] * in.measure * std::pow(nn, -in.K - 1);
    }
    throw DomainError("unknown Jackson bound kind");
}

} // namespace bergex
