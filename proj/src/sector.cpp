#include "bergex/sector.hpp"

#include "bergex/certify.hpp"
#include "bergex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace bergex {

namespace {

constexpr double pi = std::numbers::pi;

double radical_inverse(unsigned i, unsigned base)
{
    double inv = 1.0 / base, f = inv, out = 0.0;
    while (i > 0) {
        out += f * (i % base);
        i /= base;
        f *= inv;
    }
    return out;
}

struct Chain {
    Polynomial kn;
    double B = 0.0;
    double beta = 0.0;
    double C = 0.0;
    std::vector<std::string> rectified;
    double D = 0.0;
    int samples = 0;
    double lambda = 0.0;
};

Chain build_chain(const Polynomial& k, double d, const SpaceParams& params, double eta, const DiskRule& rule,
                  const SectorOptions& opts)
{
    if (params.p() == 2.0) throw UnsupportedExponentError("p = 2 is closed-form: F is a multiple of k");
    if (!params.holder_range_ok()) throw HypothesisError("sector certificate needs the Hölder (p, alpha) window");
    if (!(d > 0.0 && d < 1.0)) throw DomainError("d must lie in (0, 1)");
    if (k.is_zero()) throw DomainError("kernel must be nonzero");
    if (opts.holder_samples < 8) throw DomainError("need at least 8 Hölder samples");

    Chain c;
    c.kn = k * cplx(1.0 / norm_p(k, params.q(), rule));
    if (opts.B) {
        c.B = *opts.B;
    } else {
        const auto samples = std::max<std::size_t>(std::size_t{1} << 16, 64 * static_cast<std::size_t>(k.degree() + 1));
        c.B = c.kn.degree() < 1 ? 0.0 : sup_modulus(theta_derivative(c.kn, 2), samples, true);
    }
    c.beta = holder_exponent(params.p(), params.alpha(), eta);
    if (c.B > 0.0) {
        auto hc = holder_constant(c.B, params.p(), params.alpha(), eta);
        c.C = hc.value;
        c.rectified = std::move(hc.rectified);
    }

    // Hölder constant of G = k^{1/(p-1)}: interior Halton points plus a boundary ring.
    const double e = 1.0 / (params.p() - 1.0);
    const int n_in = opts.holder_samples - opts.holder_samples / 4;
    const int n_bd = opts.holder_samples / 4;
    std::vector<cplx> z;
    z.reserve(static_cast<std::size_t>(opts.holder_samples));
    for (int i = 1; i <= n_in; ++i)
        z.push_back(std::polar(std::sqrt(radical_inverse(i, 2)), 2.0 * pi * radical_inverse(i, 3)));
    for (int i = 0; i < n_bd; ++i) z.push_back(std::polar(1.0, 2.0 * pi * i / n_bd));
    std::vector<cplx> g(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        const cplx v = c.kn(z[i]);
        if (v.real() <= 0.0 && v.imag() == 0.0) throw DomainError("k^{1/(p-1)} is ambiguous: k meets the negative axis");
        g[i] = std::pow(v, e);
    }
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) {
            const double dist = std::abs(z[i] - z[j]);
            if (dist > 0.0) c.D = std::max(c.D, std::abs(g[i] - g[j]) / std::pow(dist, c.beta));
        }
    c.samples = static_cast<int>(z.size());
    c.lambda = std::pow(d, e);
    return c;
}

} // namespace

double sector_constant(double theta, double p, double alpha, double C_p_alpha)
{
    (void)SpaceParams::make(p, alpha);
    if (!(theta >= 0.0 && theta < 2.0 * pi && theta < 2.0 * pi * (p - 1.0)))
        throw DomainError("sector angle must satisfy 0 <= theta < 2 pi and theta < 2 pi (p-1)");
    if (!(C_p_alpha > 0.0)) throw DomainError("Bergman projection bound C_{p,alpha} must be positive");
    return 2.0 * C_p_alpha * std::abs(std::sin((p - 2.0) * theta / (4.0 * (p - 1.0))));
}

double sector_distance_bound(double C_theta, double p)
{
    if (!(C_theta >= 0.0)) throw DomainError("C_theta must be nonnegative");
    if (!(p > 1.0)) throw DomainError("p must exceed 1");
    if (p == 2.0) throw UnsupportedExponentError("sector distance bound is stated for p != 2");
    if (p > 2.0) return 2.0 * std::pow(p, 1.0 / p) * std::pow(C_theta, 1.0 / p);
    return 2.0 * std::numbers::sqrt2 / std::sqrt(p - 1.0) * std::sqrt(C_theta);
}

SectorCheck range_in_sector(const Polynomial& k, double theta, double d, const SpaceParams& params,
                            const DiskRule& rule, int grid_density)
{
    if (grid_density < 2) throw DomainError("grid density must be at least 2");
    if (k.is_zero()) return {false, -std::numeric_limits<double>::infinity(), -d, 0};
    const Polynomial kn = k * cplx(1.0 / norm_p(k, params.q(), rule));
    const int R = grid_density;
    const int M = 4 * grid_density;
    double max_arg = 0.0;
    double min_mod = std::numeric_limits<double>::infinity();
    SectorCheck out;
    for (int i = 0; i < R; ++i) {
        const double r = static_cast<double>(i) / (R - 1);
        for (int m = 0; m < (i == 0 ? 1 : M); ++m) {
            const cplx v = kn(std::polar(r, 2.0 * pi * m / M));
            max_arg = std::max(max_arg, std::abs(std::arg(v)));
            min_mod = std::min(min_mod, std::abs(v));
            ++out.samples;
        }
    }
    out.arg_margin = theta / 2.0 - max_arg;
    out.modulus_margin = min_mod - d;
    const bool angular = theta == 0.0 ? max_arg == 0.0 : out.arg_margin > 0.0;
    out.inside = angular && out.modulus_margin > 0.0;
    return out;
}

SectorCertificate nonvanishing_certificate(const Polynomial& k, double theta, double d, const SpaceParams& params,
                                           double C_p_alpha, double eta, const DiskRule& rule,
                                           const SectorOptions& opts)
{
    const Chain chain = build_chain(k, d, params, eta, rule, opts);
    SectorCertificate s;
    s.p = params.p();
    s.alpha = params.alpha();
    s.theta = theta;
    s.d = d;
    s.eta = params.p() < 2.0 ? eta : 0.0;
    s.C_p_alpha = C_p_alpha;
    s.range = range_in_sector(k, theta, d, params, rule, opts.grid_density);
    if (!s.range.inside)
        throw HypothesisError("range of the normalized kernel is not inside the sector (arg margin " +
                              std::to_string(s.range.arg_margin) + ", modulus margin " +
                              std::to_string(s.range.modulus_margin) + ")");
    s.C_theta = sector_constant(theta, s.p, s.alpha, C_p_alpha);
    s.bergman_bound = sector_distance_bound(s.C_theta, s.p);
    s.B = chain.B;
    s.beta = chain.beta;
    s.holder_C = chain.C;
    s.holder_D = chain.D;
    s.holder_samples = chain.samples;
    s.lambda = chain.lambda;
    for (const auto& r : chain.rectified) s.warnings.push_back("Hölder constant: " + r);

    const double CD = chain.C + chain.D;
    if (s.bergman_bound == 0.0) {
        s.eps_inf = 0.0;
        s.eps_valid = true;
    } else if (CD == 0.0) {
        // F - G is constant, so its sup equals its (probability-measure) Bergman norm.
        s.eps_inf = s.bergman_bound;
        s.eps_valid = true;
    } else {
        const auto eps = epsilon_of_delta(s.bergman_bound, CD, s.beta, s.p, s.alpha);
        s.eps_inf = eps.value;
        s.eps_valid = eps.valid;
        if (!eps.warning.empty()) s.warnings.push_back(eps.warning);
    }
    s.nonvanishing = s.eps_valid && s.eps_inf < s.lambda;
    s.warnings.push_back("range inclusion and the Hölder constant D are sampled, not proved");
    return s;
}

std::optional<double> find_certifying_theta(const Polynomial& k, double d, const SpaceParams& params,
                                            double C_p_alpha, double eta, const DiskRule& rule,
                                            const SectorOptions& opts)
{
    const Chain chain = build_chain(k, d, params, eta, rule, opts);
    const double p = params.p();
    const double CD = chain.C + chain.D;
    auto certifies = [&](double theta) {
        const double bound = sector_distance_bound(sector_constant(theta, p, params.alpha(), C_p_alpha), p);
        if (bound == 0.0) return true;
        if (CD == 0.0) return bound < chain.lambda;
        const auto eps = epsilon_of_delta(bound, CD, chain.beta, p, params.alpha());
        return eps.valid && eps.value < chain.lambda;
    };
    // sin((p-2) theta / (4(p-1))) increases in theta up to the first of these limits.
    double hi = std::min(2.0 * pi, 2.0 * pi * (p - 1.0));
    hi = std::min(hi, 2.0 * pi * (p - 1.0) / std::abs(p - 2.0));
    hi = std::nextafter(hi, 0.0);
    // Narrowest admissible sector: every theta certified below this fails the range check.
    const SectorCheck widest = range_in_sector(k, hi, d, params, rule, opts.grid_density);
    if (widest.modulus_margin <= 0.0) return std::nullopt;
    const double theta_min = 2.0 * (hi / 2.0 - widest.arg_margin);
    if (certifies(hi)) return widest.arg_margin > 0.0 ? std::optional<double>(hi) : std::nullopt;
    double lo = 0.0;
    // Walk down geometrically until a certifying theta appears or we pass the double range.
    double probe = hi / 2.0;
    while (probe > 0.0 && !certifies(probe)) {
        hi = probe;
        probe /= 2.0;
    }
    if (probe == 0.0) return std::nullopt;
    lo = probe;
    while (hi - lo > 1e-10 * lo) {
        const double mid = 0.5 * (lo + hi);
        (certifies(mid) ? lo : hi) = mid;
    }
    if (!(lo > theta_min)) return std::nullopt;
    return lo;
}

} // namespace bergex
