#pragma once

#include "bergex/quadrature.hpp"
#include "bergex/space.hpp"

#include <optional>

namespace bergex {

/// C_theta = 2 C_{p,alpha} |sin((p-2) theta / (4(p-1)))|.
/// Needs 0 <= theta < 2 pi, theta < 2 pi (p-1) and C_p_alpha > 0.
double sector_constant(double theta, double p, double alpha, double C_p_alpha);

/// Bergman-norm distance from F to k^{1/(p-1)} given C_theta; p != 2.
double sector_distance_bound(double C_theta, double p);

struct SectorCheck {
    bool inside = false;
    /// theta/2 - max |arg k|; positive when the angular condition holds.
    double arg_margin = 0.0;
    /// min |k| - d over the grid.
    double modulus_margin = 0.0;
    std::size_t samples = 0;
};
/// Samples k / ||k||_{q,alpha} on the closed disk (grid_density radii including
/// r = 0 and r = 1, 4 * grid_density angles) and tests |arg| < theta/2 and
/// |k| > d. A numerical check only. theta = 0 accepts only exactly positive values.
SectorCheck range_in_sector(const Polynomial& k, double theta, double d, const SpaceParams& params,
                            const DiskRule& rule, int grid_density = 64);

struct SectorOptions {
    int grid_density = 64;
    /// Quasi-random points for the Hölder constant of k^{1/(p-1)}.
    int holder_samples = 512;
    /// Overrides the second-difference bound B of the normalized kernel.
    std::optional<double> B;
};

struct SectorCertificate {
    double p = 0.0;
    double alpha = 0.0;
    double theta = 0.0;
    double d = 0.0;
    double eta = 0.0;
    double C_p_alpha = 0.0;
    double C_theta = 0.0;
    double bergman_bound = 0.0;
    double B = 0.0;
    double beta = 0.0;
    double holder_C = 0.0;
    double holder_D = 0.0;
    int holder_samples = 0;
    double eps_inf = 0.0;
    double lambda = 0.0;
    bool eps_valid = false;
    bool nonvanishing = false;
    SectorCheck range;
    std::vector<std::string> warnings;
};

/// Zero-freeness test for the extremal function of k from a sector condition
/// on the range of k. Throws UnsupportedExponentError at p = 2,
/// HypothesisError outside the Hölder window or when the range check fails.
SectorCertificate nonvanishing_certificate(const Polynomial& k, double theta, double d, const SpaceParams& params,
                                           double C_p_alpha, double eta, const DiskRule& rule,
                                           const SectorOptions& opts = {});

/// Largest theta (by bisection, to relative precision 1e-10) for which the
/// certificate chain gives eps_inf < d^{1/(p-1)}. std::nullopt when the sampled
/// range already fails the modulus test, or when every certifying theta is too
/// narrow to contain the sampled arguments of k.
std::optional<double> find_certifying_theta(const Polynomial& k, double d, const SpaceParams& params,
                                            double C_p_alpha, double eta, const DiskRule& rule,
                                            const SectorOptions& opts = {});

} // namespace bergex
