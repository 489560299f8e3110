#pragma once

#include "bergex/space.hpp"

#include <random>

namespace bergex::test {

inline const Polynomial& example_kernel()
{
    static const Polynomial k{1.0, 1.5, 1.875};
    return k;
}

inline SpaceParams example_params()
{
    return SpaceParams::make(4.0, -0.5);
}

/// Coefficients uniform in the square [-1, 1]^2.
inline Polynomial random_polynomial(std::mt19937_64& rng, int degree, bool real = false)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> c(static_cast<std::size_t>(degree + 1));
    for (auto& x : c) x = {u(rng), real ? 0.0 : u(rng)};
    return Polynomial(std::move(c));
}

inline double max_coeff_diff(const Polynomial& a, const Polynomial& b)
{
    double m = 0.0;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t j = 0; j < n; ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

} // namespace bergex::test
