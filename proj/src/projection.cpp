#include "bergex/projection.hpp"

#include "bergex/errors.hpp"
#include "bergex/summation.hpp"

#include <algorithm>

namespace bergex {

Polynomial project_monomial(int m, int n, double alpha)
{
    if (!(alpha > -1.0)) throw DomainError("projection needs alpha > -1");
    if (m < 0 || n < 0) throw DomainError("monomial exponents must be nonnegative");
    if (m < n) return Polynomial{};
    return Polynomial::monomial(static_cast<std::size_t>(m - n),
                                monomial_norm_sq(m, alpha) / monomial_norm_sq(m - n, alpha));
}

Polynomial project_product(const Polynomial& a, const Polynomial& b, double alpha)
{
    const int da = a.degree();
    const int db = b.degree();
    if (da < 0 || db < 0) return Polynomial{};
    const auto g = monomial_norms_sq(da, alpha);
    std::vector<cplx> out(static_cast<std::size_t>(da + 1));
    std::vector<cplx> terms;
    for (int j = 0; j <= da; ++j) {
        terms.clear();
        for (int n = 0; n <= db && n + j <= da; ++n) terms.push_back(a[n + j] * std::conj(b[n]) * g[n + j]);
        out[j] = pairwise_sum<cplx>(terms) / g[j];
    }
    return Polynomial(std::move(out));
}

Polynomial nonlinear_kernel(const Polynomial& g, const SpaceParams& params)
{
    const int m = params.half_p();
    if (g.is_zero()) throw DomainError("nonlinear kernel of the zero polynomial is undefined");
    return project_product(power(g, m), power(g, m - 1), params.alpha());
}

Polynomial project_numeric(const std::function<cplx(cplx)>& g, const DiskRule& rule, int max_degree)
{
    if (max_degree < 0) return Polynomial{};
    const auto gam = monomial_norms_sq(max_degree, rule.alpha);
    // One pass over the nodes: accumulate g(z) conj(z)^j for all j at once.
    const std::size_t nd = static_cast<std::size_t>(max_degree + 1);
    const std::size_t M = rule.angular_count;
    std::vector<std::vector<cplx>> ring(nd, std::vector<cplx>(M));
    std::vector<std::vector<cplx>> rings(nd, std::vector<cplx>(rule.radial.size()));
    for (std::size_t r = 0; r < rule.radial.size(); ++r) {
        for (std::size_t m = 0; m < M; ++m) {
            const cplx z = rule.node(r, m);
            const cplx zc = std::conj(z);
            cplx v = g(z);
            for (std::size_t j = 0; j < nd; ++j) {
                ring[j][m] = v;
                v *= zc;
            }
        }
        const double w = rule.radial[r].w / static_cast<double>(M);
        for (std::size_t j = 0; j < nd; ++j) rings[j][r] = pairwise_sum<cplx>(ring[j]) * w;
    }
    std::vector<cplx> c(nd);
    for (std::size_t j = 0; j < nd; ++j) c[j] = pairwise_sum<cplx>(rings[j]) / gam[j];
    return Polynomial(std::move(c));
}

Polynomial truncate(const Polynomial& f, int n)
{
    if (n < 0) throw DomainError("truncation degree must be nonnegative");
    const std::size_t keep = std::min(f.size(), static_cast<std::size_t>(n) + 1);
    return f.resized(keep);
}

} // namespace bergex
