#include "bergex/space.hpp"

#include "bergex/errors.hpp"
#include "bergex/summation.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bergex {

SpaceParams SpaceParams::make(double p, double alpha)
{
    if (!(p > 1.0) || !std::isfinite(p))
        throw DomainError("p must be a finite number > 1, got " + std::to_string(p));
    if (!(alpha > -1.0) || !std::isfinite(alpha))
        throw DomainError("alpha must be a finite number > -1, got " + std::to_string(alpha));
    return SpaceParams(p, alpha, p / (p - 1.0));
}

bool SpaceParams::even_p() const noexcept
{
    return p_ == std::round(p_) && static_cast<long>(std::round(p_)) % 2 == 0;
}

int SpaceParams::half_p() const
{
    if (!even_p())
        throw UnsupportedExponentError("exact norm needs an even integer p, got " + std::to_string(p_));
    return static_cast<int>(std::round(p_)) / 2;
}

bool SpaceParams::holder_range_ok() const noexcept
{
    if (p_ >= 2.0) return alpha_ > -1.0 && alpha_ < 0.0;
    return alpha_ > -1.0 && alpha_ < p_ - 2.0;
}

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs))
{
    for (const cplx& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw DomainError("polynomial coefficients must be finite");
    }
}

Polynomial::Polynomial(std::initializer_list<cplx> coeffs) : Polynomial(std::vector<cplx>(coeffs)) {}

Polynomial Polynomial::monomial(std::size_t n, cplx c)
{
    std::vector<cplx> v(n + 1);
    v[n] = c;
    return Polynomial(std::move(v));
}

int Polynomial::degree() const noexcept
{
    for (std::size_t j = coeffs_.size(); j-- > 0;) {
        if (coeffs_[j] != cplx{}) return static_cast<int>(j);
    }
    return -1;
}

cplx Polynomial::operator()(cplx z) const noexcept
{
    cplx acc{};
    for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * z + coeffs_[j];
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<cplx> d(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = static_cast<double>(j) * coeffs_[j];
    Polynomial out;
    out.coeffs_ = std::move(d);
    return out;
}

Polynomial Polynomial::resized(std::size_t n) const
{
    Polynomial out = *this;
    out.coeffs_.resize(n);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
    return *this;
}

Polynomial& Polynomial::operator*=(cplx s)
{
    for (cplx& c : coeffs_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    const int da = a.degree();
    const int db = b.degree();
    if (da < 0 || db < 0) return Polynomial{};
    std::vector<cplx> out(static_cast<std::size_t>(da + db + 1));
    for (int i = 0; i <= da; ++i) {
        const cplx ai = a.coeffs_[i];
        if (ai == cplx{}) continue;
        for (int j = 0; j <= db; ++j) out[i + j] += ai * b.coeffs_[j];
    }
    Polynomial r;
    r.coeffs_ = std::move(out);
    return r;
}

Polynomial power(const Polynomial& f, int m)
{
    if (m < 0) throw DomainError("negative polynomial power");
    Polynomial acc{1.0};
    for (int i = 0; i < m; ++i) acc = acc * f;
    return acc;
}

double monomial_norm_sq(int n, double alpha)
{
    if (n < 0) throw DomainError("gamma(n, alpha) needs n >= 0");
    if (!(alpha > -1.0)) throw DomainError("gamma(n, alpha) needs alpha > -1");
    if (n == 0) return 1.0;
    // Gamma(n+1)/Gamma(n+1+(alpha+1)) without forming either factorial.
    return boost::math::tgamma(alpha + 2.0) *
           boost::math::tgamma_delta_ratio(static_cast<double>(n) + 1.0, alpha + 1.0);
}

std::vector<double> monomial_norms_sq(int max_n, double alpha)
{
    std::vector<double> g(static_cast<std::size_t>(std::max(max_n + 1, 0)));
    for (int n = 0; n <= max_n; ++n) g[n] = monomial_norm_sq(n, alpha);
    return g;
}

double norm_even_p(const Polynomial& f, const SpaceParams& params)
{
    const int m = params.half_p();
    const Polynomial c = power(f, m);
    const int d = c.degree();
    if (d < 0) return 0.0;
    const auto g = monomial_norms_sq(d, params.alpha());
    std::vector<double> terms(static_cast<std::size_t>(d + 1));
    for (int n = 0; n <= d; ++n) terms[n] = std::norm(c[n]) * g[n];
    const double s = pairwise_sum<double>(terms);
    return std::pow(s, 1.0 / params.p());
}

cplx pairing(const Polynomial& f, const Polynomial& k, double alpha)
{
    const int d = std::min(f.degree(), k.degree());
    if (d < 0) return {};
    const auto g = monomial_norms_sq(d, alpha);
    std::vector<cplx> terms(static_cast<std::size_t>(d + 1));
    for (int j = 0; j <= d; ++j) terms[j] = f[j] * std::conj(k[j]) * g[j];
    return pairwise_sum<cplx>(terms);
}

Polynomial rotate(const Polynomial& f, double t)
{
    std::vector<cplx> c(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] *= std::polar(1.0, static_cast<double>(j) * t);
    return Polynomial(std::move(c));
}

Polynomial theta_derivative(const Polynomial& f, int order)
{
    if (order != 1 && order != 2)
        throw UnsupportedExponentError("theta_derivative supports order 1 or 2; apply repeatedly for more");
    // d/dtheta z^j = i j z^j.
    std::vector<cplx> c(f.coeffs().begin(), f.coeffs().end());
    const cplx unit = order == 1 ? cplx{0.0, 1.0} : cplx{-1.0, 0.0};
    for (std::size_t j = 0; j < c.size(); ++j) {
        const double jj = static_cast<double>(j);
        c[j] *= unit * (order == 1 ? jj : jj * jj);
    }
    return Polynomial(std::move(c));
}

double sup_modulus(const Polynomial& f, std::size_t samples, bool rigorous)
{
    const int d = f.degree();
    const std::size_t need = 4 * static_cast<std::size_t>(std::max(d, 0) + 1);
    if (samples == 0) samples = 64 * static_cast<std::size_t>(std::max(d, 0) + 1);
    if (samples < need)
        throw DomainError("sup_modulus needs at least 4*(degree+1) samples");
    if (d < 0) return 0.0;
    double best = 0.0;
    const double h = 2.0 * std::numbers::pi / static_cast<double>(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        best = std::max(best, std::abs(f(std::polar(1.0, h * static_cast<double>(j)))));
    }
    if (rigorous) {
        double lip = 0.0;
        for (int j = 1; j <= d; ++j) lip += j * std::abs(f[j]);
        best += 0.5 * h * lip;
    }
    return best;
}

} // namespace bergex
