#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bergex {

using cplx = std::complex<double>;

/// Exponent pair (p, alpha) of the weighted Bergman space A^p_alpha, with the
/// conjugate exponent q = p/(p-1).
class SpaceParams {
public:
    /// Throws DomainError unless p > 1 and alpha > -1.
    static SpaceParams make(double p, double alpha);

    double p() const noexcept { return p_; }
    double alpha() const noexcept { return alpha_; }
    double q() const noexcept { return q_; }

    /// True when p is an even integer, i.e. |f|^p is a polynomial in z and conj(z).
    bool even_p() const noexcept;

    /// p/2 for even p; throws UnsupportedExponentError otherwise.
    int half_p() const;

    /// Hypothesis window of the Hölder-regularity results:
    /// (p >= 2 and -1 < alpha < 0) or (1 < p < 2 and -1 < alpha < p - 2).
    bool holder_range_ok() const noexcept;

private:
    SpaceParams(double p, double alpha, double q) : p_(p), alpha_(alpha), q_(q) {}

    double p_;
    double alpha_;
    double q_;
};

/// Dense analytic polynomial a_0 + a_1 z + ... stored in increasing degree.
class Polynomial {
public:
    Polynomial() = default;
    /// Throws DomainError if any coefficient is NaN or infinite.
    explicit Polynomial(std::vector<cplx> coeffs);
    Polynomial(std::initializer_list<cplx> coeffs);

    static Polynomial monomial(std::size_t n, cplx c = 1.0);

    /// Index of the last nonzero coefficient; -1 for the zero polynomial.
    int degree() const noexcept;
    bool is_zero() const noexcept { return degree() < 0; }

    /// Number of stored coefficients (may exceed degree()+1 when trailing zeros are kept).
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const cplx> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of z^j, zero beyond the stored range.
    cplx operator[](std::size_t j) const noexcept { return j < coeffs_.size() ? coeffs_[j] : cplx{}; }

    /// Horner evaluation.
    cplx operator()(cplx z) const noexcept;

    Polynomial derivative() const;

    /// Copy padded or cut to exactly n coefficients.
    Polynomial resized(std::size_t n) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(cplx s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, cplx s) { return a *= s; }
    friend Polynomial operator*(cplx s, Polynomial a) { return a *= s; }
    /// Coefficient convolution, direct O(d^2).
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<cplx> coeffs_;
};

/// f^m by repeated convolution; f^0 = 1.
Polynomial power(const Polynomial& f, int m);

/// gamma(n, alpha) = ||z^n||^2 in A^2_alpha = Gamma(alpha+2) Gamma(n+1) / Gamma(n+alpha+2).
double monomial_norm_sq(int n, double alpha);

/// gamma(0..max_n, alpha).
std::vector<double> monomial_norms_sq(int max_n, double alpha);

/// Exact A^p_alpha norm for even p: (sum |c_n|^2 gamma(n, alpha))^(1/p) with c = f^(p/2).
double norm_even_p(const Polynomial& f, const SpaceParams& params);

/// Duality pairing  int f conj(k) dA_alpha = sum a_j conj(b_j) gamma(j, alpha).
cplx pairing(const Polynomial& f, const Polynomial& k, double alpha);

/// f(e^{it} z).
Polynomial rotate(const Polynomial& f, double t);

/// Polynomial representing d^order/dtheta^order f(r e^{i theta}); order 1 or 2.
Polynomial theta_derivative(const Polynomial& f, int order);

/// Max of |f| over `samples` equally spaced boundary points (0 picks 64*(deg+1)).
///
/// The plain grid value approaches the true supremum from below. With
/// `rigorous` set, (h/2) * sum j|a_j| is added, h being the grid spacing,
/// which bounds the supremum from above.
double sup_modulus(const Polynomial& f, std::size_t samples = 0, bool rigorous = false);

} // namespace bergex
