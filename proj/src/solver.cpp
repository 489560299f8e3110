#include "bergex/solver.hpp"

#include "bergex/projection.hpp"
#include "bergex/quadrature.hpp"
#include "bergex/summation.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>

namespace bergex {

namespace {

// Real coordinate of a coefficient vector: Re a_j, or Im a_j when `imag`.
struct Coord {
    int j;
    bool imag;
};

std::vector<Coord> make_coords(int n, bool real_only)
{
    std::vector<Coord> c;
    for (int j = 0; j <= n; ++j) {
        c.push_back({j, false});
        if (!real_only) c.push_back({j, true});
    }
    return c;
}

Eigen::VectorXd to_vector(const Polynomial& f, const std::vector<Coord>& coords)
{
    Eigen::VectorXd x(static_cast<Eigen::Index>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const cplx a = f[static_cast<std::size_t>(coords[i].j)];
        x[static_cast<Eigen::Index>(i)] = coords[i].imag ? a.imag() : a.real();
    }
    return x;
}

// Writes x into the low coefficients of `base` (which must have room for them).
Polynomial from_vector(const Eigen::VectorXd& x, const std::vector<Coord>& coords, Polynomial base)
{
    std::vector<cplx> c(base.coeffs().begin(), base.coeffs().end());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        cplx& a = c[static_cast<std::size_t>(coords[i].j)];
        const double v = x[static_cast<Eigen::Index>(i)];
        a = coords[i].imag ? cplx{a.real(), v} : cplx{v, a.imag()};
    }
    return Polynomial(std::move(c));
}

// Phi(f) = ||f||_{p,alpha}^p together with its derivatives in the low coefficients.
//
// kernel() returns K_j = (1/gamma_j) int |f|^{p-2} f conj(z^j) dA_alpha for
// j <= n, the low part of P_alpha(|f|^p / conj f); the gradient of Phi with
// respect to (Re a_j, Im a_j) is p gamma_j (Re K_j, Im K_j).
class PowerFunctional {
public:
    virtual ~PowerFunctional() = default;
    virtual double value(const Polynomial& f) const = 0;
    virtual std::vector<cplx> kernel(const Polynomial& f, int n) const = 0;
    virtual Eigen::MatrixXd hessian(const Polynomial& f, const std::vector<Coord>& coords) const = 0;
};

class EvenPower final : public PowerFunctional {
public:
    EvenPower(const SpaceParams& params) : params_(params), m_(params.half_p()) {}

    double value(const Polynomial& f) const override
    {
        return std::pow(norm_even_p(f, params_), params_.p());
    }

    std::vector<cplx> kernel(const Polynomial& f, int n) const override
    {
        const Polynomial k = project_product(power(f, m_), power(f, m_ - 1), params_.alpha());
        std::vector<cplx> out(static_cast<std::size_t>(n + 1));
        for (int j = 0; j <= n; ++j) out[j] = k[static_cast<std::size_t>(j)];
        return out;
    }

    // D^2 Phi[h1,h2] = 2 Re<v h1, v h2> + 2 Re<u, w h1 h2> with u = f^m,
    // v = m f^{m-1}, w = m(m-1) f^{m-2}, inner products in A^2_alpha.
    Eigen::MatrixXd hessian(const Polynomial& f, const std::vector<Coord>& coords) const override
    {
        const double md = static_cast<double>(m_);
        const Polynomial u = power(f, m_);
        const Polynomial v = md * power(f, m_ - 1);
        const Polynomial w = m_ >= 2 ? (md * (md - 1.0)) * power(f, m_ - 2) : Polynomial{};
        int n = 0;
        for (const auto& c : coords) n = std::max(n, c.j);
        const int du = std::max(u.degree(), 0);
        const int dv = std::max(v.degree(), 0);
        const auto g = monomial_norms_sq(std::max(du, dv + n) + 1, params_.alpha());

        // S[j][l] = sum_t v_{t-j} conj(v_{t-l}) gamma_t ; T[s] = sum_t u_t conj(w_{t-s}) gamma_t.
        const std::size_t nn = static_cast<std::size_t>(n + 1);
        std::vector<cplx> S(nn * nn);
        std::vector<cplx> terms;
        for (int j = 0; j <= n; ++j) {
            for (int l = j; l <= n; ++l) {
                terms.clear();
                for (int t = l; t <= dv + j; ++t)
                    terms.push_back(v[static_cast<std::size_t>(t - j)] * std::conj(v[static_cast<std::size_t>(t - l)]) * g[t]);
                const cplx s = pairwise_sum<cplx>(terms);
                S[j * nn + l] = s;
                S[l * nn + j] = std::conj(s);
            }
        }
        std::vector<cplx> T(2 * nn);
        if (!w.is_zero()) {
            for (int s = 0; s <= 2 * n; ++s) {
                terms.clear();
                for (int t = s; t <= du; ++t)
                    terms.push_back(u[static_cast<std::size_t>(t)] * std::conj(w[static_cast<std::size_t>(t - s)]) * g[t]);
                T[s] = pairwise_sum<cplx>(terms);
            }
        }

        const auto dim = static_cast<Eigen::Index>(coords.size());
        Eigen::MatrixXd H(dim, dim);
        for (Eigen::Index a = 0; a < dim; ++a) {
            for (Eigen::Index b = 0; b < dim; ++b) {
                const Coord ca = coords[a];
                const Coord cb = coords[b];
                const cplx e1 = ca.imag ? cplx{0, 1} : cplx{1, 0};
                const cplx e2 = cb.imag ? cplx{0, 1} : cplx{1, 0};
                const cplx s = S[ca.j * nn + cb.j];
                const cplx t = T[static_cast<std::size_t>(ca.j + cb.j)];
                H(a, b) = 2.0 * std::real(e1 * std::conj(e2) * s) + 2.0 * std::real(std::conj(e1 * e2) * t);
            }
        }
        return H;
    }

private:
    SpaceParams params_;
    int m_;
};

class QuadraturePower final : public PowerFunctional {
public:
    QuadraturePower(const SpaceParams& params, DiskRule rule) : p_(params.p()), rule_(std::move(rule)) {}

    double value(const Polynomial& f) const override
    {
        return rule_.integrate([&](cplx z) {
            const double a = std::abs(f(z));
            return a == 0.0 ? 0.0 : std::pow(a, p_);
        });
    }

    std::vector<cplx> kernel(const Polynomial& f, int n) const override
    {
        const Polynomial k = project_numeric(
            [&](cplx z) {
                const cplx v = f(z);
                const double a = std::abs(v);
                return a == 0.0 ? cplx{} : std::pow(a, p_ - 2.0) * v;
            },
            rule_, n);
        std::vector<cplx> out(static_cast<std::size_t>(n + 1));
        for (int j = 0; j <= n; ++j) out[j] = k[static_cast<std::size_t>(j)];
        return out;
    }

    // D^2 Phi[h1,h2] = int p(p-2)|f|^{p-4} Re(h1 conj f) Re(h2 conj f) + p |f|^{p-2} Re(h1 conj h2).
    Eigen::MatrixXd hessian(const Polynomial& f, const std::vector<Coord>& coords) const override
    {
        const auto dim = static_cast<Eigen::Index>(coords.size());
        Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
        Eigen::VectorXd phi(dim), re(dim), im(dim);
        const double M = static_cast<double>(rule_.angular_count);
        for (std::size_t r = 0; r < rule_.radial.size(); ++r) {
            const double W = rule_.radial[r].w / M;
            for (std::size_t m = 0; m < rule_.angular_count; ++m) {
                const cplx z = rule_.node(r, m);
                const cplx fz = f(z);
                const double a = std::abs(fz);
                if (a == 0.0) continue;
                for (Eigen::Index i = 0; i < dim; ++i) {
                    const cplx h = (coords[i].imag ? cplx{0, 1} : cplx{1, 0}) * std::pow(z, coords[i].j);
                    phi[i] = std::real(h * std::conj(fz));
                    re[i] = h.real();
                    im[i] = h.imag();
                }
                const double c1 = W * p_ * (p_ - 2.0) * std::pow(a, p_ - 4.0);
                const double c2 = W * p_ * std::pow(a, p_ - 2.0);
                H.noalias() += c1 * phi * phi.transpose();
                H.noalias() += c2 * (re * re.transpose() + im * im.transpose());
            }
        }
        return H;
    }

private:
    double p_;
    DiskRule rule_;
};

std::unique_ptr<PowerFunctional> make_functional(const SpaceParams& params, int degree, const SolverOptions& opts)
{
    if (params.even_p()) return std::make_unique<EvenPower>(params);
    DiskRule rule = default_rule(params.alpha(), degree);
    if (opts.quad_radial > 0 || opts.quad_angular > 0) {
        rule = build_rule(params.alpha(), opts.quad_radial > 0 ? opts.quad_radial : rule.radial.size(),
                          opts.quad_angular > 0 ? opts.quad_angular : rule.angular_count);
    }
    return std::make_unique<QuadraturePower>(params, std::move(rule));
}

double euclid(const std::vector<cplx>& v)
{
    double s = 0.0;
    for (const cplx& c : v) s += std::norm(c);
    return std::sqrt(s);
}

// Newton step for a convex objective with Hessian H and gradient grad; falls
// back to steepest descent when the factorization does not give a descent direction.
Eigen::VectorXd newton_direction(const Eigen::MatrixXd& H, const Eigen::VectorXd& grad)
{
    Eigen::LDLT<Eigen::MatrixXd> ldlt(H);
    if (ldlt.info() == Eigen::Success) {
        Eigen::VectorXd d = ldlt.solve(-grad);
        if (d.allFinite() && d.dot(grad) < 0.0) return d;
    }
    return -grad;
}

struct ExtremalState {
    Polynomial F;
    double value;
    double residual;
};

class ExtremalProblem {
public:
    ExtremalProblem(const Polynomial& k, const SpaceParams& params, int n, const SolverOptions& opts)
        : params_(params), n_(n), p_(params.p()), kn_(truncate(k, n).resized(static_cast<std::size_t>(n) + 1)),
          real_only_(opts.real_coefficients), coords_(make_coords(n, opts.real_coefficients)),
          gam_(monomial_norms_sq(n, params.alpha())), functional_(make_functional(params, n, opts))
    {
        kn_norm_ = euclid(std::vector<cplx>(kn_.coeffs().begin(), kn_.coeffs().end()));
    }

    double norm(const Polynomial& f) const { return std::pow(functional_->value(f), 1.0 / p_); }

    double objective(const Polynomial& f) const { return pairing(f, kn_, params_.alpha()).real(); }

    // Residual of the first-order condition at a unit-norm F with value `value`.
    double kkt_residual(const Polynomial& F, double value) const
    {
        const auto K = functional_->kernel(F, n_);
        std::vector<cplx> diff(K.size());
        for (std::size_t j = 0; j < K.size(); ++j) {
            const cplx Kj = real_only_ ? cplx{K[j].real(), 0.0} : K[j];
            diff[j] = value * Kj - kn_[j];
        }
        return euclid(diff) / kn_norm_;
    }

    ExtremalState normalized(const Polynomial& x) const
    {
        const double N = norm(x);
        Polynomial F = x * cplx{1.0 / N};
        const double value = objective(F);
        return {F, value, kkt_residual(F, value)};
    }

    // One step of ascent along the gamma-metric gradient of Re<f,k>, projected
    // onto the tangent space of the unit sphere and retracted radially.
    // Returns false when no step is accepted.
    bool warm_step(ExtremalState& s, double& step) const
    {
        const auto K = functional_->kernel(s.F, n_);
        // Tangent projection in the gamma metric: d = b - (<b,K>/<K,K>) K.
        std::vector<cplx> kc(K.begin(), K.end());
        if (real_only_)
            for (auto& c : kc) c = c.real();
        double bk = 0.0, kk = 0.0;
        for (int j = 0; j <= n_; ++j) {
            bk += gam_[j] * std::real(kn_[j] * std::conj(kc[j]));
            kk += gam_[j] * std::norm(kc[j]);
        }
        std::vector<cplx> d(static_cast<std::size_t>(n_ + 1));
        double dd = 0.0;
        for (int j = 0; j <= n_; ++j) {
            d[j] = kn_[j] - (bk / kk) * kc[j];
            dd += gam_[j] * std::norm(d[j]);
        }
        if (dd == 0.0) return false;
        const Polynomial dir(std::move(d));
        for (int tries = 0; tries < 60; ++tries) {
            const Polynomial trial = s.F + dir * cplx{step};
            const double N = norm(trial);
            const Polynomial F = trial * cplx{1.0 / N};
            const double value = objective(F);
            if (value >= s.value + 1e-4 * step * dd) {
                s = {F, value, kkt_residual(F, value)};
                step *= 2.0;
                return true;
            }
            step *= 0.5;
        }
        return false;
    }

    // Newton iteration on L(x) = ||x||^p / p - Re<x, k>, whose minimizer is
    // value^{1/(p-1)} F.  Returns the new state or nullopt on stagnation.
    std::optional<ExtremalState> newton_step(Polynomial& x) const
    {
        const auto K = functional_->kernel(x, n_);
        const auto dim = static_cast<Eigen::Index>(coords_.size());
        Eigen::VectorXd grad(dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            const Coord c = coords_[i];
            const cplx diff = K[static_cast<std::size_t>(c.j)] - kn_[static_cast<std::size_t>(c.j)];
            grad[i] = gam_[c.j] * (c.imag ? diff.imag() : diff.real());
        }
        const Eigen::MatrixXd H = functional_->hessian(x, coords_) / p_;
        const Eigen::VectorXd d = newton_direction(H, grad);
        const Eigen::VectorXd x0 = to_vector(x, coords_);
        const double L0 = lagrangian(x);
        const double slope = grad.dot(d);
        double t = 1.0;
        for (int tries = 0; tries < 60; ++tries) {
            const Polynomial trial = from_vector(x0 + t * d, coords_, x);
            const double L = lagrangian(trial);
            if (L <= L0 + 1e-4 * t * slope || (tries > 0 && std::abs(L - L0) <= 1e-15 * std::abs(L0))) {
                x = trial;
                return normalized(x);
            }
            t *= 0.5;
        }
        return std::nullopt;
    }

    double lagrangian(const Polynomial& x) const { return functional_->value(x) / p_ - objective(x); }

    const Polynomial& kn() const { return kn_; }
    double p() const { return p_; }

private:
    SpaceParams params_;
    int n_;
    double p_;
    Polynomial kn_;
    double kn_norm_ = 0.0;
    bool real_only_;
    std::vector<Coord> coords_;
    std::vector<double> gam_;
    std::unique_ptr<PowerFunctional> functional_;
};

bool has_imaginary_part(const Polynomial& f)
{
    return std::any_of(f.coeffs().begin(), f.coeffs().end(), [](const cplx& c) { return c.imag() != 0.0; });
}

} // namespace

ExtremalSolution solve_extremal(const Polynomial& k, const SpaceParams& params, int n, const SolverOptions& opts)
{
    if (n < 0) throw DomainError("degree n must be nonnegative");
    if (truncate(k, n).is_zero()) throw DomainError("kernel must have a nonzero coefficient of degree <= n");
    if (opts.real_coefficients && has_imaginary_part(truncate(k, n)))
        throw DomainError("real-coefficient restriction needs a kernel with real coefficients");

    const ExtremalProblem problem(k, params, n, opts);
    ExtremalState state = problem.normalized(problem.kn());
    int iterations = 1;
    auto done = [&] { return state.residual < opts.kkt_tol; };

    double step = 1.0;
    for (int i = 0; i < opts.warm_start_iterations && !done() && state.residual > opts.warm_start_tol &&
                    iterations < opts.max_iterations;
         ++i) {
        if (!problem.warm_step(state, step)) break;
        ++iterations;
    }

    Polynomial x = state.F * cplx{std::pow(std::max(state.value, 1e-300), 1.0 / (problem.p() - 1.0))};
    ExtremalState best = state;
    int stalls = 0;
    while (!done() && iterations < opts.max_iterations) {
        ++iterations;
        auto next = problem.newton_step(x);
        if (!next) {
            if (++stalls > 3) break;
            continue;
        }
        state = *next;
        if (state.residual < best.residual) best = state;
    }
    state = best;
    if (!(state.residual < opts.kkt_tol)) {
        throw ConvergenceError("extremal solve did not reach the KKT tolerance", state.F, state.value,
                               state.residual, iterations);
    }
    return {state.F, state.value, state.residual, iterations};
}

BestApproximation solve_best_approx(const Polynomial& f, const SpaceParams& params, int n, const SolverOptions& opts)
{
    if (n < 0) throw DomainError("degree n must be nonnegative");
    const int d = f.degree();
    if (d <= n) return {truncate(f, n), 0.0, 0.0, 0};

    if (params.p() == 2.0) {
        const auto g = monomial_norms_sq(d, params.alpha());
        std::vector<double> tail;
        for (int j = n + 1; j <= d; ++j) tail.push_back(std::norm(f[static_cast<std::size_t>(j)]) * g[j]);
        return {truncate(f, n), std::sqrt(pairwise_sum<double>(tail)), 0.0, 1};
    }

    // Minimize Phi(r) over the low coefficients of the remainder r = f - P.
    const auto functional = make_functional(params, d, opts);
    const auto coords = make_coords(n, false);
    const auto gam = monomial_norms_sq(n, params.alpha());
    const double p = params.p();
    Polynomial r = f;
    for (int j = 0; j <= n; ++j) r = r - Polynomial::monomial(static_cast<std::size_t>(j), f[static_cast<std::size_t>(j)]);
    r = r.resized(f.size());

    auto residual_of = [&](const Polynomial& rr, double phi) {
        const auto K = functional->kernel(rr, n);
        return euclid(K) / std::pow(phi, (p - 1.0) / p);
    };

    double phi = functional->value(r);
    double res = residual_of(r, phi);
    int iterations = 1;
    const double tol = std::min(opts.kkt_tol, 1e-9);
    int stalls = 0;
    while (res > tol && iterations < opts.max_iterations && stalls <= 3) {
        ++iterations;
        const auto K = functional->kernel(r, n);
        const auto dim = static_cast<Eigen::Index>(coords.size());
        Eigen::VectorXd grad(dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            const Coord c = coords[i];
            const cplx kj = K[static_cast<std::size_t>(c.j)];
            grad[i] = p * gam[c.j] * (c.imag ? kj.imag() : kj.real());
        }
        const Eigen::VectorXd dir = newton_direction(functional->hessian(r, coords), grad);
        const Eigen::VectorXd x0 = to_vector(r, coords);
        const double slope = grad.dot(dir);
        double t = 1.0;
        bool accepted = false;
        for (int tries = 0; tries < 60; ++tries) {
            const Polynomial trial = from_vector(x0 + t * dir, coords, r);
            const double v = functional->value(trial);
            if (v <= phi + 1e-4 * t * slope || (tries > 0 && std::abs(v - phi) <= 1e-15 * phi)) {
                r = trial;
                phi = v;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            ++stalls;
            continue;
        }
        res = residual_of(r, phi);
    }
    Polynomial P = truncate(f - r, n);
    const double err = std::pow(phi, 1.0 / p);
    if (!(res <= tol)) throw ConvergenceError("best approximation did not converge", P, err, res, iterations);
    return {P, err, res, iterations};
}

double kkt_angle(const Polynomial& F, const Polynomial& k, const SpaceParams& params, int n)
{
    const Polynomial K = truncate(nonlinear_kernel(F, params), n);
    const Polynomial kn = truncate(k, n);
    double dot = 0.0, a = 0.0, b = 0.0;
    for (int j = 0; j <= n; ++j) {
        const cplx x = K[static_cast<std::size_t>(j)];
        const cplx y = kn[static_cast<std::size_t>(j)];
        dot += std::real(x * std::conj(y));
        a += std::norm(x);
        b += std::norm(y);
    }
    // Distance of K from the line through k, which stays accurate at tiny angles.
    double perp = 0.0;
    for (int j = 0; j <= n; ++j) {
        const cplx r = K[static_cast<std::size_t>(j)] - (dot / b) * kn[static_cast<std::size_t>(j)];
        perp += std::norm(r);
    }
    return std::atan2(std::sqrt(perp), dot / std::sqrt(b));
}

} // namespace bergex
