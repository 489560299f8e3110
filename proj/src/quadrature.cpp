#include "bergex/quadrature.hpp"

#include "bergex/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

namespace bergex {

namespace {

// Gauss rule for (alpha+1)(1-s)^alpha ds on [0,1] via the symmetric Jacobi
// matrix of the weight (1-x)^alpha on [-1,1]; weights come out normalized.
std::vector<RadialNode> gauss_jacobi_radial(double a, std::size_t n)
{
    Eigen::VectorXd diag(static_cast<Eigen::Index>(n));
    Eigen::VectorXd sub(static_cast<Eigen::Index>(n > 1 ? n - 1 : 1));
    const double b = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double s = 2.0 * kk + a + b;
        diag[static_cast<Eigen::Index>(k)] =
            k == 0 ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
        if (k + 1 < n) {
            const double m = kk + 1.0;
            const double t = 2.0 * m + a + b;
            const double beta = 4.0 * m * (m + a) * (m + b) * (m + a + b) / (t * t * (t + 1.0) * (t - 1.0));
            sub[static_cast<Eigen::Index>(k)] = std::sqrt(beta);
        }
    }
    std::vector<RadialNode> out(n);
    if (n == 1) {
        const double x = diag[0];
        out[0] = {std::sqrt(0.5 * (1.0 + x)), 1.0};
        return out;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
    eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const auto& x = eig.eigenvalues();
    const auto& v = eig.eigenvectors();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        const double w = v(0, ii) * v(0, ii);
        out[i] = {std::sqrt(std::clamp(0.5 * (1.0 + x[ii]), 0.0, 1.0)), w};
        total += w;
    }
    for (auto& node : out) node.w /= total;
    std::sort(out.begin(), out.end(), [](const RadialNode& l, const RadialNode& r) { return l.r < r.r; });
    return out;
}

} // namespace

DiskRule build_rule(double alpha, std::size_t n_radial, std::size_t n_angular)
{
    if (!(alpha > -1.0)) throw DomainError("disk rule needs alpha > -1");
    if (n_radial < 1) throw DomainError("disk rule needs at least one radial node");
    if (n_angular < 4) throw DomainError("disk rule needs at least four angular nodes");
    DiskRule rule;
    rule.alpha = alpha;
    rule.radial = gauss_jacobi_radial(alpha, n_radial);
    rule.angular_count = n_angular;
    return rule;
}

DiskRule default_rule(double alpha, int degree)
{
    const int d = std::max(degree, 0);
    return build_rule(alpha, static_cast<std::size_t>(std::max(40, d + 5)),
                      static_cast<std::size_t>(std::max(128, 4 * d + 4)));
}

double norm_p(const Polynomial& f, double p, const DiskRule& rule)
{
    if (!(p > 0.0)) throw DomainError("norm_p needs p > 0");
    const double s = rule.integrate([&](cplx z) {
        const double m = std::abs(f(z));
        return m == 0.0 ? 0.0 : std::pow(m, p);
    });
    return std::pow(s, 1.0 / p);
}

double second_difference_norm(const Polynomial& f, double t, double p, const DiskRule& rule)
{
    Polynomial d = rotate(f, t) + rotate(f, -t);
    d -= 2.0 * f;
    return norm_p(d, p, rule);
}

} // namespace bergex
