#include "bergex/errors.hpp"
#include "bergex/jackson.hpp"
#include "bergex/solver.hpp"
#include "support.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>

using namespace bergex;

// Reference values from tests/oracles/jackson_constants.py (closed forms in
// Si/Ci, mpmath where doubles cancel).
namespace {
constexpr double C_ref[] = {1.435991123225, 0.874357262312, 0.417694582431, 0.273486200023};
constexpr std::pair<double, double> A_ref[] = {{0.05, 1.4726535619669}, {0.25, 1.7150572092157},
                                               {0.5, 2.3886292429983},  {0.75, 4.5013771973928},
                                               {0.95, 21.379788736631}};
} // namespace

TEST_CASE("A_beta")
{
    double prev = 0.0;
    for (const auto& [beta, ref] : A_ref) {
        const auto a = const_A_beta(beta);
        CHECK(std::abs(a.value - ref) < 1e-10 * ref);
        CHECK(a.error < 1e-8);
        CHECK(a.value > prev);
        prev = a.value;
    }
    CHECK_THROWS_AS(const_A_beta(0.0), DomainError);
    CHECK_THROWS_AS(const_A_beta(1.0), DomainError);
}

TEST_CASE("iterated tail kernels")
{
    const auto& table = [] () -> const TailKernels& { static const TailKernels t; return t; }();
    CHECK(table(0, 0.0) == 0.75);
    CHECK(std::abs(table(0, 1e-4) - 0.75) < 1e-8);
    // closed forms: H_1 = [f_1 - f_2]/2 with f_a = cos(at)/t + a si(at), and so on
    CHECK(std::abs(table(1, 1.0) - 0.1312512929859859) < 1e-12);
    CHECK(std::abs(table(2, 1.0) - -0.08846284004903748) < 1e-12);
    CHECK(std::abs(table(3, 1.0) - -0.07386837429271938) < 1e-12);
    CHECK(std::abs(table(1, 700.0) - -1.0235708481354244e-06) < 1e-15);
    CHECK(std::abs(table(3, 5000.0) - -1.900040489308137e-08) < 1e-16);
    // continuity across the switch to the asymptotic expansion
    const double T = 200.0 * std::numbers::pi;
    for (int K = 1; K <= 3; ++K) CHECK(std::abs(table(K, std::nextafter(T, 0.0)) - table(K, T)) < 1e-14);
    CHECK_THROWS_AS(table(4, 1.0), UnsupportedExponentError);
    CHECK_THROWS_AS(table(1, -1.0), DomainError);
}

TEST_CASE("C_K")
{
    for (int K = 0; K <= 3; ++K) {
        const auto c = const_C_K(K);
        CHECK(std::abs(c.value - C_ref[K]) < 1e-7);
        CHECK(c.error < 1e-7);
    }
    CHECK_THROWS_AS(const_C_K(4), UnsupportedExponentError);

    TailKernelOptions coarse;
    coarse.panel_width = std::numbers::pi / 5.0;
    coarse.nodes_per_panel = 23;
    coarse.far_cutoff = 2.0 * std::numbers::pi * 3000.0;
    const TailKernels other(coarse);
    CHECK(std::abs(other.C(1).value - const_C_K(1).value) < 1e-6);
}

TEST_CASE("derived Jackson constants")
{
    const auto c = jackson_constants(0.5);
    REQUIRE(c.A_beta);
    CHECK(std::abs(c.A_beta->value - 2.3886292429983) < 1e-10);
    const double pi = std::numbers::pi;
    for (int K = 0; K <= 2; ++K)
        CHECK(c.B[K] == doctest::Approx(std::pow(2.0, K) * (c.C[K + 1].value / pi + c.C[K].value)));
    for (int K = 0; K <= 1; ++K)
        CHECK(c.Btilde[K] == doctest::Approx(std::pow(2.0, K) * (c.C[K + 2].value / pi + pi * c.C[K].value)));
    CHECK_FALSE(jackson_constants().A_beta.has_value());
}

TEST_CASE("Cesàro and de la Vallée Poussin means")
{
    CHECK(cesaro(Polynomial{1.0}, 4) == Polynomial{1.0, 0.0, 0.0, 0.0, 0.0});
    CHECK(cesaro(Polynomial{0.0, 1.0}, 1) == Polynomial{0.0, 0.5});
    CHECK(cesaro(Polynomial{2.0}, 0) == Polynomial{2.0});
    CHECK(vallee_poussin(Polynomial::monomial(6), 3).is_zero());

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 10);
        const auto f = test::random_polynomial(rng, m - 1);
        CHECK(vallee_poussin(f, m).resized(f.size()) == f);
    }
    CHECK_THROWS_AS(vallee_poussin(Polynomial{1.0}, 0), DomainError);
    CHECK_THROWS_AS(cesaro(Polynomial{1.0}, -1), DomainError);
}

TEST_CASE("modulus of continuity")
{
    const auto sp = SpaceParams::make(2.0, -0.5);
    const DiskRule rule = default_rule(-0.5, 12);
    CHECK(modulus(Polynomial{3.0}, 1.0, sp, rule) < 1e-15);
    for (double d : {0.2, 1.0, 3.0})
        CHECK(std::abs(modulus(Polynomial{0.0, 1.0}, d, sp, rule) - 2.0 * std::sin(d / 2.0) * std::sqrt(2.0 / 3.0)) <
              1e-12);
    std::mt19937_64 rng(41);
    const auto s4 = SpaceParams::make(4.0, 0.0);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = test::random_polynomial(rng, 10);
        CHECK(modulus(f, 0.8, s4, rule, 128) <= 2.0 * modulus(f, 0.4, s4, rule, 64) + 1e-12);
    }
}

TEST_CASE("Lambda* estimates")
{
    const auto sp = SpaceParams::make(4.0 / 3.0, -0.5);
    const DiskRule rule = default_rule(-0.5, 8);
    const auto c = lambda_star_estimate(Polynomial{2.0}, 2.0, sp, rule);
    CHECK(c.lower < 1e-14);
    REQUIRE(c.upper);
    CHECK(*c.upper < 1e-14);

    const auto z = lambda_star_estimate(Polynomial{0.0, 1.0}, 2.0, sp, rule);
    CHECK(std::abs(*z.upper - 1.0) < 1e-3);
    const auto khat = lambda_star_estimate(test::example_kernel() * cplx(0.559332), 2.0, sp, rule);
    CHECK(std::abs(*khat.upper - 5.034) < 1e-3);
    CHECK(khat.lower <= *khat.upper);
    CHECK_FALSE(lambda_star_estimate(Polynomial{0.0, 1.0}, 0.5, sp, rule).upper);
}

TEST_CASE("bound kinds")
{
    CHECK(parse_bound_kind("modulus_K") == BoundKind::modulus_K);
    CHECK_THROWS_AS(parse_bound_kind("nope"), DomainError);
    const auto c = jackson_constants(0.5);
    CHECK(jackson_bound(BoundKind::lambda_star_beta, {0.0, 0, 0.5}, 7, c) == 0.0);
    CHECK(jackson_bound(BoundKind::derivative_K, {2.0, 0, 0.5}, 1, c) ==
          jackson_bound(BoundKind::derivative_K, {2.0, 0, 0.5}, 50, c));
    CHECK(jackson_bound(BoundKind::derivative_K, {2.0, 0, 0.5}, 3, c) == doctest::Approx(2.0 * c.C[0].value));
    CHECK_THROWS_AS(jackson_bound(BoundKind::modulus_K, {1.0, 3, 0.5}, 3, c), UnsupportedExponentError);
    CHECK_THROWS_AS(jackson_bound(BoundKind::derivative_K, {1.0, 0, 0.5}, 0, c), DomainError);
}
