#include "bergex/errors.hpp"
#include "bergex/quadrature.hpp"
#include "support.hpp"

#include "doctest.h"

#include <cmath>

using namespace bergex;

TEST_CASE("disk rule exactness")
{
    const DiskRule rule = build_rule(-0.5, 30, 64);
    CHECK(std::abs(rule.integrate([](cplx) { return 1.0; }) - 1.0) < 1e-14);
    CHECK(std::abs(rule.integrate([](cplx z) { return z.real(); })) < 1e-15);
    for (int n = 0; n <= 25; ++n) {
        const double got = rule.integrate([n](cplx z) { return std::pow(std::norm(z), n); });
        CHECK(std::abs(got - monomial_norm_sq(n, -0.5)) < 1e-13);
    }
    CHECK_THROWS_AS(build_rule(-1.0, 10, 16), DomainError);
    CHECK_THROWS_AS(build_rule(0.0, 0, 16), DomainError);
    CHECK_THROWS_AS(build_rule(0.0, 10, 2), DomainError);
}

TEST_CASE("default rule sizes")
{
    const DiskRule small = default_rule(0.0, 3);
    CHECK(small.radial.size() == 40);
    CHECK(small.angular_count == 128);
    const DiskRule big = default_rule(0.0, 50);
    CHECK(big.radial.size() == 55);
    CHECK(big.angular_count == 204);
}

TEST_CASE("quadrature norms")
{
    const DiskRule rule = default_rule(-0.5, 10);
    for (double p : {1.1, 4.0 / 3.0, 2.0, 3.7}) CHECK(std::abs(norm_p(Polynomial{1.0}, p, rule) - 1.0) < 1e-14);
    CHECK(std::abs(norm_p(Polynomial{0.0, 1.0}, 4.0, rule) - std::pow(8.0 / 15.0, 0.25)) < 1e-10);

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = test::random_polynomial(rng, 10);
        const auto g = test::random_polynomial(rng, 10);
        for (double p : {4.0 / 3.0, 2.5}) {
            const double nf = norm_p(f, p, rule);
            CHECK(std::abs(norm_p(f * cplx(-2.5, 1.0), p, rule) / (std::abs(cplx(-2.5, 1.0)) * nf) - 1.0) < 1e-12);
            CHECK(norm_p(f + g, p, rule) <= nf + norm_p(g, p, rule) + 1e-14);
        }
    }
}

TEST_CASE("refinement leaves exact-degree norms unchanged")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f2 = test::random_polynomial(rng, 40);
        const double a = norm_p(f2, 2.0, build_rule(0.5, 41, 128));
        const double b = norm_p(f2, 2.0, build_rule(0.5, 82, 256));
        CHECK(std::abs(a / b - 1.0) < 1e-12);
        const auto f4 = test::random_polynomial(rng, 20);
        const double c = norm_p(f4, 4.0, build_rule(-0.5, 41, 128));
        const double d = norm_p(f4, 4.0, build_rule(-0.5, 82, 256));
        CHECK(std::abs(c / d - 1.0) < 1e-12);
    }
}

TEST_CASE("second difference norm")
{
    const DiskRule rule = default_rule(-0.5, 4);
    CHECK(second_difference_norm(Polynomial{2.0}, 0.7, 4.0, rule) < 1e-15);
    CHECK(second_difference_norm(Polynomial{1.0, 2.0}, 0.0, 4.0, rule) < 1e-15);
    const double zn = norm_p(Polynomial{0.0, 1.0}, 3.0, rule);
    for (double t : {0.1, 1.0, 2.5})
        CHECK(std::abs(second_difference_norm(Polynomial{0.0, 1.0}, t, 3.0, rule) - 2.0 * (1.0 - std::cos(t)) * zn) <
              1e-13);
}
