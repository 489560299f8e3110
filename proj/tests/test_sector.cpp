#include "bergex/errors.hpp"
#include "bergex/sector.hpp"
#include "bergex/solver.hpp"
#include "support.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>

using namespace bergex;
constexpr double pi = std::numbers::pi;

TEST_CASE("sector constant")
{
    for (double theta : {0.0, 0.3, 2.0, 6.0}) CHECK(sector_constant(theta, 2.0, -0.5, 7.0) == 0.0);
    CHECK(std::abs(sector_constant(pi / 2, 4.0, -0.5, 3.0) - 6.0 * std::sin(pi / 12.0)) < 1e-14);
    CHECK(std::abs(sector_constant(pi / 2, 4.0, -0.5, 3.0) - 1.5529142706151244) < 1e-12);
    CHECK(sector_constant(1e-12, 4.0, -0.5, 3.0) < 1e-11);
    CHECK_THROWS_AS(sector_constant(2.0 * pi, 4.0, -0.5, 3.0), DomainError);
    CHECK_THROWS_AS(sector_constant(1.5, 1.2, -0.5, 3.0), DomainError);
    CHECK_THROWS_AS(sector_constant(0.5, 4.0, -0.5, 0.0), DomainError);

    for (double p : {1.5, 3.0, 4.0, 8.0})
        for (double a = 0.0; a < 1.2; a += 0.1) {
            const double b = a + 0.05;
            const double lip = 2.0 * 2.0 * 0.05 * std::abs(p - 2.0) / (4.0 * (p - 1.0));
            CHECK(std::abs(sector_constant(a, p, -0.5, 2.0) - sector_constant(b, p, -0.5, 2.0)) <= lip + 1e-15);
        }
}

TEST_CASE("sector distance bound")
{
    CHECK(sector_distance_bound(0.0, 4.0) == 0.0);
    CHECK(std::abs(sector_distance_bound(1e-4, 4.0) - 0.282842712474619) < 1e-14);
    CHECK(std::abs(sector_distance_bound(1e-4, 1.5) - 2.0 * std::sqrt(2.0) * std::sqrt(2.0) * 1e-2) < 1e-14);
    double prev = 0.0;
    for (double c = 1e-6; c < 10.0; c *= 2.0) {
        CHECK(sector_distance_bound(c, 3.0) > prev);
        prev = sector_distance_bound(c, 3.0);
    }
    CHECK_THROWS_AS(sector_distance_bound(1.0, 2.0), UnsupportedExponentError);
}

TEST_CASE("range in sector")
{
    const auto sp = test::example_params();
    const DiskRule rule = default_rule(-0.5, 4);
    CHECK(range_in_sector(Polynomial{1.0}, 0.1, 0.5, sp, rule).inside);
    CHECK(range_in_sector(Polynomial{1.0}, 0.0, 0.5, sp, rule).inside);
    CHECK_FALSE(range_in_sector(Polynomial{1.0}, 0.1, 1.01, sp, rule).inside);
    CHECK_FALSE(range_in_sector(Polynomial{0.0, 1.0}, 1.0, 1e-9, sp, rule).inside);

    const auto c = range_in_sector(Polynomial{2.0, 1.0}, pi / 2, 0.3, sp, rule, 128);
    CHECK(c.inside);
    // the largest argument of 2 + z on the closed disk is asin(1/2), attained on the circle
    CHECK(c.arg_margin >= pi / 4 - pi / 6 - 1e-12);
    CHECK(c.arg_margin <= pi / 4 - pi / 6 + 1e-3);
    const double scale = norm_p(Polynomial{2.0, 1.0}, sp.q(), rule);
    CHECK(std::abs(c.modulus_margin - (1.0 / scale - 0.3)) < 1e-12);
    CHECK_FALSE(range_in_sector(Polynomial{2.0, 1.0}, pi / 4, 0.3, sp, rule, 128).inside);
}

TEST_CASE("non-vanishing certificate")
{
    const auto sp = test::example_params();
    const DiskRule rule = default_rule(-0.5, 8);
    CHECK_THROWS_AS(nonvanishing_certificate(Polynomial{1.0}, 0.1, 0.5, SpaceParams::make(2.0, -0.5), 1.0, 0.0, rule),
                    UnsupportedExponentError);
    CHECK_THROWS_AS(nonvanishing_certificate(Polynomial{1.0}, 0.1, 0.5, SpaceParams::make(4.0, 0.5), 1.0, 0.0, rule),
                    HypothesisError);

    const auto flat = nonvanishing_certificate(Polynomial{1.0}, 0.0, 0.5, sp, 1.0, 0.0, rule);
    CHECK(flat.nonvanishing);
    CHECK(flat.eps_inf == 0.0);
    CHECK(flat.holder_D == 0.0);

    const Polynomial k{1.0, 0.05};
    CHECK_THROWS_AS(nonvanishing_certificate(k, 0.05, 0.5, sp, 1.0, 0.0, rule), HypothesisError);
    const auto weak = nonvanishing_certificate(k, 0.2, 0.5, sp, 1.0, 0.0, rule);
    CHECK_FALSE(weak.nonvanishing);
    CHECK(weak.eps_inf > weak.lambda);
    CHECK(weak.C_theta == doctest::Approx(2.0 * std::sin(2.0 * 0.2 / 12.0)));
    CHECK(weak.holder_D > 0.0);
    CHECK(weak.beta == 0.125);
}

TEST_CASE("certificate monotone in theta and d")
{
    const auto sp = test::example_params();
    const DiskRule rule = default_rule(-0.5, 8);
    const Polynomial k{1.0, 0.05};
    const double tiny_projection_norm = 1e-80;
    const double thetas[] = {0.11, 0.3, 1.0, 2.5};
    const double ds[] = {0.2, 0.5, 0.8, 0.9};
    bool any_true = false, any_false = false;
    bool result[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            result[i][j] = nonvanishing_certificate(k, thetas[i], ds[j], sp, tiny_projection_norm, 0.0, rule).nonvanishing;
            any_true |= result[i][j];
            any_false |= !result[i][j];
        }
    CHECK(any_true);
    CHECK(any_false);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (!result[i][j]) continue;
            if (i > 0) CHECK(result[i - 1][j]);
            if (j < 3) CHECK(result[i][j + 1]);
        }

    const auto theta = find_certifying_theta(k, 0.9, sp, tiny_projection_norm, 0.0, rule);
    REQUIRE(theta);
    CHECK(*theta > 0.3);
    CHECK(*theta < 1.0);
    CHECK(nonvanishing_certificate(k, 0.999 * *theta, 0.9, sp, tiny_projection_norm, 0.0, rule).nonvanishing);
    if (*theta < 0.99 * 2.0 * pi)
        CHECK_FALSE(nonvanishing_certificate(k, std::min(1.01 * *theta, 6.28), 0.9, sp, tiny_projection_norm, 0.0, rule)
                        .nonvanishing);
    CHECK_FALSE(find_certifying_theta(k, 0.9, sp, 1.0, 0.0, rule).has_value());

    // consistency smoke test: a converged extremal polynomial stays away from zero
    const auto sol = solve_extremal(k, sp, 15);
    double min_mod = 1e300;
    for (int i = 0; i <= 60; ++i)
        for (int m = 0; m < 240; ++m) min_mod = std::min(min_mod, std::abs(sol.F(std::polar(i / 60.0, 2.0 * pi * m / 240))));
    CHECK(min_mod > 0.0);
}
