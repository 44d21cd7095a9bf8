#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ortho/maximizer.hpp"
#include "ortho/schlafli.hpp"
#include "support/oracles.hpp"

using namespace ortho;

namespace {
constexpr double kPi = std::numbers::pi;

double dvdh_at(double r, double theta, double h) { return dV_dh({h, r, theta}).dV_dh; }
} // namespace

TEST_CASE("closed-form maximizer for the ideal-v0 family") {
    {
        const MaximizerResult m = find_max(1.0, kPi / 4.0);
        CHECK(m.h_star == doctest::Approx(1.7320508075688773).epsilon(1e-13));
        CHECK(std::fabs(m.residual) <= 1e-12);
        CHECK(m.regime_at_max == CombinatorialType::SimpleFrustumIdealV0);
        CHECK(m.bracket_lo < m.h_star);
        CHECK(m.h_star < m.bracket_hi);
    }
    CHECK(find_max(1.0, kPi / 6.0).h_star ==
          doctest::Approx(2.2360679774997897).epsilon(1e-13));
    CHECK(find_max(1.0, kPi / 3.0).h_star ==
          doctest::Approx(1.5275252316519467).epsilon(1e-13));
}

TEST_CASE("bisection agrees with the closed form at r = 1") {
    for (double theta : {kPi / 6.0, kPi / 4.0, kPi / 3.0, 1.3}) {
        const MaximizerResult m = detail::bisect_root_equation(1.0, theta);
        const double s = std::sin(theta);
        CHECK(std::fabs(m.h_star - std::sqrt(1.0 + 1.0 / (s * s))) < 1e-10);
    }
}

TEST_CASE("r < 1 maximizer against an independent high-precision root") {
    const MaximizerResult m = find_max(0.5, kPi / 4.0);
    CHECK(m.h_star == doctest::Approx(1.2361337823522844).epsilon(1e-10));
    CHECK(std::fabs(m.residual) <= 1e-12);
    CHECK(m.regime_at_max == CombinatorialType::SimpleFrustum);
    CHECK_FALSE(m.boundary_max);
}

TEST_CASE("r > 1 with an interior root") {
    const MaximizerResult m = find_max(1.05, 0.8);
    CHECK(m.h_star == doctest::Approx(2.1568865175129867).epsilon(1e-9));
    CHECK_FALSE(m.boundary_max);
    CHECK(m.regime_at_max == CombinatorialType::DoubleFrustum);
    CHECK(m.h_star < lambert_threshold(1.05));
}

TEST_CASE("r > 1 with the maximum at the ideal-vertex boundary") {
    const MaximizerResult m = find_max(2.0, 1.3);
    CHECK(m.boundary_max);
    CHECK(m.h_star == doctest::Approx(lambert_threshold(2.0)).epsilon(1e-14));
    CHECK(m.regime_at_max == CombinatorialType::DoubleFrustumIdealVertex);
    CHECK(m.residual == 0.0);
    CHECK(dvdh_at(2.0, 1.3, m.h_star - 1e-6) > 0.0);
    CHECK(dvdh_at(2.0, 1.3, m.h_star + 1e-6) < 0.0);
}

TEST_CASE("the maximum is a genuine sign change of dV/dh") {
    std::mt19937_64 g(19);
    for (int i = 0; i < 25; ++i) {
        const OrthoschemeParams p = testsup::random_params(g, 2.0, 2.0, 0.15, 2.6);
        const MaximizerResult m = find_max(p.r, p.theta);
        CHECK(m.h_star > 1.0);
        CHECK(m.regime_at_max != CombinatorialType::LambertCube);
        CHECK(dvdh_at(p.r, p.theta, m.h_star - 1e-6) > 0.0);
        CHECK(dvdh_at(p.r, p.theta, m.h_star + 1e-6) < 0.0);
        if (p.r > 1.0 + kClassEps)
            CHECK(m.h_star <= lambert_threshold(p.r) + 1e-9);
    }
}

TEST_CASE("h*(r) varies continuously along r grids") {
    // |dh*/dr| stays below ~1.2 at theta = pi/4, so 1e-3 steps move h* by
    // roughly 1.2e-3; 5e-3 is a jump, not continuous drift.
    const double theta = kPi / 4.0;
    double prev = find_max(0.4, theta).h_star;
    for (int i = 1; i <= 100; ++i) {
        const double r = 0.4 + i * 1e-3;
        const double cur = find_max(r, theta).h_star;
        CHECK(std::fabs(cur - prev) < 5e-3);
        prev = cur;
    }
    prev = find_max(1.05, theta).h_star;
    for (int i = 1; i <= 100; ++i) {
        const double r = 1.05 + i * 1e-3;
        const double cur = find_max(r, theta).h_star;
        CHECK(std::fabs(cur - prev) < 5e-3);
        prev = cur;
    }
}

TEST_CASE("uniqueness scans") {
    {
        const UniquenessReport u = verify_uniqueness(0.5, kPi / 4.0, 10000);
        CHECK(u.ok);
        CHECK(u.total_changes == 1);
        CHECK_FALSE(u.boundary_sign_change);
    }
    {
        const UniquenessReport u = verify_uniqueness(2.0, 1.3, 10000);
        CHECK(u.ok);
        CHECK(u.boundary_sign_change); // maximum sits at the threshold here
        CHECK(u.g_sign_changes <= 1);
    }
    {
        const UniquenessReport u = verify_uniqueness(1.05, 0.8, 10000);
        CHECK(u.ok);
        CHECK(u.sign_changes == 1);
    }
    {
        const UniquenessReport u = verify_uniqueness(1.0, kPi / 3.0, 10000);
        CHECK(u.ok);
        CHECK(u.total_changes == 1);
    }
}

TEST_CASE("strict decrease on the lambert range") {
    const LambertDecreaseReport a = verify_lambert_decrease(2.0, 1.3, 100);
    CHECK(a.ok);
    CHECK(a.violations == 0);
    CHECK(a.max_dv_dh < 0.0);
    CHECK(verify_lambert_decrease(1.1, 0.5, 100).ok);
    CHECK_THROWS_AS(verify_lambert_decrease(0.5, 0.5, 100), domain_error);

    // just past the threshold l03 is small, dtheta12/dh large, and the
    // l01 dtheta23/dh term makes the sum negative
    const double b = lambert_threshold(2.0);
    const DerivativeReport rep = dV_dh({b * (1.0 + 1e-6), 2.0, 1.3});
    CHECK(rep.l03 > 0.0);
    CHECK(rep.l03 < 1e-2);
    CHECK(rep.dtheta12_dh > 1.0);
    CHECK(rep.dV_dh < 0.0);
}
