#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ortho/maximizer.hpp"
#include "ortho/quadrature.hpp"
#include "ortho/schlafli.hpp"
#include "ortho/volume.hpp"
#include "support/oracles.hpp"

using namespace ortho;

namespace {
constexpr double kPi4 = std::numbers::pi / 4.0;
}

TEST_CASE("adaptive quadrature sanity") {
    const auto sq = [](double x) { return x * x; };
    CHECK(integrate_adaptive(sq, 0.0, 1.0, 1e-12).value ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    const auto inv_sqrt = [](double x) { return 1.0 / std::sqrt(x); };
    CHECK(integrate_adaptive(inv_sqrt, 0.0, 1.0, 1e-10).value ==
          doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("schlafli volumes against independent high-precision values") {
    CHECK(volume_schlafli({2.0, 0.5, kPi4}).value ==
          doctest::Approx(0.033169733237661441).epsilon(1e-7));
    CHECK(volume_schlafli({2.0, 2.0, 1.3}).value ==
          doctest::Approx(0.15427383359104996).epsilon(1e-7));
    CHECK(volume_schlafli({1.5, 1.0, kPi4}).value ==
          doctest::Approx(0.31346002614607719).epsilon(1e-7));
    CHECK(volume_schlafli({1.05, 1.5, 1.0}).value ==
          doctest::Approx(0.41611798362358429).epsilon(1e-7));
}

TEST_CASE("estimate metadata") {
    const VolumeEstimate est = volume_schlafli({2.0, 0.5, kPi4});
    CHECK(est.method == VolumeMethod::SchlafliIntegral);
    CHECK(est.tail_bound <= 1e-9);
    CHECK(est.tail_cutoff > 8.0);
    CHECK(est.error < 1e-7);
    CHECK(est.count > 0);
    CHECK_THROWS_AS(volume_schlafli({0.9, 0.5, kPi4}), regime_error);
}

TEST_CASE("volume decreases to zero far out") {
    const double v120 = volume_schlafli({120.0, 2.0, 1.3}).value;
    const double v300 = volume_schlafli({300.0, 2.0, 1.3}).value;
    const double v800 = volume_schlafli({800.0, 2.0, 1.3}).value;
    CHECK(v120 > v300);
    CHECK(v300 > v800);
    CHECK(v800 > 0.0);
    CHECK(v800 < 5e-3);
}

TEST_CASE("volume is continuous across the lambert threshold") {
    const double b = lambert_threshold(2.0);
    const double lo = volume_schlafli({b - 1e-7, 2.0, 1.3}).value;
    const double hi = volume_schlafli({b + 1e-7, 2.0, 1.3}).value;
    CHECK(std::fabs(lo - hi) < 1e-6);
}

TEST_CASE("volume ranking is consistent with the maximizer") {
    const MaximizerResult m = find_max(0.5, kPi4);
    REQUIRE(m.h_star < 2.0);
    CHECK(volume_schlafli({2.0, 0.5, kPi4}).value >
          volume_schlafli({4.0, 0.5, kPi4}).value);
    CHECK(volume_schlafli({m.h_star, 0.5, kPi4}).value >
          volume_schlafli({2.0, 0.5, kPi4}).value);
}

TEST_CASE("derivative of the integral matches dV/dh") {
    for (double h : {1.5, 2.0, 3.0, 1.3, 4.5}) {
        const OrthoschemeParams p{h, 0.5, kPi4};
        const auto vol = [&](double hh) {
            return volume_schlafli({hh, p.r, p.theta}, 1e-12).value;
        };
        const double fd = testsup::central_diff(vol, h, 1e-4);
        CHECK(testsup::rel_err(fd, dV_dh(p).dV_dh) < 1e-6);
    }
}

TEST_CASE("monte carlo agrees with the schlafli route") {
    const VolumeEstimate mc = volume_montecarlo({2.0, 0.5, kPi4}, 1000000, 42);
    const double vs = volume_schlafli({2.0, 0.5, kPi4}).value;
    CHECK(std::fabs(mc.value - vs) <= 3.0 * mc.error);
    const VolumeEstimate mc2 = volume_montecarlo({2.0, 2.0, 1.3}, 1000000, 43);
    const double vs2 = volume_schlafli({2.0, 2.0, 1.3}).value;
    CHECK(std::fabs(mc2.value - vs2) <= 3.0 * mc2.error);
}

TEST_CASE("monte carlo covers the compact range the integral rejects") {
    const VolumeEstimate lo = volume_montecarlo({0.5, 0.5, kPi4}, 400000, 7);
    const VolumeEstimate hi = volume_montecarlo({0.9, 0.5, kPi4}, 400000, 7);
    CHECK(lo.value + 3.0 * (lo.error + hi.error) < hi.value);
    CHECK(lo.value > 0.0);
}

TEST_CASE("monte carlo determinism") {
    const VolumeEstimate a = volume_montecarlo({2.0, 0.5, kPi4}, 200000, 99);
    const VolumeEstimate b = volume_montecarlo({2.0, 0.5, kPi4}, 200000, 99);
    CHECK(a.value == b.value);
    CHECK(a.error == b.error);
    const VolumeEstimate c = volume_montecarlo({2.0, 0.5, kPi4}, 200000, 99, 4);
    CHECK(c.value == a.value);
    CHECK(c.error == a.error);
    const VolumeEstimate d = volume_montecarlo({2.0, 0.5, kPi4}, 200000, 100);
    CHECK(d.value != a.value);
}

TEST_CASE("monte carlo rejects ideal configurations") {
    CHECK_THROWS_AS(volume_montecarlo({2.0, 1.0, kPi4}, 1000, 1), regime_error);
    CHECK_THROWS_AS(volume_montecarlo({1.0, 0.5, kPi4}, 1000, 1), regime_error);
    CHECK_THROWS_AS(volume_montecarlo({lambert_threshold(2.0), 2.0, 1.3}, 1000, 1),
                    regime_error);
}

TEST_CASE("monte carlo flags a polytope below sampling resolution") {
    CHECK_THROWS_WITH_AS(volume_montecarlo({1e6, 2.0, 1.3}, 50, 12345),
                         doctest::Contains("degenerate"), regime_error);
}

TEST_CASE("far-out truncated polytope has nearly no volume") {
    const VolumeEstimate est = volume_montecarlo({50.0, 2.0, 1.3}, 2000000, 5);
    const double vs = volume_schlafli({50.0, 2.0, 1.3}).value;
    CHECK(std::fabs(est.value - vs) <= 3.0 * est.error);
    CHECK(est.value < 0.02);
}

TEST_CASE("sweep rows and regime transitions") {
    {
        std::vector<double> grid;
        for (int i = 0; i < 9; ++i) grid.push_back(0.9 + i * 0.05);
        const auto rows = sweep(0.5, kPi4, grid, 50000, 3);
        REQUIRE(rows.size() == grid.size());
        CHECK(rows.front().regime == CombinatorialType::OrdinaryOrthoscheme);
        CHECK(rows.back().regime == CombinatorialType::SimpleFrustum);
        CHECK(rows.front().method == "montecarlo");
        CHECK(rows.back().method == "schlafli");
        CHECK(std::isnan(rows.front().dv_dh));
        for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].h > rows[i - 1].h);
        int changes = 0;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i].regime != rows[i - 1].regime) ++changes;
        CHECK(changes <= 2);
    }
    {
        std::vector<double> grid{1.05, 1.1, 1.2, 1.5, 2.0};
        const auto rows = sweep(2.0, 1.3, grid, 50000, 3);
        CHECK(rows.front().regime == CombinatorialType::DoubleFrustum);
        CHECK(rows.back().regime == CombinatorialType::LambertCube);
    }
}

TEST_CASE("fine sweep peaks within one step of the maximizer") {
    const MaximizerResult m = find_max(0.5, kPi4);
    std::vector<double> grid;
    const int n = 301;
    for (int i = 0; i < n; ++i) grid.push_back(1.1 + i * (1.4 - 1.1) / (n - 1));
    const auto rows = sweep(0.5, kPi4, grid, 1000, 3);
    std::size_t best = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].volume > rows[best].volume) best = i;
    CHECK(std::fabs(rows[best].h - m.h_star) <= grid[1] - grid[0]);
}

TEST_CASE("sweep records row-level failures and continues") {
    // r = 1 below the ideal apex: no analytic route, no Monte-Carlo route
    std::vector<double> grid{0.5, 2.0};
    const auto rows = sweep(1.0, 0.9, grid, 10000, 3);
    CHECK(rows[0].method == "none");
    CHECK_FALSE(rows[0].note.empty());
    CHECK(rows[1].method == "schlafli");
    CHECK(std::isfinite(rows[1].volume));
}

TEST_CASE("sweep validates its grid") {
    CHECK_THROWS_AS(sweep(0.5, kPi4, {}, 100, 1), domain_error);
    CHECK_THROWS_AS(sweep(0.5, kPi4, {1.0, 1.0}, 100, 1), domain_error);
    CHECK_THROWS_AS(sweep(0.5, kPi4, {2.0, 1.0}, 100, 1), domain_error);
}
