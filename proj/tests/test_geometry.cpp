#include <cmath>
#include <numbers>

#include "doctest.h"

#include "pball/geometry.hpp"
#include "test_util.hpp"

using namespace pball;

namespace {
const double kPi = std::numbers::pi;
const Exponent kInf = Exponent::inf();

double rel_err(double value, double truth) { return std::abs(value / truth - 1.0); }
}  // namespace

TEST_CASE("area is half the parameter") {
    const auto g3 = build_grid(Exponent(3.0), Exponent(3.0), 10000);
    CHECK(area_at(g3, 0.0) == 0.0);
    CHECK(area_at(g3, g3.t.back()) == doctest::Approx(g3.pi_p / 4.0).epsilon(1e-15));
    const auto g2 = build_grid(Exponent(2.0), Exponent(2.0), 100000);
    CHECK(std::abs(area_at(g2, g2.t.back()) - kPi / 4.0) < 1e-6);
    CHECK_THROWS_AS(area_at(g3, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(area_at(g3, g3.t.back() + 0.1), std::invalid_argument);
}

TEST_CASE("boundary-integral area route agrees and has slope 1/2") {
    for (double pv : {1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()}) {
        const Exponent p(pv);
        const auto g = build_grid(p, Exponent(2.0), 100000);
        const auto area = area_integral_knots(g);
        CAPTURE(pv);

        double worst_val = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
            worst_val = std::max(worst_val, std::abs(area[i] - 0.5 * g.t[i]));
        CHECK(worst_val < 1e-6);

        // finite-difference slope away from the first/last 0.1% of the span;
        // differences span at least 1e-6 in t so ulp-scale knot steps near
        // the curve midpoint do not drown the quotient in rounding
        const double lo = 0.001 * g.t.back(), hi = 0.999 * g.t.back();
        double worst_slope = 0.0;
        std::size_t i = 0;
        for (std::size_t j = 1; j < g.size(); ++j) {
            if (g.t[j] - g.t[i] < 1e-6) continue;
            if (g.t[i] >= lo && g.t[j] <= hi) {
                const double slope = (area[j] - area[i]) / (g.t[j] - g.t[i]);
                worst_slope = std::max(worst_slope, std::abs(slope - 0.5));
            }
            i = j;
        }
        CHECK(worst_slope < 1e-4);
    }
}

TEST_CASE("cumulative q-length anchors") {
    const auto g22 = build_grid(Exponent(2.0), Exponent(2.0), 100000);
    CHECK(std::abs(length_at(g22, g22.t.back()) - kPi / 2.0) < 1e-6);

    const auto g12 = build_grid(Exponent(1.0), Exponent(2.0), 100000);
    CHECK(std::abs(length_at(g12, g12.t.back()) - std::sqrt(2.0)) < 1e-6);

    const auto g11 = build_grid(Exponent(1.0), Exponent(1.0), 100000);
    CHECK(std::abs(length_at(g11, g11.t.back()) - 2.0) < 1e-6);

    CHECK_THROWS_AS(length_at(g22, -0.5), std::invalid_argument);
}

TEST_CASE("relative length equals relative area exactly on {1,2,inf}") {
    const std::pair<double, double> equality_cases[] = {
        {1.0, 1.0},
        {1.0, 2.0},
        {2.0, 2.0},
        {std::numeric_limits<double>::infinity(), 2.0},
        {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()}};
    for (auto [pv, qv] : equality_cases) {
        const auto curve = rel_diff_curve(Exponent(pv), Exponent(qv), 4096);
        CAPTURE(pv);
        CAPTURE(qv);
        CHECK(curve.max_abs_diff <= 1e-7);
        CHECK(curve.diff.front() == 0.0);
        CHECK(curve.diff.back() == 0.0);
    }
}

TEST_CASE("relative length separates from relative area off {1,2,inf}") {
    const std::pair<const char*, const char*> strict_cases[] = {
        {"1.5", "1.5"}, {"3", "3"}, {"4", "4"}, {"4", "2"}};
    for (auto [ps, qs] : strict_cases) {
        const double frozen = testutil::rel_diff_threshold(ps, qs);
        REQUIRE(frozen > 1e-3);
        const auto curve = rel_diff_curve(Exponent::parse(ps), Exponent::parse(qs), 4096);
        CAPTURE(ps);
        CAPTURE(qs);
        // 1e-6 covers the gap between this resolution and the frozen oracle run
        CHECK(curve.max_abs_diff >= frozen - 1e-6);
        CHECK(std::abs(curve.max_abs_diff - frozen) < 1e-6);
    }
}

TEST_CASE("rel_diff_curve validates resolution") {
    const auto g = build_grid(Exponent(2.0), Exponent(2.0), 10000);
    CHECK_THROWS_AS(rel_diff_curve(g, 99), std::invalid_argument);
}

TEST_CASE("ball volume anchors") {
    CHECK(rel_err(ball_volume(Exponent(2.0), 3), 4.0 * kPi / 3.0) < 1e-4);
    CHECK(rel_err(ball_volume(Exponent(1.0), 4), 2.0 / 3.0) < 1e-4);
    CHECK(rel_err(ball_volume(kInf, 5), 32.0) < 1e-6);
    const double oracle15 = ball_volume_gamma(Exponent(1.5), 3);
    CHECK(rel_err(ball_volume(Exponent(1.5), 3), oracle15) < 1e-4);
    CHECK(ball_volume(Exponent(3.0), 1) == 2.0);
    const auto g = build_grid(Exponent(2.0), Exponent(2.0), 10000);
    CHECK_THROWS_AS(ball_volume(g, 0), std::invalid_argument);
}

TEST_CASE("ball volume tracks the gamma closed form") {
    for (double pv : {0.5, 1.0, 1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()}) {
        const Exponent p(pv);
        const auto g = build_grid(p, Exponent(2.0), 100000);
        for (int n = 2; n <= 6; ++n) {
            CAPTURE(pv);
            CAPTURE(n);
            CHECK(rel_err(ball_volume(g, n), ball_volume_gamma(p, n)) < 1e-4);
        }
    }
}

TEST_CASE("volume recursion through the cross-section constant") {
    for (double pv : {1.5, 3.0}) {
        const auto g = build_grid(Exponent(pv), Exponent(pv), 50000);
        for (int n = 2; n <= 5; ++n) {
            const double r_const = ball_volume(g, n - 1) / std::pow(2.0, n - 1);
            const double integral = cumulative_sin_power(g, n - 2, false).back();
            const double recursed = std::pow(2.0, n) * r_const * (n - 1.0) / n * integral;
            CAPTURE(pv);
            CAPTURE(n);
            CHECK(rel_err(recursed, ball_volume(g, n)) < 1e-10);
        }
    }
}

TEST_CASE("surface measure anchors") {
    CHECK(rel_err(surface_measure(Exponent(2.0), Exponent(2.0), 3), 4.0 * kPi) < 1e-4);
    CHECK(rel_err(surface_measure(kInf, kInf, 3), 24.0) < 1e-4);
    CHECK(rel_err(surface_measure(Exponent(1.0), Exponent(1.0), 2), 8.0) < 1e-6);
    const auto g = build_grid(Exponent(2.0), Exponent(2.0), 10000);
    CHECK_THROWS_AS(surface_measure(g, 1), std::invalid_argument);
}

TEST_CASE("geometry report exposes the cross-section constants") {
    const auto g = build_grid(Exponent(1.5), Exponent(1.5), 100000);
    const auto report = geometry_report(g, 3);
    CHECK(report.V_n == doctest::Approx(ball_volume(g, 3)).epsilon(1e-14));
    CHECK(report.S_nq == doctest::Approx(surface_measure(g, 3)).epsilon(1e-14));
    CHECK(report.R == doctest::Approx(ball_volume(g, 2) / 4.0).epsilon(1e-14));
    // for n = 3 the constants reduce to the quadrant area and quarter length
    CHECK(report.R == doctest::Approx(g.pi_p / 4.0).epsilon(1e-12));
    CHECK(report.P_q == doctest::Approx(g.quarter_length_q).epsilon(1e-12));

    const auto report2 = geometry_report(g, 2);
    CHECK(report2.R == doctest::Approx(1.0).epsilon(1e-12));    // V_1 / 2
    CHECK(report2.P_q == doctest::Approx(1.0).epsilon(1e-12));  // S_1 / 2
}

TEST_CASE("slice laws are proper CDFs") {
    for (double pv : {1.5, std::numeric_limits<double>::infinity()}) {
        const auto g = build_grid(Exponent(pv), Exponent(pv), 20000);
        for (int n : {2, 3, 5}) {
            for (const CdfTable& cdf : {volume_cdf(g, n), surface_cdf(g, n)}) {
                REQUIRE(cdf.F.front() == 0.0);
                REQUIRE(cdf.F.back() == 1.0);
                for (std::size_t i = 1; i < cdf.F.size(); ++i)
                    REQUIRE(cdf.F[i] > cdf.F[i - 1]);
            }
        }
    }
}

TEST_CASE("volume slice law in two dimensions is linear in t") {
    const auto g = build_grid(Exponent(1.7), Exponent(1.7), 50000);
    const auto cdf = volume_cdf(g, 2);
    const double t_end = g.t.back();
    for (int i = 0; i <= 50; ++i) {
        const double t = t_end * i / 50.0;
        CHECK(std::abs(cdf.value_at(t) - t / t_end) < 1e-12);
    }
    // and at p=2, n=2 the halfway point splits the quadrant
    const auto g2 = build_grid(Exponent(2.0), Exponent(2.0), 50000);
    CHECK(std::abs(volume_cdf(g2, 2).value_at(kPi / 4.0) - 0.5) < 1e-6);
}

TEST_CASE("volume slice law at p=2, n=3 is 1 - cos t") {
    const auto g = build_grid(Exponent(2.0), Exponent(2.0), 100000);
    const auto cdf = volume_cdf(g, 3);
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double t = g.t.back() * i / 200.0;
        worst = std::max(worst, std::abs(cdf.value_at(t) - (1.0 - std::cos(t))));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("volume and surface slice laws coincide exactly on {1,2,inf}") {
    const auto gap_of = [](Exponent p, int n) {
        const auto g = build_grid(p, p, 100000);
        return sup_cdf_gap(volume_cdf(g, n), surface_cdf(g, n));
    };
    CHECK(gap_of(Exponent(2.0), 3) < 1e-6);
    CHECK(gap_of(kInf, 4) < 1e-6);
    CHECK(gap_of(Exponent(1.0), 3) < 1e-6);
}

TEST_CASE("volume and surface slice laws separate off {1,2,inf}") {
    for (const char* ps : {"1.5", "3"}) {
        const Exponent p = Exponent::parse(ps);
        const double frozen = testutil::cdf_gap_fixture(ps);
        REQUIRE(frozen > 1e-2);
        const auto g = build_grid(p, p, 100000);
        const double gap = sup_cdf_gap(volume_cdf(g, 3), surface_cdf(g, 3));
        CAPTURE(ps);
        CHECK(gap >= frozen - 1e-6);
        CHECK(std::abs(gap - frozen) < 1e-6);
    }
}

TEST_CASE("cdf tables interpolate and invert consistently") {
    const auto g = build_grid(Exponent(1.5), Exponent(1.5), 20000);
    const auto cdf = surface_cdf(g, 3);
    for (double u : {0.001, 0.1, 0.25, 0.5, 0.75, 0.9, 0.999}) {
        const double t = cdf.invert(u);
        CHECK(cdf.value_at(t) == doctest::Approx(u).epsilon(1e-9));
    }
    CHECK(cdf.invert(0.0) == 0.0);
    CHECK(cdf.invert(1.0) == g.t.back());
}
