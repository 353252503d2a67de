#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"

#include "pball/pnormal.hpp"
#include "pball/quadrature.hpp"
#include "pball/verify.hpp"

using namespace pball;

namespace {

const double kPi = std::numbers::pi;

// Support cutoff: beyond this the density is below 1e-300.
double tail_cutoff(Exponent p) {
    if (p.is_inf()) return 1.0;
    const double pe = p.value();
    return std::pow(691.0 * pe, 1.0 / pe);
}

// Signed knots clustered near the origin, where heavy-tailed members
// (p < 1) concentrate almost all of their mass.
std::vector<double> signed_knots(Exponent p, int half_count) {
    const double xmax = tail_cutoff(p);
    const double k = std::max(2.0, 2.0 / p.value());
    std::vector<double> knots;
    knots.reserve(2 * half_count + 1);
    for (int j = half_count; j >= 1; --j)
        knots.push_back(-xmax * std::pow(static_cast<double>(j) / half_count, k));
    knots.push_back(0.0);
    for (int j = 1; j <= half_count; ++j)
        knots.push_back(xmax * std::pow(static_cast<double>(j) / half_count, k));
    return knots;
}

CdfTable scalar_cdf_oracle(const PNormalParams& params, int half_count = 2048) {
    const auto pdf = [&params](double x) { return density(params, x); };
    return quadrature_cdf(pdf, signed_knots(params.p, half_count));
}

std::vector<double> positive_knots(double xmax, double k, int count) {
    std::vector<double> knots(count + 1);
    for (int j = 0; j <= count; ++j)
        knots[j] = xmax * std::pow(static_cast<double>(j) / count, k);
    return knots;
}

}  // namespace

TEST_CASE("density anchors") {
    CHECK(density(PNormalParams(Exponent(2.0)), 0.0) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-12));
    CHECK(density(PNormalParams(Exponent(1.0)), 0.0) == doctest::Approx(0.5).epsilon(1e-12));
    const PNormalParams boxcar{Exponent::inf()};
    CHECK(density(boxcar, 0.5) == 0.5);
    CHECK(density(boxcar, 1.5) == 0.0);
    CHECK_THROWS_AS(PNormalParams(Exponent(2.0), -1.0), std::invalid_argument);
}

TEST_CASE("scale parameter uses the inverse-jacobian convention") {
    const PNormalParams unit{Exponent(2.0)};
    const PNormalParams wide{Exponent(2.0), 3.0};
    // f_{p,b}(y) = (1/b) f_p(y/b): values shrink, mass is conserved
    CHECK(density(wide, 0.0) == doctest::Approx(density(unit, 0.0) / 3.0).epsilon(1e-12));
    CHECK(density(wide, 3.0) == doctest::Approx(density(unit, 1.0) / 3.0).epsilon(1e-12));
    const double mass = adaptive_simpson([&](double x) { return density(wide, x); },
                                         -3.0 * tail_cutoff(Exponent(2.0)),
                                         3.0 * tail_cutoff(Exponent(2.0)));
    CHECK(std::abs(mass - 1.0) < 1e-8);
}

TEST_CASE("density integrates to one") {
    for (double pv : {0.5, 1.0, 1.5, 2.0, 3.0, 8.0}) {
        const PNormalParams params{Exponent(pv)};
        const double xmax = tail_cutoff(params.p);
        // integrate the clustered panels so the p=0.5 spike at 0 is resolved
        const auto knots = signed_knots(params.p, 512);
        double mass = 0.0;
        for (std::size_t i = 1; i < knots.size(); ++i)
            mass += adaptive_simpson([&](double x) { return density(params, x); },
                                     knots[i - 1], knots[i]);
        CAPTURE(pv);
        CAPTURE(xmax);
        CHECK(std::abs(mass - 1.0) < 1e-8);
    }
    // p = inf is exact
    const PNormalParams boxcar{Exponent::inf()};
    const double mass =
        adaptive_simpson([&](double x) { return density(boxcar, x); }, -1.0, 1.0);
    CHECK(std::abs(mass - 1.0) < 1e-9);
}

TEST_CASE("normalization constant approaches 1/2 as p grows") {
    CHECK(std::abs(normalization_constant(Exponent(1000.0)) - 0.5) < 1e-2);
    CHECK(normalization_constant(Exponent::inf()) == 0.5);
}

TEST_CASE("joint density factorizes through the p-norm") {
    SplitMix64 rng(404);
    for (double pv : {0.5, 1.5, 2.0, 4.0}) {
        const PNormalParams params{Exponent(pv)};
        double worst = 0.0;
        for (int rep = 0; rep < 2500; ++rep) {
            const int n = 1 + static_cast<int>(rng.next() % 8);
            std::vector<double> x(n);
            for (auto& v : x) v = 3.0 * rng.uniform_sym();
            const double joint = joint_density(params, x);
            const double radial = std::pow(params.c_p, n - 1) *
                                  density(params, pnorm(x, params.p));
            if (radial > 0.0) worst = std::max(worst, std::abs(joint / radial - 1.0));
        }
        CAPTURE(pv);
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("joint density anchors") {
    const PNormalParams g2{Exponent(2.0)};
    const double origin[2] = {0.0, 0.0};
    CHECK(joint_density(g2, origin) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-12));

    const PNormalParams g15{Exponent(1.5)};
    const double single[1] = {0.7};
    CHECK(joint_density(g15, single) == doctest::Approx(density(g15, 0.7)).epsilon(1e-15));

    // p-isotropy: equal p-norm implies equal joint density
    const double a[3] = {1.0, 0.0, 0.0};
    const double b[3] = {0.4, 0.6976386272310402, 0.3};  // ||b||_1.5 = 1
    CHECK(std::abs(pnorm(b, Exponent(1.5)) - 1.0) < 1e-12);
    CHECK(joint_density(g15, a) == doctest::Approx(joint_density(g15, b)).epsilon(1e-12));
}

TEST_CASE("radius density forms") {
    CHECK(radius_density(Exponent::inf(), 3, 0.5) == 0.25);
    CHECK(radius_density(Exponent::inf(), 3, 1.2) == 0.0);
    CHECK(radius_density(Exponent(2.0), 1, 0.7) ==
          doctest::Approx(std::exp(-0.7 * 0.7 / 2.0)).epsilon(1e-15));
    CHECK(radius_density(Exponent(2.0), 3, 0.7) ==
          doctest::Approx(0.49 * std::exp(-1.5 * 0.49)).epsilon(1e-14));
    CHECK_THROWS_AS(radius_density(Exponent(2.0), 3, -0.1), std::invalid_argument);

    // the two exposures differ exactly by the n^{1/p} radius rescaling
    const Exponent p(1.5);
    const int n = 4;
    const double scale = std::pow(static_cast<double>(n), 1.0 / p.value());
    const double expect_ratio = std::pow(scale, n - 1);
    for (double r : {0.2, 0.7, 1.1, 1.9}) {
        const double ratio = raw_radius_density(p, n, scale * r) / radius_density(p, n, r);
        CHECK(ratio == doctest::Approx(expect_ratio).epsilon(1e-12));
    }
}

TEST_CASE("radius density peaks at ((n-1)/n)^(1/p)") {
    for (double pv : {1.5, 3.0}) {
        for (int n : {2, 5}) {
            const Exponent p(pv);
            const double mode = radius_density_mode(p, n);
            CHECK(mode == doctest::Approx(std::pow((n - 1.0) / n, 1.0 / pv)).epsilon(1e-15));
            const double peak = radius_density(p, n, mode);
            CHECK(radius_density(p, n, mode * 0.98) < peak);
            CHECK(radius_density(p, n, mode * 1.02) < peak);
        }
    }
    CHECK(radius_density_mode(Exponent(2.0), 1) == 0.0);
}

TEST_CASE("sampled radii follow both radius-density exposures") {
    const Exponent p(1.5);
    const int n = 3;
    const std::size_t count = 200000;
    const double scale = std::pow(static_cast<double>(n), 1.0 / p.value());

    std::vector<double> raw(count), scaled(count);
    SplitMix64 rng(515);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < count; ++i) {
        for (auto& v : x) v = pnormal_magnitude(p, rng);
        raw[i] = pnorm(x, p);
        scaled[i] = raw[i] / scale;
    }

    const double k = 2.0;
    const auto raw_cdf = quadrature_cdf(
        [&](double r) { return raw_radius_density(p, n, r); },
        positive_knots(scale * tail_cutoff(p), k, 2048));
    const auto scaled_cdf = quadrature_cdf(
        [&](double r) { return radius_density(p, n, r); },
        positive_knots(tail_cutoff(p), k, 2048));

    CHECK(ks_one_sample(raw, raw_cdf, 1e-3, "raw radius").verdict == Verdict::pass);
    CHECK(ks_one_sample(scaled, scaled_cdf, 1e-3, "scaled radius").verdict == Verdict::pass);
}

TEST_CASE("scalar sampler moments") {
    // standard normal second moment
    {
        SplitMix64 rng(606);
        const PNormalParams params{Exponent(2.0)};
        const std::size_t count = 1000000;
        double sum = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            const double v = sample_scalar(params, rng);
            sum += v * v;
        }
        const double mean = sum / count;
        CHECK(std::abs(mean - 1.0) < 3.0 * std::sqrt(2.0 / count));
    }
    // Laplace density at the origin via a histogram cell
    {
        SplitMix64 rng(607);
        const PNormalParams params{Exponent(1.0)};
        const std::size_t count = 1000000;
        const double delta = 0.02;
        std::size_t hits = 0;
        for (std::size_t i = 0; i < count; ++i)
            if (std::abs(sample_scalar(params, rng)) < delta) ++hits;
        const double f0 = static_cast<double>(hits) / count / (2.0 * delta);
        CHECK(std::abs(f0 - 0.5) < 0.01);
    }
}

TEST_CASE("scalar sampler matches the quadrature CDF") {
    // shapes 1/p down to 1/8
    for (double pv : {0.5, 1.5, 3.0, 8.0}) {
        const PNormalParams params{Exponent(pv)};
        const auto cdf = scalar_cdf_oracle(params);
        SplitMix64 rng(1000 + static_cast<std::uint64_t>(10 * pv));
        const std::size_t count = 1000000;
        std::vector<double> draws(count);
        for (auto& v : draws) v = sample_scalar(params, rng);
        const auto report = ks_one_sample(draws, cdf, 1e-3, "scalar p=" + params.p.str());
        CAPTURE(pv);
        CAPTURE(report.statistic);
        CHECK(report.verdict == Verdict::pass);
    }
    // p = inf: uniform on (-1,1)
    {
        const PNormalParams params{Exponent::inf()};
        SplitMix64 rng(77);
        std::vector<double> draws(200000);
        for (auto& v : draws) v = sample_scalar(params, rng);
        const auto report = ks_one_sample(
            draws, [](double v) { return std::clamp(0.5 * (v + 1.0), 0.0, 1.0); }, 1e-3,
            "scalar inf");
        CHECK(report.verdict == Verdict::pass);
    }
}

TEST_CASE("gamma variates hold up at small shapes") {
    SplitMix64 rng(321);
    const double shape = 0.125;
    const std::size_t count = 500000;
    double sum = 0.0, sumsq = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double g = gamma_variate(rng, shape);
        sum += g;
        sumsq += g * g;
    }
    const double mean = sum / count;
    const double var = sumsq / count - mean * mean;
    // Gamma(a): mean a, variance a, Var(s^2) ~ (6a + 2a^2)/N; 4-sigma bands
    CHECK(std::abs(mean - shape) < 4.0 * std::sqrt(shape / count));
    CHECK(std::abs(var - shape) <
          4.0 * std::sqrt((6.0 * shape + 2.0 * shape * shape) / count));
    CHECK_THROWS_AS(gamma_variate(rng, 0.0), std::invalid_argument);
}
