#include "pball/pnormal.hpp"

#include <cmath>
#include <stdexcept>

namespace pball {

double normalization_constant(Exponent p) {
    if (p.is_inf()) return 0.5;
    const double pe = p.value();
    return 1.0 / (2.0 * std::pow(pe, 1.0 / pe) * std::tgamma(1.0 + 1.0 / pe));
}

PNormalParams::PNormalParams(Exponent p_, double scale_) : p(p_), scale(scale_) {
    if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
    c_p = normalization_constant(p);
}

double density(const PNormalParams& params, double x) {
    const double z = std::abs(x) / params.scale;
    if (params.p.is_inf()) return z < 1.0 ? 0.5 / params.scale : 0.0;
    const double pe = params.p.value();
    return params.c_p / params.scale * std::exp(-std::pow(z, pe) / pe);
}

double joint_density(const PNormalParams& params, std::span<const double> x) {
    double prod = 1.0;
    for (double c : x) prod *= density(params, c);
    return prod;
}

namespace {

double power_factor(int n, double r) {
    double f = 1.0;
    for (int i = 1; i < n; ++i) f *= r;
    return f;
}

}  // namespace

double radius_density(Exponent p, int n, double r) {
    if (r < 0.0) throw std::invalid_argument("radius must be non-negative");
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (p.is_inf()) return r < 1.0 ? power_factor(n, r) : 0.0;
    const double pe = p.value();
    return power_factor(n, r) * std::exp(-(static_cast<double>(n) / pe) * std::pow(r, pe));
}

double raw_radius_density(Exponent p, int n, double r) {
    if (r < 0.0) throw std::invalid_argument("radius must be non-negative");
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (p.is_inf()) return r < 1.0 ? power_factor(n, r) : 0.0;
    const double pe = p.value();
    return power_factor(n, r) * std::exp(-std::pow(r, pe) / pe);
}

double radius_density_mode(Exponent p, int n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (p.is_inf()) return 1.0;
    if (n == 1) return 0.0;
    return std::pow((n - 1.0) / n, 1.0 / p.value());
}

double pnormal_magnitude(Exponent p, SplitMix64& rng) {
    if (p.is_inf()) return rng.uniform01();
    const double pe = p.value();
    const double g = gamma_variate(rng, 1.0 / pe);
    return std::pow(pe * g, 1.0 / pe);
}

double sample_scalar(const PNormalParams& params, SplitMix64& rng) {
    if (params.p.is_inf()) return params.scale * rng.uniform_sym();
    const double mag = pnormal_magnitude(params.p, rng);
    return params.scale * rng.sign_pm1() * mag;
}

}  // namespace pball
