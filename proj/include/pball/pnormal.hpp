#pragma once

#include <span>

#include "pball/exponent.hpp"
#include "pball/rng.hpp"

namespace pball {

// Scalar p-normal family: density c_p exp(-|x|^p / p) for finite p, uniform
// on (-1,1) at p = inf. The unique i.i.d. family whose joint density depends
// on the argument only through its p-norm.
struct PNormalParams {
    Exponent p;
    double scale;  // b > 0; density of b*X is (1/b) f_p(y/b)
    double c_p;    // normalization at unit scale

    explicit PNormalParams(Exponent p_, double scale_ = 1.0);
};

// c_p = 1 / (2 p^{1/p} Gamma(1+1/p)); 1/2 at p = inf.
double normalization_constant(Exponent p);

double density(const PNormalParams& params, double x);

// Product of the marginals; equals c_p^{n-1} * f_p(||x||_p).
double joint_density(const PNormalParams& params, std::span<const double> x);

// Unnormalized density r^{n-1} exp(-(n/p) r^p) of the normalized p-radius
// ||X||_p / n^{1/p} of n i.i.d. p-normal coordinates. At p = inf the
// exponential degenerates to the indicator of r < 1.
double radius_density(Exponent p, int n, double r);

// Unnormalized density of the raw p-radius ||X||_p itself:
// r^{n-1} exp(-r^p / p), i.e. r^{n-1} f_p(r) up to the constant.
double raw_radius_density(Exponent p, int n, double r);

// Argmax of radius_density: ((n-1)/n)^{1/p} for finite p, 1 at p = inf.
double radius_density_mode(Exponent p, int n);

// |X| for X ~ f_p at unit scale: (p G)^{1/p} with G ~ Gamma(1/p).
double pnormal_magnitude(Exponent p, SplitMix64& rng);

// Signed variate with law f_{p, scale}.
double sample_scalar(const PNormalParams& params, SplitMix64& rng);

}  // namespace pball
