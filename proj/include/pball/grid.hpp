#pragma once

#include <cstddef>
#include <vector>

#include "pball/exponent.hpp"

namespace pball {

// Tabulated first quadrant of the unit p-circle, parametrized by t = twice
// the swept area, so t runs from 0 to pi_p/2 and (x, y) = (cos_p t, sin_p t).
//
// Columns (same length, aligned by index):
//   w    driver variable; w = sin_p(t)^p for finite p
//   x,y  cos_p / sin_p at the knots, exactly on the curve
//   t    area parameter, strictly increasing from 0
//   dLq  q-norm length of each chord step (dLq[0] = 0)
//   Lq   cumulative q-length
struct PCircleGrid {
    Exponent p;
    Exponent q;
    std::vector<double> w, x, y, t, dLq, Lq;
    double pi_p = 0.0;              // total p-circle area, = 2 * t.back()
    double quarter_length_q = 0.0;  // Lq.back()

    std::size_t size() const { return t.size(); }

    // cos_p / sin_p for arbitrary real t (periodic extension, period 2*pi_p).
    double cos_p(double tv) const;
    double sin_p(double tv) const;

    // First-quadrant curve point at parameter tv in [0, pi_p/2].
    void quadrant_point(double tv, double& xo, double& yo) const;

    // Area parameter from the driver variable (first quadrant).
    double t_of_w(double wv) const;

    // Driver variable from a cosine value u in [0, 1]. Flat stretches of
    // cos_p (p = inf) resolve to the left-most parameter.
    double w_of_cos(double u) const;

    // sin_p value paired with driver value wv.
    double y_of_w(double wv) const;
};

// Discretizes the first-quadrant p-circle with `precision` driver knots,
// concentrated geometrically near w = 0, 1/2 and 1 where the curve needs
// resolving. precision >= 1000.
PCircleGrid build_grid(Exponent p, Exponent q, int precision);

// Integrates the defining coupled ODE pair C' = -S^(p-1), S' = C^(p-1),
// C(0) = 1, S(0) = 0 with classic fixed-step RK4 and returns the largest
// absolute deviation from the grid interpolation over [0, pi_p/2].
// Requires finite p >= 1 (the exponent p-1 < 0 is singular at the axes) and
// step <= 1e-4 * pi_p/2. Throws std::runtime_error naming the offending t
// if the trajectory leaves the unit p-circle by more than 1e-3.
double ode_cross_check(Exponent p, double step, int precision = 100000);

}  // namespace pball
