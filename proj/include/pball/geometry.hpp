#pragma once

#include <vector>

#include "pball/grid.hpp"

namespace pball {

// Totals for the n-dimensional p-ball plus the cross-section constants of
// the recursive construction.
struct GeometryReport {
    Exponent p;
    Exponent q;
    int n = 0;
    double V_n = 0.0;   // ball volume
    double S_nq = 0.0;  // boundary measure in the q-norm
    double R = 0.0;     // unsigned (n-1)-ball cross-section, V_{n-1} / 2^{n-1}
    double P_q = 0.0;   // its unsigned boundary, S_{n-1,q} / 2^{n-1}
};

// Relative q-length minus relative area, sampled on an even grid of
// relative area. Identically zero exactly when p in {1, 2, inf}.
struct RelDiffCurve {
    Exponent p;
    Exponent q;
    std::vector<double> rel_area;
    std::vector<double> diff;
    double max_abs_diff = 0.0;
};

// Monotone lookup table F(t), increasing from 0 to 1 over [t.front(), t.back()].
struct CdfTable {
    std::vector<double> t;
    std::vector<double> F;

    double value_at(double tv) const;  // linear interpolation, clamped
    double invert(double u) const;     // left-most t with F(t) = u
};

// Cumulative trapezoid of sin_p(t)^power against dt (arc = false) or against
// the q-length increments dLq (arc = true), evaluated at the grid knots.
std::vector<double> cumulative_sin_power(const PCircleGrid& grid, int power, bool arc);

// Swept area at parameter t; identically t/2 in this parametrization.
double area_at(const PCircleGrid& grid, double t);

// The same area accumulated through the boundary integral
// (x*y/2 + integral of sin_p^p dt), at every grid knot. Independent of the
// shoelace accumulation that defines t, so its finite differences make a
// real consistency check of dA/dt = 1/2.
std::vector<double> area_integral_knots(const PCircleGrid& grid);

// Cumulative q-length L_{p,q}(t), interpolated from the grid.
double length_at(const PCircleGrid& grid, double t);

RelDiffCurve rel_diff_curve(const PCircleGrid& grid, int resolution);
RelDiffCurve rel_diff_curve(Exponent p, Exponent q, int resolution, int precision = 100000);

// Ball volume V_n = (2^n / n) * prod_{k=0}^{n-2} integral sin_p^k dt.
// n = 1 is the segment, volume 2.
double ball_volume(const PCircleGrid& grid, int n);
double ball_volume(Exponent p, int n, int precision = 100000);

// Boundary measure S_{n,q} = 2^n * prod_{k=0}^{n-2} integral sin_p^k dLq.
// Requires n >= 2.
double surface_measure(const PCircleGrid& grid, int n);
double surface_measure(Exponent p, Exponent q, int n, int precision = 100000);

GeometryReport geometry_report(const PCircleGrid& grid, int n);

// Normalized cumulative of sin_p^{n-2} dt: the law of the slice parameter
// under volume-uniform sampling. Strictly increasing from 0 to 1.
CdfTable volume_cdf(const PCircleGrid& grid, int n);

// Normalized cumulative of sin_p^{n-2} dLq: the slice-parameter law under
// boundary-uniform sampling in the q-norm.
CdfTable surface_cdf(const PCircleGrid& grid, int n);

// Sup distance between two monotone tables, evaluated over the union of
// their knots.
double sup_cdf_gap(const CdfTable& a, const CdfTable& b);

// Closed form (2 Gamma(1+1/p))^n / Gamma(1+n/p); independent volume oracle.
double ball_volume_gamma(Exponent p, int n);

}  // namespace pball
