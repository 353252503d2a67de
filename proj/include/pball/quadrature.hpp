#pragma once

#include <cmath>
#include <functional>

#include "pball/geometry.hpp"

namespace pball {

namespace detail {
inline double simpson_rec(const std::function<double(double)>& f, double a, double b,
                          double fa, double fm, double fb, double whole, double tol,
                          int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12, int max_depth = 48) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// CDF table of an (unnormalized) pdf over [lo, hi] with the given knots;
// each panel integrated adaptively, then the cumulative normalized to 1.
inline CdfTable quadrature_cdf(const std::function<double(double)>& pdf,
                               std::span<const double> knots, double tol = 1e-12) {
    CdfTable table;
    table.t.assign(knots.begin(), knots.end());
    table.F.resize(knots.size(), 0.0);
    for (std::size_t i = 1; i < knots.size(); ++i)
        table.F[i] = table.F[i - 1] + adaptive_simpson(pdf, knots[i - 1], knots[i], tol);
    const double total = table.F.back();
    for (auto& v : table.F) v /= total;
    return table;
}

}  // namespace pball
