#include "pball/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pball {

namespace {

double ipow(double v, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= v;
    return r;
}

void check_range(const PCircleGrid& grid, double t) {
    const double quarter = grid.t.back();
    if (!(t >= -1e-12 && t <= quarter * (1.0 + 1e-12)))
        throw std::invalid_argument("parameter t outside [0, pi_p/2]");
}

double lerp_table(const std::vector<double>& xs, const std::vector<double>& ys, double v) {
    auto it = std::upper_bound(xs.begin(), xs.end(), v);
    std::size_t i = (it == xs.begin()) ? 0 : static_cast<std::size_t>(it - xs.begin()) - 1;
    i = std::min(i, xs.size() - 2);
    const double dx = xs[i + 1] - xs[i];
    const double s = dx > 0.0 ? (v - xs[i]) / dx : 0.0;
    return ys[i] + s * (ys[i + 1] - ys[i]);
}

}  // namespace

std::vector<double> cumulative_sin_power(const PCircleGrid& grid, int power, bool arc) {
    const std::size_t m = grid.size();
    std::vector<double> f(m);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(m); ++i) f[i] = ipow(grid.y[i], power);

    std::vector<double> cum(m, 0.0);
    for (std::size_t i = 1; i < m; ++i) {
        const double step = arc ? grid.dLq[i] : grid.t[i] - grid.t[i - 1];
        cum[i] = cum[i - 1] + 0.5 * (f[i - 1] + f[i]) * step;
    }
    return cum;
}

double area_at(const PCircleGrid& grid, double t) {
    check_range(grid, t);
    return 0.5 * t;
}

std::vector<double> area_integral_knots(const PCircleGrid& grid) {
    const std::size_t m = grid.size();
    std::vector<double> area(m, 0.0);
    if (grid.p.is_inf()) {
        // No ODE substitution at p = inf; accumulate -integral sin d(cos).
        double acc = 0.0;
        for (std::size_t i = 1; i < m; ++i) {
            acc -= 0.5 * (grid.y[i - 1] + grid.y[i]) * (grid.x[i] - grid.x[i - 1]);
            area[i] = 0.5 * grid.x[i] * grid.y[i] + acc;
        }
        return area;
    }
    // sin d(cos) = -sin^p dt, and sin^p is the driver variable itself.
    double acc = 0.0;
    for (std::size_t i = 1; i < m; ++i) {
        acc += 0.5 * (grid.w[i - 1] + grid.w[i]) * (grid.t[i] - grid.t[i - 1]);
        area[i] = 0.5 * grid.x[i] * grid.y[i] + acc;
    }
    return area;
}

double length_at(const PCircleGrid& grid, double t) {
    check_range(grid, t);
    t = std::clamp(t, 0.0, grid.t.back());
    return lerp_table(grid.t, grid.Lq, t);
}

RelDiffCurve rel_diff_curve(const PCircleGrid& grid, int resolution) {
    if (resolution < 100) throw std::invalid_argument("resolution must be at least 100");
    RelDiffCurve curve{grid.p, grid.q};
    curve.rel_area.resize(resolution + 1);
    curve.diff.resize(resolution + 1);
    const double t_end = grid.t.back();
    const double total = grid.quarter_length_q;
    for (int i = 0; i <= resolution; ++i) {
        const double a = static_cast<double>(i) / resolution;
        curve.rel_area[i] = a;
        curve.diff[i] = length_at(grid, a * t_end) / total - a;
        curve.max_abs_diff = std::max(curve.max_abs_diff, std::abs(curve.diff[i]));
    }
    return curve;
}

RelDiffCurve rel_diff_curve(Exponent p, Exponent q, int resolution, int precision) {
    return rel_diff_curve(build_grid(p, q, precision), resolution);
}

namespace {

// prod_{k=0}^{n-2} of the cumulative totals, sharing the running power.
double product_of_totals(const PCircleGrid& grid, int n, bool arc) {
    const std::size_t m = grid.size();
    std::vector<double> f(m, 1.0);
    double prod = 1.0;
    for (int k = 0; k <= n - 2; ++k) {
        if (k > 0)
            for (std::size_t i = 0; i < m; ++i) f[i] *= grid.y[i];
        double total = 0.0;
        for (std::size_t i = 1; i < m; ++i) {
            const double step = arc ? grid.dLq[i] : grid.t[i] - grid.t[i - 1];
            total += 0.5 * (f[i - 1] + f[i]) * step;
        }
        prod *= total;
    }
    return prod;
}

}  // namespace

double ball_volume(const PCircleGrid& grid, int n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (n == 1) return 2.0;
    // V_n = 2 V_{n-1} (n-1)/n * integral sin^{n-2} dt, V_1 = 2; unrolled.
    return std::pow(2.0, n) / n * product_of_totals(grid, n, false);
}

double ball_volume(Exponent p, int n, int precision) {
    return ball_volume(build_grid(p, Exponent(2.0), precision), n);
}

namespace {

double surface_total(const PCircleGrid& grid, int n) {
    if (n == 1) return 2.0;  // two endpoints of the segment
    // S_{n,q} = 2 S_{n-1,q} * integral sin^{n-2} dLq, S_{1,q} = 2; unrolled.
    return std::pow(2.0, n) * product_of_totals(grid, n, true);
}

}  // namespace

double surface_measure(const PCircleGrid& grid, int n) {
    if (n < 2) throw std::invalid_argument("surface measure needs n >= 2");
    return surface_total(grid, n);
}

double surface_measure(Exponent p, Exponent q, int n, int precision) {
    return surface_measure(build_grid(p, q, precision), n);
}

GeometryReport geometry_report(const PCircleGrid& grid, int n) {
    if (n < 2) throw std::invalid_argument("geometry report needs n >= 2");
    GeometryReport report{grid.p, grid.q, n};
    report.V_n = ball_volume(grid, n);
    report.S_nq = surface_total(grid, n);
    const double half_pow = std::pow(2.0, n - 1);
    report.R = ball_volume(grid, n - 1) / half_pow;
    report.P_q = surface_total(grid, n - 1) / half_pow;
    return report;
}

namespace {

CdfTable normalized_cdf(const PCircleGrid& grid, int n, bool arc) {
    if (n < 2) throw std::invalid_argument("slice-parameter law needs n >= 2");
    const std::vector<double> cum = cumulative_sin_power(grid, n - 2, arc);
    const double total = cum.back();

    // Drop knots where the cumulative stalled at ulp level so the table is
    // strictly increasing; interpolation across the dropped sliver is exact
    // to rounding.
    CdfTable table;
    table.t.reserve(cum.size());
    table.F.reserve(cum.size());
    table.t.push_back(grid.t.front());
    table.F.push_back(0.0);
    for (std::size_t i = 1; i < cum.size(); ++i) {
        const double f = cum[i] / total;
        if (f <= table.F.back()) continue;
        table.t.push_back(grid.t[i]);
        table.F.push_back(f);
    }
    return table;
}

}  // namespace

CdfTable volume_cdf(const PCircleGrid& grid, int n) { return normalized_cdf(grid, n, false); }

CdfTable surface_cdf(const PCircleGrid& grid, int n) { return normalized_cdf(grid, n, true); }

double CdfTable::value_at(double tv) const {
    if (tv <= t.front()) return F.front();
    if (tv >= t.back()) return F.back();
    return lerp_table(t, F, tv);
}

double CdfTable::invert(double u) const {
    if (u <= F.front()) return t.front();
    if (u >= F.back()) return t.back();
    auto it = std::lower_bound(F.begin(), F.end(), u);  // left-most knot with F >= u
    const std::size_t j = static_cast<std::size_t>(it - F.begin());
    if (j == 0) return t.front();
    const double dF = F[j] - F[j - 1];
    const double s = dF > 0.0 ? (u - F[j - 1]) / dF : 1.0;
    return t[j - 1] + s * (t[j] - t[j - 1]);
}

double sup_cdf_gap(const CdfTable& a, const CdfTable& b) {
    double gap = 0.0;
    for (double t : a.t) gap = std::max(gap, std::abs(a.value_at(t) - b.value_at(t)));
    for (double t : b.t) gap = std::max(gap, std::abs(a.value_at(t) - b.value_at(t)));
    return gap;
}

double ball_volume_gamma(Exponent p, int n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (p.is_inf()) return std::pow(2.0, n);
    const double pe = p.value();
    return std::exp(n * (std::log(2.0) + std::lgamma(1.0 + 1.0 / pe)) -
                    std::lgamma(1.0 + static_cast<double>(n) / pe));
}

}  // namespace pball
