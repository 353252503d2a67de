#include "pball/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pball {

double pnorm(std::span<const double> v, Exponent p) {
    double m = 0.0;
    for (double c : v) m = std::max(m, std::abs(c));
    if (p.is_inf() || m == 0.0) return m;
    const double pe = p.value();
    double s = 0.0;
    for (double c : v) s += std::pow(std::abs(c) / m, pe);
    return m * std::pow(s, 1.0 / pe);
}

namespace {

// Driver knots in [0,1]: geometric spacing 1e-16 -> 0.1 (5% of the budget),
// linear 0.1 -> 0.4 (40%), geometric approach to 0.5, the whole thing
// mirrored about 1/2. Concentrates resolution where the curve hugs the axes
// and where it turns fastest.
std::vector<double> driver_knots(int precision) {
    const int n_geom = static_cast<int>(0.05 * precision);
    const int n_lin = static_cast<int>(0.4 * precision);

    std::vector<double> half;
    half.reserve(static_cast<std::size_t>(n_geom) * 2 + n_lin + 1);
    half.push_back(0.0);
    const double lo = 1e-16, hi = 0.1;
    const double step = std::log(hi / lo) / (n_geom - 1);
    for (int i = 0; i < n_geom; ++i) half.push_back(lo * std::exp(i * step));
    for (int i = 0; i < n_lin; ++i)
        half.push_back(0.1 + 0.3 * static_cast<double>(i) / (n_lin - 1));
    for (int i = n_geom - 1; i >= 0; --i) half.push_back(0.5 - lo * std::exp(i * step));

    std::vector<double> w;
    w.reserve(half.size() * 2 + 2);
    w.insert(w.end(), half.begin(), half.end());
    w.push_back(0.5);
    for (auto it = half.rbegin(); it != half.rend(); ++it) w.push_back(1.0 - *it);
    w.push_back(1.0);

    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
}

std::size_t locate(const std::vector<double>& knots, double v) {
    auto it = std::upper_bound(knots.begin(), knots.end(), v);
    std::size_t i = (it == knots.begin()) ? 0 : static_cast<std::size_t>(it - knots.begin()) - 1;
    return std::min(i, knots.size() - 2);
}

}  // namespace

PCircleGrid build_grid(Exponent p, Exponent q, int precision) {
    if (precision < 1000)
        throw std::invalid_argument("grid precision must be at least 1000");

    PCircleGrid g{p, q};
    std::vector<double> w = driver_knots(precision);
    const std::size_t m = w.size();

    std::vector<double> x(m), y(m);
    const bool pinf = p.is_inf();
    const double pe = p.value();
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(m); ++i) {
        if (pinf) {
            x[i] = std::min(2.0 * (1.0 - w[i]), 1.0);
            y[i] = std::min(2.0 * w[i], 1.0);
        } else {
            x[i] = std::pow(1.0 - w[i], 1.0 / pe);
            y[i] = std::pow(w[i], 1.0 / pe);
        }
    }

    // Accumulate area and length, merging knots whose area step is below the
    // resolution of t (the geometric tails make neighbours sub-ulp close
    // around w = 1/2). Keeps t strictly increasing by construction.
    g.w.reserve(m);
    g.x.reserve(m);
    g.y.reserve(m);
    g.t.reserve(m);
    g.dLq.reserve(m);
    g.Lq.reserve(m);
    g.w.push_back(w[0]);
    g.x.push_back(x[0]);
    g.y.push_back(y[0]);
    g.t.push_back(0.0);
    g.dLq.push_back(0.0);
    g.Lq.push_back(0.0);
    for (std::size_t i = 1; i < m; ++i) {
        const double xp = g.x.back(), yp = g.y.back();
        const double dA = 0.5 * (xp * y[i] - x[i] * yp);  // sector swept by the chord
        const double t_next = g.t.back() + 2.0 * dA;
        if (!(t_next > g.t.back())) continue;
        const double step = pnorm(x[i] - xp, y[i] - yp, q);
        g.w.push_back(w[i]);
        g.x.push_back(x[i]);
        g.y.push_back(y[i]);
        g.t.push_back(t_next);
        g.dLq.push_back(step);
        g.Lq.push_back(g.Lq.back() + step);
    }
    if (g.size() < 2) throw std::runtime_error("degenerate grid");

    g.pi_p = 2.0 * g.t.back();
    g.quarter_length_q = g.Lq.back();
    return g;
}

void PCircleGrid::quadrant_point(double tv, double& xo, double& yo) const {
    const double quarter = t.back();
    tv = std::clamp(tv, 0.0, quarter);
    const std::size_t i = locate(t, tv);
    const double s = (tv - t[i]) / (t[i + 1] - t[i]);
    double xs = x[i] + s * (x[i + 1] - x[i]);
    double ys = y[i] + s * (y[i + 1] - y[i]);
    if (!p.is_inf()) {
        // Chords sag off the curve; rescale the pair back onto it. For
        // p = inf the knots already bracket straight segments, so the chord
        // is the curve.
        const double nm = pnorm(xs, ys, p);
        xs /= nm;
        ys /= nm;
    }
    xo = xs;
    yo = ys;
}

double PCircleGrid::cos_p(double tv) const {
    const double quarter = t.back();
    const double period = 4.0 * quarter;  // = 2 pi_p
    double tau = std::fmod(tv, period);
    if (tau < 0.0) tau += period;

    double sign = 1.0;
    if (tau <= quarter) {
        // fall through
    } else if (tau <= 2.0 * quarter) {
        tau = 2.0 * quarter - tau;
        sign = -1.0;
    } else if (tau <= 3.0 * quarter) {
        tau = tau - 2.0 * quarter;
        sign = -1.0;
    } else {
        tau = period - tau;
    }
    double xs, ys;
    quadrant_point(tau, xs, ys);
    return sign * xs;
}

double PCircleGrid::sin_p(double tv) const { return cos_p(tv - t.back()); }

double PCircleGrid::t_of_w(double wv) const {
    wv = std::clamp(wv, 0.0, 1.0);
    const std::size_t i = locate(w, wv);
    const double dw = w[i + 1] - w[i];
    const double s = dw > 0.0 ? (wv - w[i]) / dw : 0.0;
    return t[i] + s * (t[i + 1] - t[i]);
}

double PCircleGrid::w_of_cos(double u) const {
    u = std::clamp(u, 0.0, 1.0);
    if (p.is_inf()) {
        // cos is flat at 1 over the first leg; ties resolve left-most.
        return u < 1.0 ? 1.0 - 0.5 * u : 0.0;
    }
    return 1.0 - std::pow(u, p.value());
}

double PCircleGrid::y_of_w(double wv) const {
    if (p.is_inf()) return std::min(2.0 * wv, 1.0);
    return std::pow(wv, 1.0 / p.value());
}

double ode_cross_check(Exponent p, double step, int precision) {
    if (p.is_inf() || p.value() < 1.0)
        throw std::invalid_argument("ode cross-check needs finite p >= 1");

    const PCircleGrid grid = build_grid(p, Exponent(2.0), precision);
    const double t_end = grid.t.back();
    if (!(step > 0.0) || step > 1e-4 * t_end)
        throw std::invalid_argument("step must be in (0, 1e-4 * pi_p/2]");

    const double e = p.value() - 1.0;
    const auto dC = [e](double s) { return -std::pow(std::max(s, 0.0), e); };
    const auto dS = [e](double c) { return std::pow(std::max(c, 0.0), e); };

    double C = 1.0, S = 0.0, tcur = 0.0, worst = 0.0;
    while (tcur < t_end) {
        const double h = std::min(step, t_end - tcur);
        const double k1c = dC(S), k1s = dS(C);
        const double k2c = dC(S + 0.5 * h * k1s), k2s = dS(C + 0.5 * h * k1c);
        const double k3c = dC(S + 0.5 * h * k2s), k3s = dS(C + 0.5 * h * k2c);
        const double k4c = dC(S + h * k3s), k4s = dS(C + h * k3c);
        C += h / 6.0 * (k1c + 2.0 * k2c + 2.0 * k3c + k4c);
        S += h / 6.0 * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);
        tcur += h;

        if (std::abs(pnorm(C, S, p) - 1.0) > 1e-3)
            throw std::runtime_error("ode trajectory left the p-circle at t = " +
                                     std::to_string(tcur));

        double xg, yg;
        grid.quadrant_point(tcur, xg, yg);
        worst = std::max({worst, std::abs(C - xg), std::abs(S - yg)});
    }
    return worst;
}

}  // namespace pball
