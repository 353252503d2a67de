#include "pball/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace pball {

double ks_critical(double alpha, double n_effective) {
    return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(n_effective);
}

namespace {

TestReport make_report(std::string name, double stat, double crit, double alpha,
                       std::vector<std::size_t> sizes) {
    TestReport r;
    r.name = std::move(name);
    r.statistic = stat;
    r.critical_value = crit;
    r.alpha = alpha;
    r.sample_sizes = std::move(sizes);
    r.verdict = stat < crit ? Verdict::pass : Verdict::reject;
    return r;
}

}  // namespace

TestReport ks_one_sample(std::span<const double> samples,
                         const std::function<double(double)>& cdf, double alpha,
                         std::string name) {
    if (samples.empty()) throw std::invalid_argument("empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max({d, f - i / n, (i + 1) / n - f});
    }
    return make_report(std::move(name), d, ks_critical(alpha, n), alpha, {sorted.size()});
}

TestReport ks_one_sample(std::span<const double> samples, const CdfTable& cdf, double alpha,
                         std::string name) {
    return ks_one_sample(
        samples, [&cdf](double v) { return cdf.value_at(v); }, alpha, std::move(name));
}

TestReport ks_two_sample(std::span<const double> a, std::span<const double> b, double alpha,
                         std::string name) {
    if (a.empty() || b.empty()) throw std::invalid_argument("empty sample");
    std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const double n = static_cast<double>(sa.size());
    const double m = static_cast<double>(sb.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < sa.size() || j < sb.size()) {
        double v;
        if (i == sa.size())
            v = sb[j];
        else if (j == sb.size())
            v = sa[i];
        else
            v = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] == v) ++i;  // consume ties on both sides
        while (j < sb.size() && sb[j] == v) ++j;
        d = std::max(d, std::abs(i / n - j / m));
    }
    const double n_eff = n * m / (n + m);
    return make_report(std::move(name), d, ks_critical(alpha, n_eff), alpha,
                       {sa.size(), sb.size()});
}

double normal_quantile(double prob) {
    if (!(prob > 0.0 && prob < 1.0)) throw std::invalid_argument("quantile needs p in (0,1)");
    // Acklam's rational approximation, |relative error| < 1.2e-9.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1.0 - plow;
    double q, r;
    if (prob < plow) {
        q = std::sqrt(-2.0 * std::log(prob));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (prob > phigh) {
        q = std::sqrt(-2.0 * std::log(1.0 - prob));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    q = prob - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

TestReport chi_square_uniform(std::span<const double> samples, int bins, double lo, double hi,
                              double alpha, std::string name) {
    if (samples.empty()) throw std::invalid_argument("empty sample");
    if (bins < 2) throw std::invalid_argument("need at least 2 bins");
    std::vector<std::size_t> counts(bins, 0);
    for (double v : samples) {
        int b = static_cast<int>((v - lo) / (hi - lo) * bins);
        b = std::clamp(b, 0, bins - 1);
        ++counts[static_cast<std::size_t>(b)];
    }
    const double expected = static_cast<double>(samples.size()) / bins;
    double stat = 0.0;
    for (std::size_t c : counts) {
        const double dev = static_cast<double>(c) - expected;
        stat += dev * dev / expected;
    }
    // Wilson-Hilferty chi-square quantile.
    const double k = bins - 1;
    const double z = normal_quantile(1.0 - alpha);
    const double h = 1.0 - 2.0 / (9.0 * k) + z * std::sqrt(2.0 / (9.0 * k));
    const double crit = k * h * h * h;
    return make_report(std::move(name), stat, crit, alpha, {samples.size()});
}

std::vector<double> recover_t(const SampleBatch& batch, const PCircleGrid& grid, int k) {
    if (k < 2 || k > batch.n) throw std::invalid_argument("coordinate index k out of range");
    if (!(batch.p == grid.p)) throw std::invalid_argument("grid exponent does not match batch");

    const int n = batch.n;
    const bool pinf = grid.p.is_inf();
    const double pe = grid.p.value();
    std::vector<double> out(batch.rows, 0.0);
    bool bad_magnitude = false;  // exceptions cannot cross the parallel region

#pragma omp parallel for schedule(static) reduction(|| : bad_magnitude)
    for (long long r = 0; r < static_cast<long long>(batch.rows); ++r) {
        auto row = batch.row(static_cast<std::size_t>(r));
        double scale = 1.0;
        if (batch.mode == SampleMode::volume) {
            const double m = pnorm(row, grid.p);
            if (m == 0.0) continue;  // degenerate row maps to the pole
            scale = 1.0 / m;
        }
        double prod = 1.0;
        double tk = 0.0;
        for (int j = n; j >= k; --j) {
            const double u = std::abs(row[j - 1]) * scale / prod;
            if (u > 1.0 + 1e-6) {
                bad_magnitude = true;
                break;
            }
            const double w = grid.w_of_cos(std::min(u, 1.0));
            if (j == k) {
                tk = grid.t_of_w(w);
                break;
            }
            const double y = pinf ? std::min(2.0 * w, 1.0) : std::pow(w, 1.0 / pe);
            prod *= y;
            if (prod < 1e-12) break;  // unresolvable tail; map the rest to the pole
        }
        out[static_cast<std::size_t>(r)] = tk;
    }
    if (bad_magnitude)
        throw std::runtime_error("coordinate magnitude above 1 beyond tolerance");
    return out;
}

std::vector<double> square_perimeter_position(const SampleBatch& batch) {
    if (batch.n != 2 || !batch.p.is_inf())
        throw std::invalid_argument("perimeter position needs p = inf, n = 2");
    std::vector<double> out(batch.rows);
    for (std::size_t r = 0; r < batch.rows; ++r) {
        const auto row = batch.row(r);
        const double x = row[0], y = row[1];
        // Walk the boundary counter-clockwise from (1,0); each side has
        // length 2 in every q-norm.
        double s;
        if (std::abs(x) >= std::abs(y))
            s = x > 0.0 ? (y >= 0.0 ? y : 8.0 + y) : 4.0 - y;
        else
            s = y > 0.0 ? 2.0 - x : 6.0 + x;
        out[r] = s;
    }
    return out;
}

std::string reports_to_json(std::span<const TestReport> reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        arr.push_back({{"test", r.name},
                       {"statistic", r.statistic},
                       {"critical_value", r.critical_value},
                       {"alpha", r.alpha},
                       {"N", r.sample_sizes},
                       {"verdict", r.verdict == Verdict::pass ? "pass" : "reject"}});
    }
    return arr.dump(2);
}

}  // namespace pball
