#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pball/samplers.hpp"

namespace pball {

enum class Verdict { pass, reject };

struct TestReport {
    std::string name;
    double statistic = 0.0;
    double critical_value = 0.0;
    double alpha = 0.0;
    std::vector<std::size_t> sample_sizes;
    Verdict verdict = Verdict::pass;  // pass <=> statistic < critical_value
};

// Asymptotic Kolmogorov critical value c(alpha)/sqrt(n_eff) with
// c(alpha) = sqrt(-ln(alpha/2)/2). For two samples use n_eff = n*m/(n+m).
double ks_critical(double alpha, double n_effective);

TestReport ks_one_sample(std::span<const double> samples,
                         const std::function<double(double)>& cdf,
                         double alpha, std::string name = "ks1");
TestReport ks_one_sample(std::span<const double> samples, const CdfTable& cdf,
                         double alpha, std::string name = "ks1");

// Tie-aware two-sample statistic; atoms shared by both samples are fine.
TestReport ks_two_sample(std::span<const double> a, std::span<const double> b,
                         double alpha, std::string name = "ks2");

// Pearson chi-square against a uniform law over `bins` equal-width cells
// of [lo, hi]. Critical value via the Wilson-Hilferty approximation.
TestReport chi_square_uniform(std::span<const double> samples, int bins,
                              double lo, double hi, double alpha,
                              std::string name = "chi2");

// Standard normal quantile (Acklam's rational approximation).
double normal_quantile(double prob);

// Slice parameters T_k recovered from batch rows: peel coordinates n..k+1
// by dividing out the accumulated sin_p factors, then invert cos_p on
// coordinate k. Volume batches are projected to the boundary first.
// Coordinate magnitudes beyond 1 + 1e-6 raise std::runtime_error.
std::vector<double> recover_t(const SampleBatch& batch, const PCircleGrid& grid, int k);

// Perimeter position in [0, 8) of points on the boundary of the square
// (p = inf, n = 2); used for uniformity checks.
std::vector<double> square_perimeter_position(const SampleBatch& batch);

std::string reports_to_json(std::span<const TestReport> reports);

}  // namespace pball
