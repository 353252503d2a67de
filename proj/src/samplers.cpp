#include "pball/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pball/pnormal.hpp"

namespace pball {

namespace {

// After scaling by a radius < 1 a row can still measure a few ulp above 1
// under re-evaluation; pull it decisively inside the closed ball.
void clamp_into_ball(std::span<double> row, Exponent p) {
    const double m = pnorm(row, p);
    if (m > 1.0) {
        const double shrink = (1.0 - 8.0 * std::numeric_limits<double>::epsilon()) / m;
        for (double& v : row) v *= shrink;
    }
}

bool projection_equality_case(Exponent p) {
    return p.is_inf() || p.value() == 1.0 || p.value() == 2.0;
}

void check_batch_args(int n, std::size_t count) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (count < 1) throw std::invalid_argument("batch size must be >= 1");
}

template <typename Kernel>
void run_rows(std::size_t count, Execution exec, const Kernel& kernel) {
    if (exec == Execution::openmp) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            kernel(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < count; ++i) kernel(i);
    }
}

}  // namespace

void InverseCdfTable::sample_xy(double uv, double& xk, double& yk) const {
    const auto& knots = *grid;
    // left-most knot with u >= uv, so flat CDF stretches resolve to the
    // earliest parameter
    auto it = std::lower_bound(u.begin(), u.end(), uv);
    std::size_t j = static_cast<std::size_t>(it - u.begin());
    if (j == 0) {
        xk = knots.x.front();
        yk = knots.y.front();
        return;
    }
    j = std::min(j, u.size() - 1);
    const std::size_t i = j - 1;
    const double du = u[j] - u[i];
    const double s = du > 0.0 ? (uv - u[i]) / du : 1.0;
    double xs = knots.x[i] + s * (knots.x[j] - knots.x[i]);
    double ys = knots.y[i] + s * (knots.y[j] - knots.y[i]);
    if (!knots.p.is_inf()) {
        const double nm = pnorm(xs, ys, knots.p);
        xs /= nm;
        ys /= nm;
    }
    xk = xs;
    yk = ys;
}

SquigSampler::SquigSampler(const PCircleGrid& grid, int n, SampleMode mode, SquigOptions opts)
    : grid_(&grid), n_(n), mode_(mode), opts_(opts) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (grid.size() < 2) throw std::invalid_argument("empty grid");

    delegate_ = mode == SampleMode::surface && !opts.force_table_path &&
                projection_equality_case(grid.p);
    const bool arc = mode == SampleMode::surface && !delegate_;

    tables_.reserve(n >= 2 ? n - 1 : 0);
    for (int k = 2; k <= n; ++k) {
        InverseCdfTable table;
        table.k = k;
        table.arc_weight = arc;
        table.grid = grid_;
        table.u = cumulative_sin_power(grid, k - 2, arc);
        const double total = table.u.back();
        for (auto& v : table.u) v /= total;
        tables_.push_back(std::move(table));
    }
}

const InverseCdfTable& SquigSampler::table(int k) const {
    if (k < 2 || k > n_) throw std::invalid_argument("table index k out of range");
    return tables_[static_cast<std::size_t>(k - 2)];
}

void SquigSampler::fill_row(std::span<double> row, SplitMix64& rng) const {
    const int n = n_;
    if (n == 1) {
        row[0] = rng.sign_pm1();
        if (mode_ == SampleMode::volume) row[0] *= rng.uniform01();
        return;
    }

    row[0] = 1.0;
    for (int k = 2; k <= n; ++k) {
        const double u = rng.uniform01();
        double xk, yk;
        tables_[static_cast<std::size_t>(k - 2)].sample_xy(u, xk, yk);
        row[k - 1] = xk;
        for (int i = 0; i < k - 1; ++i) row[i] *= yk;
    }
    for (int i = 0; i < n; ++i) row[i] *= rng.sign_pm1();

    if (mode_ == SampleMode::volume) {
        const double r = std::pow(rng.uniform01(), 1.0 / n);
        for (double& v : row) v *= r;
        clamp_into_ball(row, grid_->p);
    } else if (delegate_) {
        // Shortcut for the equality cases: a volume sample projected to the
        // boundary, drawing the (cancelled) radius anyway so both paths
        // consume the stream identically.
        const double r = std::pow(rng.uniform01(), 1.0 / n);
        for (double& v : row) v *= r;
        const double m = pnorm(row, grid_->p);
        for (double& v : row) v /= m;
    }
}

SampleBatch SquigSampler::sample(std::size_t count, std::uint64_t seed) const {
    check_batch_args(n_, count);
    SampleBatch batch{grid_->p, grid_->q, n_, mode_, Algorithm::squig, seed, count};
    batch.data.resize(count * static_cast<std::size_t>(n_));
    run_rows(count, opts_.exec, [&](std::size_t i) {
        SplitMix64 rng = row_stream(seed, i);
        fill_row(batch.row(i), rng);
    });
    return batch;
}

SampleBatch squig_sample(const PCircleGrid& grid, int n, SampleMode mode, std::size_t count,
                         std::uint64_t seed, SquigOptions opts) {
    return SquigSampler(grid, n, mode, opts).sample(count, seed);
}

namespace {

void fill_pnormal_row(std::span<double> row, int n, Exponent p, SampleMode mode,
                      SplitMix64& rng) {
    if (n == 1) {
        row[0] = rng.sign_pm1();
        if (mode == SampleMode::volume) row[0] *= rng.uniform01();
        return;
    }

    if (p.is_inf()) {
        if (mode == SampleMode::volume) {
            // Coordinates uniform on (-1,1)^n are already volume-uniform in
            // the max-norm ball; skip the projection round trip.
            for (int i = 0; i < n; ++i) row[i] = rng.uniform01();
            for (int i = 0; i < n; ++i) row[i] *= rng.sign_pm1();
            return;
        }
        for (int i = 0; i < n; ++i) row[i] = rng.uniform01();
        double m = 0.0;
        for (int i = 0; i < n; ++i) m = std::max(m, row[i]);
        for (int i = 0; i < n; ++i) row[i] /= m;
        for (int i = 0; i < n; ++i) row[i] *= rng.sign_pm1();
        return;
    }

    double r;
    do {
        for (int i = 0; i < n; ++i) row[i] = pnormal_magnitude(p, rng);
        r = pnorm(row, p);
    } while (r == 0.0);
    for (int i = 0; i < n; ++i) row[i] /= r;
    for (int i = 0; i < n; ++i) row[i] *= rng.sign_pm1();

    if (mode == SampleMode::volume) {
        const double radius = std::pow(rng.uniform01(), 1.0 / n);
        for (double& v : row) v *= radius;
        clamp_into_ball(row, p);
    }
}

}  // namespace

SampleBatch pnormal_sample(Exponent p, int n, SampleMode mode, std::size_t count,
                           std::uint64_t seed, PNormalOptions opts) {
    check_batch_args(n, count);
    SampleBatch batch{p, p, n, mode, Algorithm::pnormal, seed, count};
    batch.data.resize(count * static_cast<std::size_t>(n));
    run_rows(count, opts.exec, [&](std::size_t i) {
        SplitMix64 rng = row_stream(seed, i);
        fill_pnormal_row(batch.row(i), n, p, mode, rng);
    });
    return batch;
}

}  // namespace pball
