#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pball/geometry.hpp"
#include "pball/rng.hpp"

namespace pball {

enum class SampleMode { volume, surface };
enum class Algorithm { squig, pnormal };

// All batch generators come in two drivers over the same row kernel: a plain
// serial loop (the reference) and an OpenMP parallel-for. Rows own derived
// RNG substreams, so both produce bit-identical batches.
enum class Execution { serial, openmp };

struct SampleBatch {
    Exponent p;
    Exponent q;
    int n = 0;
    SampleMode mode = SampleMode::volume;
    Algorithm algorithm = Algorithm::squig;
    std::uint64_t seed = 0;
    std::size_t rows = 0;
    std::vector<double> data;  // row-major, rows x n

    std::span<const double> row(std::size_t i) const { return {data.data() + i * n, static_cast<std::size_t>(n)}; }
    std::span<double> row(std::size_t i) { return {data.data() + i * n, static_cast<std::size_t>(n)}; }
};

// Inverse-CDF table for the slice parameter T_k: cumulative of
// sin_p^{k-2} dt (volume) or sin_p^{k-2} dLq (surface) over the grid knots,
// inverted by interpolation. Flat stretches resolve to the left-most knot.
struct InverseCdfTable {
    int k = 2;
    bool arc_weight = false;
    const PCircleGrid* grid = nullptr;
    std::vector<double> u;  // CDF values at the grid knots, 0 .. 1

    // Curve point (cos_p T, sin_p T) at the T_k quantile of uv.
    void sample_xy(double uv, double& xk, double& yk) const;
};

struct SquigOptions {
    // Bypass the volume-projection shortcut taken at p in {1, 2, inf} and
    // always sample through the boundary-weighted tables.
    bool force_table_path = false;
    Execution exec = Execution::openmp;
};

// Coordinate-recursive generator: for k = 2..n draw T_k from its slice law,
// set coordinate k to cos_p(T_k) and shrink the previous ones by sin_p(T_k),
// then attach independent signs. Volume mode additionally scales the row by
// U^{1/n}; the slice laws alone only ever produce boundary points.
class SquigSampler {
public:
    SquigSampler(const PCircleGrid& grid, int n, SampleMode mode, SquigOptions opts = {});

    SampleBatch sample(std::size_t count, std::uint64_t seed) const;

    const InverseCdfTable& table(int k) const;
    bool uses_projection_shortcut() const { return delegate_; }

private:
    void fill_row(std::span<double> row, SplitMix64& rng) const;

    const PCircleGrid* grid_;
    int n_;
    SampleMode mode_;
    SquigOptions opts_;
    bool delegate_ = false;
    std::vector<InverseCdfTable> tables_;  // index k-2
};

SampleBatch squig_sample(const PCircleGrid& grid, int n, SampleMode mode,
                         std::size_t count, std::uint64_t seed, SquigOptions opts = {});

struct PNormalOptions {
    Execution exec = Execution::openmp;
};

// i.i.d. p-normal coordinates normalized to the boundary; volume mode
// rescales by U^{1/n}, surface mode keeps the projection as-is. The p = inf
// volume case short-circuits to coordinates uniform on (-1,1)^n.
SampleBatch pnormal_sample(Exponent p, int n, SampleMode mode,
                           std::size_t count, std::uint64_t seed, PNormalOptions opts = {});

}  // namespace pball
