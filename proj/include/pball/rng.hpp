#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace pball {

// splitmix64 (Vigna 2015). 64 bits of state, one multiply-xor round per
// draw; cheap enough to hold one independent stream per sample row.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform on the open interval (0,1); safe to pass to log().
    double uniform01() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform on (-1,1).
    double uniform_sym() { return 2.0 * uniform01() - 1.0; }

    // Fair +-1.
    double sign_pm1() { return (next() >> 63) ? -1.0 : 1.0; }

    // Standard normal via Marsaglia's polar method.
    double normal() {
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        return u * std::sqrt(-2.0 * std::log(s) / s);
    }

private:
    std::uint64_t state_;
};

// MurmurHash3 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 33;
    z *= 0xFF51AFD7ED558CCDull;
    z ^= z >> 33;
    z *= 0xC4CEB9FE1A85EC53ull;
    z ^= z >> 33;
    return z;
}

// Independent substream for one row of a batch. The finalizer is bijective,
// so for a fixed seed distinct rows can never collide, and the result does
// not depend on which thread runs the row.
inline SplitMix64 row_stream(std::uint64_t seed, std::uint64_t row) {
    return SplitMix64(mix64(seed ^ mix64(row + 0x9E3779B97F4A7C15ull)));
}

// Gamma(shape, scale 1) variate, Marsaglia & Tsang (2000), with the usual
// boosting step for shape < 1 so small shapes (down to 1/8 and below) stay
// exact rather than degenerate.
inline double gamma_variate(SplitMix64& rng, double shape) {
    if (!(shape > 0.0)) throw std::invalid_argument("gamma shape must be positive");
    if (shape < 1.0) {
        const double g = gamma_variate(rng, shape + 1.0);
        return g * std::pow(rng.uniform01(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform01();
        if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace pball
