// Throughput comparison of the serial reference row driver against the
// OpenMP driver, for all four generators. Also asserts the two drivers
// produce bit-identical batches.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "pball/samplers.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* name, std::size_t rows, double serial_s, double parallel_s) {
    std::printf("%-24s %10.3f Mrow/s serial %10.3f Mrow/s openmp   speedup %.2fx\n", name,
                rows / serial_s / 1e6, rows / parallel_s / 1e6, serial_s / parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t rows = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;
    const int n = 3;
    const pball::Exponent p(1.5);

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; both drivers run serially\n");
#endif
    std::printf("p = %s, n = %d, rows = %zu\n\n", p.str().c_str(), n, rows);

    const pball::PCircleGrid grid = pball::build_grid(p, p, 100000);

    const auto run_squig = [&](pball::SampleMode mode, const char* name) {
        pball::SquigOptions serial{true, pball::Execution::serial};
        pball::SquigOptions parallel{true, pball::Execution::openmp};
        pball::SquigSampler sampler_s(grid, n, mode, serial);
        pball::SquigSampler sampler_p(grid, n, mode, parallel);
        auto t0 = Clock::now();
        const auto a = sampler_s.sample(rows, 7);
        const double ts = seconds_since(t0);
        t0 = Clock::now();
        const auto b = sampler_p.sample(rows, 7);
        const double tp = seconds_since(t0);
        if (a.data != b.data) {
            std::fprintf(stderr, "%s: serial and openmp batches differ!\n", name);
            std::exit(1);
        }
        report(name, rows, ts, tp);
    };
    run_squig(pball::SampleMode::volume, "squig volume");
    run_squig(pball::SampleMode::surface, "squig surface");

    const auto run_pnormal = [&](pball::SampleMode mode, const char* name) {
        auto t0 = Clock::now();
        const auto a = pball::pnormal_sample(p, n, mode, rows, 7, {pball::Execution::serial});
        const double ts = seconds_since(t0);
        t0 = Clock::now();
        const auto b = pball::pnormal_sample(p, n, mode, rows, 7, {pball::Execution::openmp});
        const double tp = seconds_since(t0);
        if (a.data != b.data) {
            std::fprintf(stderr, "%s: serial and openmp batches differ!\n", name);
            std::exit(1);
        }
        report(name, rows, ts, tp);
    };
    run_pnormal(pball::SampleMode::volume, "pnormal volume");
    run_pnormal(pball::SampleMode::surface, "pnormal surface");

    return 0;
}
