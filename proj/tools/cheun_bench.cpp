// Timing comparison of the OpenMP batch kernels against their serial
// reference twins: series evaluation and residual scans over point grids.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cheun/batch.hpp"
#include "cheun/frobenius.hpp"

using namespace cheun;

namespace {

double ms_per_run(const std::function<void()>& body, int runs) {
    body();  // warm up
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < runs; ++i) body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / runs;
}

}  // namespace

int main(int argc, char** argv) {
    int n_points = argc > 1 ? std::atoi(argv[1]) : 20000;
    int order = argc > 2 ? std::atoi(argv[2]) : 120;

    std::mt19937_64 eng(42);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<cplx> zs;
    zs.reserve(n_points);
    for (int i = 0; i < n_points; ++i) {
        const double r = 0.45 * std::sqrt(unit(eng));
        const double th = 2.0 * 3.14159265358979323846 * unit(eng);
        zs.emplace_back(r * std::cos(th), r * std::sin(th));
    }

    const CheParams q = validate(0.3, cplx(0.8, 0.2), -0.4, 0.9, cplx(1.3, -0.1));
    const C2Fn fn = hc_fn(q, order);
    const CoeffFn a1 = [&q](cplx z) { return coeff_f(q, z); };
    const CoeffFn a0 = [&q](cplx z) { return coeff_g(q, z); };

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("points: %d, series order: %d\n\n", n_points, order);
    std::printf("%-24s %12s %12s %9s\n", "kernel", "serial [ms]", "openmp [ms]", "speedup");

    const double es = ms_per_run([&] { batch::eval_points_serial(fn, zs); }, 3);
    const double ep = ms_per_run([&] { batch::eval_points(fn, zs); }, 3);
    std::printf("%-24s %12.2f %12.2f %8.2fx\n", "eval_points", es, ep, es / ep);

    const double rs = ms_per_run([&] { batch::residual_scan_serial(a1, a0, fn, zs); }, 3);
    const double rp = ms_per_run([&] { batch::residual_scan(a1, a0, fn, zs); }, 3);
    std::printf("%-24s %12.2f %12.2f %8.2fx\n", "residual_scan", rs, rp, rs / rp);

    // sanity: identical outputs
    const auto a = batch::eval_points_serial(fn, zs);
    const auto b = batch::eval_points(fn, zs);
    for (std::size_t i = 0; i < zs.size(); ++i)
        if (a[i].value != b[i].value) {
            std::printf("MISMATCH at %zu\n", i);
            return 1;
        }
    std::printf("\nserial/openmp outputs identical\n");
    return 0;
}
