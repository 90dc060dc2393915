#include "cheun/batch.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

namespace cheun::batch {

namespace {

// Runs fn over every index, parallel or not; rethrows the exception of the
// smallest failing index so behavior does not depend on the schedule.
template <typename Body>
void indexed_for(std::size_t n, bool parallel, Body&& body) {
    std::vector<std::exception_ptr> errs(n);
    bool failed = false;
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                errs[static_cast<std::size_t>(i)] = std::current_exception();
#pragma omp atomic write
                failed = true;
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            try {
                body(i);
            } catch (...) {
                errs[i] = std::current_exception();
                failed = true;
            }
        }
    }
    if (failed)
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
}

std::vector<C2Sample> eval_impl(const C2Fn& fn, std::span<const cplx> zs, bool parallel) {
    std::vector<C2Sample> out(zs.size());
    indexed_for(zs.size(), parallel, [&](std::size_t i) { out[i] = fn(zs[i]); });
    return out;
}

ResidualReport scan_impl(const CoeffFn& a1, const CoeffFn& a0, const C2Fn& fn,
                         std::span<const cplx> zs, bool parallel) {
    ResidualReport rep;
    rep.points.assign(zs.begin(), zs.end());
    std::vector<cplx> raw(zs.size());
    std::vector<double> local_scale(zs.size(), 0.0);
    indexed_for(zs.size(), parallel, [&](std::size_t i) {
        const C2Sample s = fn(zs[i]);
        const cplx c1 = a1(zs[i]), c0 = a0(zs[i]);
        raw[i] = raw_residual(c1, c0, s);
        local_scale[i] = std::max({std::abs(s.d2), std::abs(c1 * s.d1), std::abs(c0 * s.value)});
    });
    // The reductions run serially in index order: identical results either way.
    for (double s : local_scale) rep.scale = std::max(rep.scale, s);
    rep.residuals.resize(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i)
        rep.residuals[i] = rep.scale > 0.0 ? std::abs(raw[i]) / rep.scale : 0.0;
    rep.max_residual =
        rep.residuals.empty() ? 0.0 : *std::max_element(rep.residuals.begin(), rep.residuals.end());
    return rep;
}

}  // namespace

std::vector<C2Sample> eval_points(const C2Fn& fn, std::span<const cplx> zs) {
    return eval_impl(fn, zs, true);
}

std::vector<C2Sample> eval_points_serial(const C2Fn& fn, std::span<const cplx> zs) {
    return eval_impl(fn, zs, false);
}

ResidualReport residual_scan(const CoeffFn& a1, const CoeffFn& a0, const C2Fn& fn,
                             std::span<const cplx> zs) {
    return scan_impl(a1, a0, fn, zs, true);
}

ResidualReport residual_scan_serial(const CoeffFn& a1, const CoeffFn& a0, const C2Fn& fn,
                                    std::span<const cplx> zs) {
    return scan_impl(a1, a0, fn, zs, false);
}

}  // namespace cheun::batch
