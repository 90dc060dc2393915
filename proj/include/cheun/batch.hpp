#ifndef CHEUN_BATCH_HPP
#define CHEUN_BATCH_HPP

#include <span>
#include <vector>

#include "cheun/residual.hpp"

namespace cheun::batch {

// Point-parallel kernels. Every kernel has a serial reference twin that
// performs bit-identical arithmetic; the parallel versions only distribute
// independent points across threads and keep the output ordered by input
// index. Exceptions raised at a point are rethrown for the smallest failing
// index, so both versions also fail identically.

std::vector<C2Sample> eval_points(const C2Fn& fn, std::span<const cplx> zs);
std::vector<C2Sample> eval_points_serial(const C2Fn& fn, std::span<const cplx> zs);

ResidualReport residual_scan(const CoeffFn& a1, const CoeffFn& a0, const C2Fn& fn,
                             std::span<const cplx> zs);
ResidualReport residual_scan_serial(const CoeffFn& a1, const CoeffFn& a0, const C2Fn& fn,
                                    std::span<const cplx> zs);

}  // namespace cheun::batch

#endif
