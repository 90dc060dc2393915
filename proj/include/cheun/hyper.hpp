#ifndef CHEUN_HYPER_HPP
#define CHEUN_HYPER_HPP

#include <optional>

#include "cheun/types.hpp"

namespace cheun {

// Principal-branch complex power exp(s Log base), Log with argument in
// (-pi, pi]. base = 0 is allowed only for Re(s) > 0.
cplx cpow(cplx base, cplx s);

// Complex Gamma function (Lanczos approximation, reflection for Re < 0.5).
cplx gamma_fn(cplx a);

// Upper incomplete gamma Gamma(a, x) on the principal branch. Small |x| uses
// Gamma(a) minus the lower-gamma Kummer series, large |x| with Re(x) > 0 the
// Legendre continued fraction; Re(a) <= 0 is lifted through
// Gamma(a, x) = (Gamma(a+1, x) - x^a e^{-x}) / a.
cplx upper_gamma(cplx a, cplx x);

// Kummer 1F1(a; b; x) with first and second x-derivatives taken through the
// contiguous shift d/dx 1F1(a;b;x) = (a/b) 1F1(a+1;b+1;x).
C2Sample f11(cplx a, cplx b, cplx x, const SeriesControl& ctl = {});

// Goursat 2F2(a1, a2; b1, b2; x), derivatives via the same parameter shift.
C2Sample f22(cplx a1, cplx a2, cplx b1, cplx b2, cplx x, const SeriesControl& ctl = {});

// Generalized Laguerre function in the normalization L(n, a; x) := 1F1(-n; a+1; x),
// i.e. unit value at x = 0. This differs from the binomial-normalized classical
// L_n^(a) by a constant factor, which every use site absorbs.
C2Sample laguerre(cplx n, cplx a, cplx x, const SeriesControl& ctl = {});

// Evaluator forms of the kernels (argument is the evaluation point itself).
C2Fn f11_fn(cplx a, cplx b, SeriesControl ctl = {});
C2Fn f22_fn(cplx a1, cplx a2, cplx b1, cplx b2, SeriesControl ctl = {});

// --- C2Fn combinators (chain and product rules) -------------------------

C2Fn c2_const(cplx c);
C2Fn c2_poly(std::vector<cplx> ascending_coeffs);
C2Fn c2_add(C2Fn f, C2Fn g);
C2Fn c2_scale(cplx c, C2Fn f);
C2Fn c2_mul(C2Fn f, C2Fn g);
C2Fn c2_exp_affine(cplx lambda, cplx mu);          // e^{lambda z + mu}
C2Fn c2_pow_shift(cplx center, cplx exponent);     // (z - center)^s, principal branch
C2Fn c2_compose_affine(C2Fn f, cplx scale, cplx shift);  // z -> f(scale z + shift)
C2Fn c2_compose_reflect(C2Fn f);                   // z -> f(1 - z)

namespace detail {
// Index n >= 0 such that w is (numerically) the nonpositive integer -n.
std::optional<long> nonpos_int_index(cplx w, double tol = 1e-12);
bool near_integer(cplx w, double tol = 1e-12);
}  // namespace detail

}  // namespace cheun

#endif
