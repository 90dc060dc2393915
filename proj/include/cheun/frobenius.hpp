#ifndef CHEUN_FROBENIUS_HPP
#define CHEUN_FROBENIUS_HPP

#include <vector>

#include "cheun/params.hpp"

namespace cheun {

// Truncated Frobenius series z^exponent * sum c_k z^k about z = 0 for the
// canonical confluent Heun equation. c_0 = 1 always; for exponent 0 the
// first coefficient is c_1 = -sigma/gamma.
struct PowerSeries {
    cplx exponent;             // 0 or 1 - gamma
    std::vector<cplx> coeffs;  // c_0 .. c_N
    CheParams params;
};

enum class FrobeniusBranch {
    analytic,         // exponent 0, the confluent Heun function itself
    one_minus_gamma,  // the second local solution z^{1-gamma} (...)
};

// Coefficients from matching powers of z in z(z-1) times the equation; the
// relation is three-term in k. Non-resonant parameters only: gamma must not
// be a nonpositive integer for the analytic branch, 2-gamma must not be one
// for the other branch (logarithmic cases are rejected).
PowerSeries frobenius_coefficients(const CheParams& q, FrobeniusBranch branch, int N);

// Evaluates the series and its first two derivatives at z.
C2Sample eval_series(const PowerSeries& s, cplx z);
C2Fn series_fn(PowerSeries s);

inline constexpr double default_r_max = 0.5;

// The confluent Heun function HC (analytic branch, HC(0) = 1) as a truncated
// series of order N, restricted to |z| <= r_max < 1.
C2Sample hc_eval(const CheParams& q, cplx z, int N, double r_max = default_r_max);
C2Fn hc_fn(const CheParams& q, int N, double r_max = default_r_max);

// The exponent-(1-gamma) local solution z^{1-gamma} (1 + ...), principal
// branch of z^{1-gamma}; gamma = 1 (coincident exponents) is rejected.
C2Sample second_solution_eval(const CheParams& q, cplx z, int N, double r_max = default_r_max);
C2Fn second_solution_fn(const CheParams& q, int N, double r_max = default_r_max);

}  // namespace cheun

#endif
