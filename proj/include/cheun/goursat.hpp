#ifndef CHEUN_GOURSAT_HPP
#define CHEUN_GOURSAT_HPP

#include <optional>
#include <vector>

#include "cheun/params.hpp"
#include "cheun/polynomial.hpp"

namespace cheun {

// Expansion of the reduced derivative solution w (the sigma = 0 case at
// branch s = -gamma) in Kummer functions,
//   w = sum_n a_n 1F1(alpha0 + n; gamma0 + n; s0 z),
// with the left-termination initialization gamma0 = 1 + delta - gamma,
// alpha0 = 1 + alpha - gamma, s0 = -4p, a_0 = 1 (this makes R_0 = 0).
// Term-wise integration of z^{-gamma} w produces the 2F2 form of u.
struct GoursatExpansion {
    CheParams params;  // sigma = 0 on this locus
    cplx alpha0, gamma0, s0;
    std::vector<cplx> coeffs;  // a_0 .. a_N, empty until computed
    std::optional<cplx> C0;    // integration constant of u; unset until chosen
};

// Recurrence coefficients R_n a_n + Q_{n-1} a_{n-1} + P_{n-2} a_{n-2} = 0.
struct Rqp {
    cplx R, Q, P;
};

// Requires |sigma| <= tol_class and R_n != 0 for 1 <= n <= requested_N
// (equivalently gamma - delta not a positive integer <= requested_N).
GoursatExpansion init_expansion(const CheParams& q, int requested_N,
                                double tol_class = 1e-12);

// R_n, Q_n, P_n with gamma_n = gamma0 + n, alpha_n = alpha0 + n.
Rqp rqp(int n, const GoursatExpansion& e);

// Fills a_0..a_N through the forward recurrence (a_{-1} = 0, a_0 = 1).
GoursatExpansion compute_coefficients(GoursatExpansion e, int N);

// Partial sum of the 1F1 expansion and its derivatives at z.
C2Sample eval_w(const GoursatExpansion& e, cplx z, const SeriesControl& ctl = {});

// u = C0 + z^{1-gamma} sum_n a_n 2F2(1-gamma, alpha0+n; 2-gamma, gamma0+n; s0 z),
// normalized so that d(u - C0)/dz = (1-gamma) z^{-gamma} w term by term.
// Requires C0 to be set and gamma != 1.
C2Sample eval_u(const GoursatExpansion& e, cplx z, const SeriesControl& ctl = {});

// The residual of u = U + C0 is Res(U) + C0 g(z); solves for C0 at z_star.
// On this locus g = 4 p alpha / (z-1), so alpha = 0 leaves C0 unconstrained.
cplx determine_C0(const GoursatExpansion& e, cplx z_star, const SeriesControl& ctl = {});

// Coefficients of the equation satisfied by w (for residual checks).
CoeffFn goursat_w_a1(const CheParams& q);
CoeffFn goursat_w_a0(const CheParams& q);

enum class TerminationBranch { delta_eq_minus_n, alpha_minus_gamma_eq_minus_n };

// a_N as an exact polynomial in p of degree N, built by running the
// recurrence on dense coefficient lists (R_n is p-free and divided out at
// each step; Q_n and P_n are affine in p). The branch constraint delta = -N
// or alpha - gamma = -N is applied to the free parameters first.
Poly termination_polynomial(int N, TerminationBranch branch, cplx gamma, cplx free_value);

// Roots of a termination polynomial, each checked to actually annihilate it.
std::vector<cplx> find_termination_p(const Poly& poly);

struct TerminationCase {
    int N;
    TerminationBranch branch;
    cplx gamma, delta, alpha;
    Poly aN;
    std::vector<cplx> p_roots;
};

// Convenience wrapper: polynomial, roots, and the branch-resolved parameters.
TerminationCase termination_case(int N, TerminationBranch branch, cplx gamma,
                                 cplx free_value);

}  // namespace cheun

#endif
