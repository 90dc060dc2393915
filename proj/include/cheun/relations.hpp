#ifndef CHEUN_RELATIONS_HPP
#define CHEUN_RELATIONS_HPP

#include <span>

#include "cheun/params.hpp"

namespace cheun {

inline constexpr double default_tol_class = 1e-12;

// Flag set of the reducible parameter cases; all applicable flags are kept
// (the cases can overlap). Empty set means generic parameters.
struct CaseTag {
    bool alpha_zero = false;
    bool sigma_zero = false;
    bool sigma_eq_4p_alpha = false;

    bool generic() const { return !(alpha_zero || sigma_zero || sigma_eq_4p_alpha); }
    bool operator==(const CaseTag&) const = default;
};

CaseTag classify(const CheParams& q, double tol_class = default_tol_class);

enum class ReductionCase { alpha_zero, sigma_zero, sigma_eq_4p_alpha };
enum class SigmaZeroBranch { s_one, s_minus_gamma };
enum class Sigma4pAlphaBranch { s_one, s_minus_delta };

// Reduction certificate: the derivative of the local solution equals
// scale * prefactor(z) * HC(target; z), with prefactor z^s or (z-1)^s.
// The scale comes from lowest-order series matching at z = 0; for the
// s = -delta branch it refers to the z = 1 local normalization and is
// checked at coefficient level only.
struct DerivRelation {
    ReductionCase reduction;
    cplx s;                  // 0 for the alpha_zero case
    int prefactor_center;    // 0 -> z^s, 1 -> (z-1)^s
    CheParams target;
    cplx scale;
};

DerivRelation relation_alpha_zero(const CheParams& q, double tol_class = default_tol_class);
DerivRelation relation_sigma_zero(const CheParams& q, SigmaZeroBranch branch,
                                  double tol_class = default_tol_class);
DerivRelation relation_sigma_4palpha(const CheParams& q, Sigma4pAlphaBranch branch,
                                     double tol_class = default_tol_class);

// Coefficients of the equation satisfied by w = u' / prefactor, assembled
// from the derivative equation plus the prefactor shift. For a valid
// certificate they coincide with coeff_f/coeff_g of the target parameters.
OdeCoeffs transformed_coeffs(const CheParams& q, const DerivRelation& rel, cplx z);

// Max pointwise deviation between the transformed coefficients and the
// canonical coefficients of rel.target over the given points.
double verify_relation_coeffs(const CheParams& q, const DerivRelation& rel,
                              std::span<const cplx> zs);

struct RatioCheck {
    cplx scale;            // mean of u'(z) / (prefactor(z) HC_target(z))
    double max_deviation;  // max |ratio - mean| / |mean|
};

// Solution-level check of the certificate: ratio constancy of
// u'(z) / (prefactor(z) HC_target(z)) over zs. The s = -gamma branch reads
// u as the exponent-(1-gamma) local solution; the s = -delta branch is not
// supported here (it tracks the local solution at z = 1).
RatioCheck verify_relation_solutions(const CheParams& q, const DerivRelation& rel,
                                     std::span<const cplx> zs, int series_order = 80);

// Involution induced by z -> 1-z on the equation: (p, gamma, delta, alpha,
// sigma) -> (-p, delta, gamma, alpha, sigma - 4 p alpha). Exchanges the
// sigma = 0 and sigma = 4 p alpha cases.
CheParams symmetry_map(const CheParams& q);

}  // namespace cheun

#endif
