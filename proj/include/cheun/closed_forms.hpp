#ifndef CHEUN_CLOSED_FORMS_HPP
#define CHEUN_CLOSED_FORMS_HPP

#include "cheun/params.hpp"

namespace cheun {

enum class ClosedFormCase { case1_alpha_zero, case2_sigma_zero, case3_sigma_4p_alpha };

// Explicit solutions on the special parameter loci where the reduced
// equation for w = u' (up to a prefactor) collapses to Kummer form:
//   case 1: alpha = 0, delta = -1, sigma = 4p + gamma - 1   (free p, gamma)
//   case 2: sigma = 0, delta = -1, gamma = -4p(1+alpha)     (free p, alpha)
//   case 3: sigma = 4p alpha, gamma = -1, delta = 4p(1+alpha)
// w1/w2 solve the reduced w-equation (coefficients w_a1, w_a0); u1/u2 solve
// the full equation on the locus. Antiderivative branches are built by
// term-wise integration (a 2F2 in closed form), never through Meijer G; the
// additive integration constants are solved from the equation itself via
// residual linearity and stored alongside.
struct ClosedFormFamily {
    ClosedFormCase which;
    CheParams locus;
    C2Fn w1, w2;
    C2Fn u1, u2;
    cplx u1_constant{};
    cplx u2_constant{};
    CoeffFn w_a1, w_a0;
};

ClosedFormFamily case1_family(cplx p, cplx gamma);
ClosedFormFamily case2_family(cplx p, cplx alpha);
ClosedFormFamily case3_family(cplx p, cplx alpha);

// Case 3 assembled from the case-2 family through the z -> 1-z involution
// (parameters mapped by symmetry_map); agrees with case3_family.
ClosedFormFamily case3_family_via_symmetry(cplx p, cplx alpha);

}  // namespace cheun

#endif
