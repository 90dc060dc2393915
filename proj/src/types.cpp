#include "cheun/types.hpp"

namespace cheun {

const char* to_string(errc c) noexcept {
    switch (c) {
        case errc::zero_p: return "ZeroP";
        case errc::non_finite: return "NonFinite";
        case errc::singular_point: return "SingularPoint";
        case errc::g_zero: return "GZero";
        case errc::pole_parameter: return "PoleParameter";
        case errc::no_convergence: return "NoConvergence";
        case errc::branch_cut: return "BranchCut";
        case errc::zero_base: return "ZeroBase";
        case errc::out_of_disk: return "OutOfDisk";
        case errc::resonant_gamma: return "ResonantGamma";
        case errc::not_applicable: return "NotApplicable";
        case errc::degenerate_branches: return "DegenerateBranches";
        case errc::not_sigma_zero: return "NotSigmaZero";
        case errc::degenerate_rn: return "DegenerateRn";
        case errc::zero_gamma_n: return "ZeroGammaN";
        case errc::c0_undetermined: return "C0Undetermined";
        case errc::degenerate_gamma: return "DegenerateGamma";
        case errc::degenerate_alpha: return "DegenerateAlpha";
        case errc::degenerate_polynomial: return "DegeneratePolynomial";
        case errc::path_too_close_to_singularity: return "PathTooCloseToSingularity";
        case errc::step_underflow: return "StepUnderflow";
    }
    return "UnknownError";
}

}  // namespace cheun
