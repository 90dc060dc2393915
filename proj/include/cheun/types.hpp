#ifndef CHEUN_TYPES_HPP
#define CHEUN_TYPES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace cheun {

using cplx = std::complex<double>;

// Value together with the first two derivatives at a point.
struct C2Sample {
    cplx value{};
    cplx d1{};
    cplx d2{};
};

// Evaluator mapping a complex point to (value, d1, d2). All evaluators built
// by this library are pure and reentrant; they may be called concurrently.
using C2Fn = std::function<C2Sample(cplx)>;

// Pointwise coefficient of a linear ODE.
using CoeffFn = std::function<cplx(cplx)>;

enum class errc {
    zero_p,
    non_finite,
    singular_point,
    g_zero,
    pole_parameter,
    no_convergence,
    branch_cut,
    zero_base,
    out_of_disk,
    resonant_gamma,
    not_applicable,
    degenerate_branches,
    not_sigma_zero,
    degenerate_rn,
    zero_gamma_n,
    c0_undetermined,
    degenerate_gamma,
    degenerate_alpha,
    degenerate_polynomial,
    path_too_close_to_singularity,
    step_underflow,
};

const char* to_string(errc c) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what_arg)
        : std::runtime_error(std::string(to_string(code)) + ": " + what_arg),
          code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw error(code, msg);
}

inline bool is_finite(cplx v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// Controls truncation of the hypergeometric power series. A series is
// accepted once `stagnation_window` consecutive terms fall below
// rel_tol * |partial sum|.
struct SeriesControl {
    double rel_tol = 1e-14;
    int max_terms = 10000;
    int stagnation_window = 3;

    void check() const {
        if (!(rel_tol > 0.0) || max_terms < 10 || stagnation_window < 1)
            throw std::invalid_argument("SeriesControl: rel_tol > 0, max_terms >= 10 required");
    }
};

}  // namespace cheun

#endif
