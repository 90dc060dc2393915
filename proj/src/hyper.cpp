#include "cheun/hyper.hpp"

#include <array>
#include <cmath>
#include <utility>
#include <vector>

namespace cheun {

namespace detail {

std::optional<long> nonpos_int_index(cplx w, double tol) {
    if (std::abs(w.imag()) > tol) return std::nullopt;
    const double r = std::round(w.real());
    if (r > 0.5 || std::abs(w.real() - r) > tol) return std::nullopt;
    return static_cast<long>(-r);
}

bool near_integer(cplx w, double tol) {
    return std::abs(w.imag()) <= tol &&
           std::abs(w.real() - std::round(w.real())) <= tol;
}

namespace {

// Error-cancelling accumulator (Kahan), componentwise on the complex parts.
struct KahanSum {
    cplx s{}, c{};
    void add(cplx x) {
        const cplx y = x - c;
        const cplx t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

// Generic pFq power series with upfront pole screening: a lower parameter
// that is a nonpositive integer must be preceded by upper-parameter
// termination (strictly earlier index).
template <std::size_t P, std::size_t Q>
cplx pfq_series(const std::array<cplx, P>& as, const std::array<cplx, Q>& bs,
                cplx x, const SeriesControl& ctl) {
    ctl.check();
    std::optional<long> na;
    for (const cplx& a : as) {
        auto n = nonpos_int_index(a);
        if (n && (!na || *n < *na)) na = n;
    }
    for (const cplx& b : bs) {
        auto nb = nonpos_int_index(b);
        if (nb && (!na || *na >= *nb))
            fail(errc::pole_parameter, "lower parameter hits a nonpositive integer");
    }

    KahanSum sum;
    cplx term = 1.0;
    sum.add(term);
    int quiet = 0;
    for (int k = 0; k < ctl.max_terms; ++k) {
        cplx ratio = x / (static_cast<double>(k) + 1.0);
        for (const cplx& a : as) ratio *= a + static_cast<double>(k);
        for (const cplx& b : bs) ratio /= b + static_cast<double>(k);
        term *= ratio;
        if (term == cplx(0.0)) return sum.s;  // terminating series
        sum.add(term);
        if (!is_finite(sum.s)) fail(errc::no_convergence, "series overflow");
        if (std::abs(term) <= ctl.rel_tol * std::abs(sum.s)) {
            if (++quiet >= ctl.stagnation_window) return sum.s;
        } else {
            quiet = 0;
        }
    }
    fail(errc::no_convergence, "pFq series did not converge within max_terms");
}

}  // namespace
}  // namespace detail

cplx cpow(cplx base, cplx s) {
    if (base == cplx(0.0)) {
        if (s.real() > 0.0) return 0.0;
        fail(errc::zero_base, "0^s requires Re(s) > 0");
    }
    if (s == cplx(0.0)) return 1.0;
    if (s == cplx(1.0)) return base;
    return std::exp(s * std::log(base));
}

cplx gamma_fn(cplx a) {
    // Lanczos, g = 7, 9 coefficients.
    static constexpr double pi = 3.14159265358979323846;
    static constexpr double coef[9] = {
        0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,  12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (a.real() < 0.5) {
        if (detail::nonpos_int_index(a))
            fail(errc::pole_parameter, "Gamma pole at a nonpositive integer");
        return pi / (std::sin(pi * a) * gamma_fn(1.0 - a));
    }
    const cplx z = a - 1.0;
    cplx x = coef[0];
    for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return std::sqrt(2.0 * pi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

namespace {

cplx lower_gamma_series(cplx a, cplx x, const SeriesControl& ctl = {}) {
    // gamma(a, x) = x^a e^{-x} / a * 1F1(1; 1+a; x)
    const cplx m = detail::pfq_series<1, 1>({cplx(1.0)}, {a + 1.0}, x, ctl);
    return cpow(x, a) * std::exp(-x) / a * m;
}

cplx upper_gamma_cf(cplx a, cplx x) {
    // Legendre continued fraction, modified Lentz.
    const double tiny = 1e-300;
    cplx b = x + 1.0 - a;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / (b == cplx(0.0) ? cplx(tiny) : b);
    cplx f = d;
    for (int i = 1; i <= 2000; ++i) {
        const cplx an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const cplx delta = d * c;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-15)
            return cpow(x, a) * std::exp(-x) * f;
    }
    fail(errc::no_convergence, "incomplete gamma continued fraction");
}

}  // namespace

cplx upper_gamma(cplx a, cplx x) {
    if (x == cplx(0.0)) {
        if (a.real() > 0.0) return gamma_fn(a);
        fail(errc::branch_cut, "Gamma(a, 0) requires Re(a) > 0");
    }
    if (x.real() < 0.0 && std::abs(x.imag()) <= 1e-12 * (1.0 + std::abs(x.real())) &&
        !detail::near_integer(a))
        fail(errc::branch_cut, "x on the negative real axis with non-integer a");

    if (a.real() <= 0.0) {
        // Lift to Re(a) > 0 and come back down through the recurrence.
        const int k = static_cast<int>(std::ceil(-a.real())) + 1;
        cplx res = upper_gamma(a + static_cast<double>(k), x);
        const cplx emx = std::exp(-x);
        for (int j = k - 1; j >= 0; --j) {
            const cplx aj = a + static_cast<double>(j);
            if (std::abs(aj) < 1e-12)
                fail(errc::pole_parameter, "recurrence step at a = 0");
            res = (res - cpow(x, aj) * emx) / aj;
        }
        return res;
    }
    if (std::abs(x) > 8.0 && x.real() > 0.0) return upper_gamma_cf(a, x);
    return gamma_fn(a) - lower_gamma_series(a, x);
}

namespace {

// d1 and d2 prefactors of the contiguous shift; exact zero when an upper
// parameter makes the shifted term vanish (terminated derivative).
cplx shift_factor(cplx num, cplx den) {
    if (num == cplx(0.0)) return 0.0;
    return num / den;
}

}  // namespace

C2Sample f11(cplx a, cplx b, cplx x, const SeriesControl& ctl) {
    C2Sample out;
    out.value = detail::pfq_series<1, 1>({a}, {b}, x, ctl);
    const cplx r1 = shift_factor(a, b);
    out.d1 = r1 == cplx(0.0) ? cplx(0.0)
                             : r1 * detail::pfq_series<1, 1>({a + 1.0}, {b + 1.0}, x, ctl);
    const cplx r2 = r1 == cplx(0.0) ? cplx(0.0) : r1 * shift_factor(a + 1.0, b + 1.0);
    out.d2 = r2 == cplx(0.0) ? cplx(0.0)
                             : r2 * detail::pfq_series<1, 1>({a + 2.0}, {b + 2.0}, x, ctl);
    return out;
}

C2Sample f22(cplx a1, cplx a2, cplx b1, cplx b2, cplx x, const SeriesControl& ctl) {
    C2Sample out;
    out.value = detail::pfq_series<2, 2>({a1, a2}, {b1, b2}, x, ctl);
    const cplx r1 = shift_factor(a1 * a2, b1 * b2);
    out.d1 = r1 == cplx(0.0)
                 ? cplx(0.0)
                 : r1 * detail::pfq_series<2, 2>({a1 + 1.0, a2 + 1.0}, {b1 + 1.0, b2 + 1.0}, x, ctl);
    const cplx r2 =
        r1 == cplx(0.0) ? cplx(0.0) : r1 * shift_factor((a1 + 1.0) * (a2 + 1.0), (b1 + 1.0) * (b2 + 1.0));
    out.d2 = r2 == cplx(0.0)
                 ? cplx(0.0)
                 : r2 * detail::pfq_series<2, 2>({a1 + 2.0, a2 + 2.0}, {b1 + 2.0, b2 + 2.0}, x, ctl);
    return out;
}

C2Sample laguerre(cplx n, cplx a, cplx x, const SeriesControl& ctl) {
    return f11(-n, a + 1.0, x, ctl);
}

C2Fn f11_fn(cplx a, cplx b, SeriesControl ctl) {
    return [=](cplx x) { return f11(a, b, x, ctl); };
}

C2Fn f22_fn(cplx a1, cplx a2, cplx b1, cplx b2, SeriesControl ctl) {
    return [=](cplx x) { return f22(a1, a2, b1, b2, x, ctl); };
}

// --- combinators ---------------------------------------------------------

C2Fn c2_const(cplx c) {
    return [=](cplx) { return C2Sample{c, 0.0, 0.0}; };
}

C2Fn c2_poly(std::vector<cplx> coeffs) {
    return [c = std::move(coeffs)](cplx z) {
        C2Sample s;
        for (std::size_t k = c.size(); k-- > 0;) {
            s.d2 = s.d2 * z + 2.0 * s.d1;
            s.d1 = s.d1 * z + s.value;
            s.value = s.value * z + c[k];
        }
        return s;
    };
}

C2Fn c2_add(C2Fn f, C2Fn g) {
    return [f = std::move(f), g = std::move(g)](cplx z) {
        const C2Sample a = f(z), b = g(z);
        return C2Sample{a.value + b.value, a.d1 + b.d1, a.d2 + b.d2};
    };
}

C2Fn c2_scale(cplx c, C2Fn f) {
    return [=, f = std::move(f)](cplx z) {
        const C2Sample a = f(z);
        return C2Sample{c * a.value, c * a.d1, c * a.d2};
    };
}

C2Fn c2_mul(C2Fn f, C2Fn g) {
    return [f = std::move(f), g = std::move(g)](cplx z) {
        const C2Sample a = f(z), b = g(z);
        return C2Sample{a.value * b.value,
                        a.d1 * b.value + a.value * b.d1,
                        a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2};
    };
}

C2Fn c2_exp_affine(cplx lambda, cplx mu) {
    return [=](cplx z) {
        const cplx e = std::exp(lambda * z + mu);
        return C2Sample{e, lambda * e, lambda * lambda * e};
    };
}

C2Fn c2_pow_shift(cplx center, cplx exponent) {
    return [=](cplx z) {
        const cplx w = z - center;
        const cplx v = cpow(w, exponent);
        return C2Sample{v, exponent * v / w, exponent * (exponent - 1.0) * v / (w * w)};
    };
}

C2Fn c2_compose_affine(C2Fn f, cplx scale, cplx shift) {
    return [=, f = std::move(f)](cplx z) {
        const C2Sample a = f(scale * z + shift);
        return C2Sample{a.value, scale * a.d1, scale * scale * a.d2};
    };
}

C2Fn c2_compose_reflect(C2Fn f) {
    return [f = std::move(f)](cplx z) {
        const C2Sample a = f(1.0 - z);
        return C2Sample{a.value, -a.d1, a.d2};
    };
}

}  // namespace cheun
