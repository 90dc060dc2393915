#ifndef CHEUN_POLYNOMIAL_HPP
#define CHEUN_POLYNOMIAL_HPP

#include <vector>

#include "cheun/types.hpp"

namespace cheun {

// Dense univariate polynomial with complex coefficients, ascending order.
class Poly {
public:
    Poly() : c_{cplx(0.0)} {}
    explicit Poly(std::vector<cplx> ascending);
    static Poly constant(cplx v) { return Poly({v}); }

    int degree() const;  // index of the highest structurally nonzero coefficient
    const std::vector<cplx>& coefficients() const { return c_; }
    cplx eval(cplx x) const;
    Poly derivative() const;

    Poly& operator*=(cplx s);
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(cplx s, Poly a) { return a *= s; }

    // All roots with multiplicity: companion-matrix eigenvalues followed by
    // one Newton polish step. Throws DegeneratePolynomial below degree 1.
    std::vector<cplx> roots() const;

private:
    std::vector<cplx> c_;
};

}  // namespace cheun

#endif
