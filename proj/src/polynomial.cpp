#include "cheun/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace cheun {

Poly::Poly(std::vector<cplx> ascending) : c_(std::move(ascending)) {
    if (c_.empty()) c_.push_back(0.0);
}

int Poly::degree() const {
    for (std::size_t k = c_.size(); k-- > 0;)
        if (c_[k] != cplx(0.0)) return static_cast<int>(k);
    return 0;
}

cplx Poly::eval(cplx x) const {
    cplx v = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) v = v * x + c_[k];
    return v;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<cplx> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Poly(std::move(d));
}

Poly& Poly::operator*=(cplx s) {
    for (cplx& v : c_) v *= s;
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<cplx> r(std::max(a.c_.size(), b.c_.size()), cplx(0.0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
    std::vector<cplx> r(a.c_.size() + b.c_.size() - 1, cplx(0.0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
}

std::vector<cplx> Poly::roots() const {
    const int n = degree();
    double mag = 0.0;
    for (const cplx& v : c_) mag = std::max(mag, std::abs(v));
    if (n < 1 || mag == 0.0 || std::abs(c_[n]) < 1e-14 * mag)
        fail(errc::degenerate_polynomial, "degree < 1 or vanishing leading coefficient");

    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -c_[i] / c_[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        fail(errc::no_convergence, "companion eigenvalue iteration failed");

    const Poly dp = derivative();
    std::vector<cplx> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        cplx r = es.eigenvalues()(i);
        const cplx fp = dp.eval(r);
        if (fp != cplx(0.0)) {
            const cplx step = eval(r) / fp;
            if (std::abs(step) < 0.1 * (1.0 + std::abs(r))) r -= step;
        }
        out.push_back(r);
    }
    std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

}  // namespace cheun
