#include <cmath>

#include "ccb/bigcomplex.hpp"
#include "ccb/hyp.hpp"
#include "ccb/scalar.hpp"

namespace ccb {

namespace {

constexpr unsigned kTermCap = 100000000; // 1e8 per the series contract

bool nonpositive_integer(Complex c) {
    return c.imag() == 0.0 && c.real() <= 0.0 && c.real() == std::floor(c.real());
}

BlockValue taylor_machine(Complex a, Complex b, Complex c, Complex z) {
    Complex sum = 1.0, term = 1.0;
    double prev = 1.0, last = 1.0;
    for (unsigned n = 0;; ++n) {
        if (n >= kTermCap) throw ConvergenceError("hyp2f1_taylor: term cap reached");
        term *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) /
                ((c + static_cast<double>(n)) * (n + 1.0)) * z;
        sum += term;
        prev = last;
        last = std::abs(term);
        if (last == 0.0) break;
        double tol = 1e-17 * std::abs(sum);
        if (n >= 1 && last < tol && prev < tol) break;
    }
    return {sum, 10.0 * last, Method::taylor};
}

BlockValue taylor_extended(Complex a, Complex b, Complex c, Complex z, unsigned digits) {
    PrecisionGuard guard(digits + 10);
    const BigComplex ba(a), bb(b), bc(c), bz(z);
    BigComplex sum(1.0), term(1.0);
    const BigReal tol_scale = pow(BigReal(10), -static_cast<int>(digits + 3));
    BigReal prev = 1, last = 1;
    for (unsigned n = 0;; ++n) {
        if (n >= kTermCap) throw ConvergenceError("hyp2f1_taylor: term cap reached");
        BigComplex bn(static_cast<double>(n));
        term = term * ((ba + bn) * (bb + bn) * bz) / ((bc + bn) * BigComplex(n + 1.0));
        sum += term;
        prev = last;
        last = abs(term);
        if (last == 0) break;
        BigReal tol = tol_scale * abs(sum);
        if (n >= 1 && last < tol && prev < tol) break;
    }
    double err = (10.0 * last).convert_to<double>();
    return {sum.to_double(), err, Method::taylor};
}

} // namespace

BlockValue hyp2f1_taylor(Complex a, Complex b, Complex c, Complex z, PrecisionSpec prec) {
    if (nonpositive_integer(c))
        throw DomainError("hyp2f1_taylor: c is a nonpositive integer");
    const double az = std::abs(z);
    if (prec.is_extended()) {
        if (!(az < 1.0)) throw DomainError("hyp2f1_taylor: |z| < 1 required");
        return taylor_extended(a, b, c, z, prec.digits);
    }
    if (!(az < 1.0 - 1e-6))
        throw DomainError("hyp2f1_taylor: |z| < 1 - 1e-6 required in machine mode");
    return taylor_machine(a, b, c, z);
}

BigReal hyp2f1_taylor_locus(const SpectralPoint& s, double w, unsigned digits) {
    s.validate();
    if (!(std::abs(w) < 1.0))
        throw DomainError("hyp2f1_taylor_locus: |w| < 1 required");
    PrecisionGuard guard(digits + 10);
    // (s)_n (1-s)_n = prod_{m<n} (lambda + m(m+1)) with lambda = s(1-s) >= 0,
    // so for w >= 0 the series has nonnegative terms: no cancellation.
    const BigReal lambda = BigReal(s.sigma) * (1 - BigReal(s.sigma)) + BigReal(s.t) * BigReal(s.t);
    const BigReal bw(w);
    BigReal sum = 1, term = 1;
    const BigReal tol_scale = pow(BigReal(10), -static_cast<int>(digits + 3));
    for (unsigned long n = 0;; ++n) {
        if (n >= kTermCap) throw ConvergenceError("hyp2f1_taylor_locus: term cap reached");
        term *= (lambda + BigReal(n) * BigReal(n + 1)) * bw / (BigReal(n + 1) * BigReal(n + 1));
        sum += term;
        if (abs(term) < tol_scale * abs(sum)) break;
    }
    return sum;
}

} // namespace ccb
