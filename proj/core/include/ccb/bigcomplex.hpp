#ifndef CCB_BIGCOMPLEX_HPP
#define CCB_BIGCOMPLEX_HPP

#include <complex>

#include "ccb/precision.hpp"

namespace ccb {

// Minimal complex arithmetic over BigReal.  std::complex is not usable with
// expression-template number types, and only a handful of operations are
// needed by the extended-precision paths.
struct BigComplex {
    BigReal re, im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}
    explicit BigComplex(double r) : re(r), im(0) {}

    std::complex<double> to_double() const {
        return {re.convert_to<double>(), im.convert_to<double>()};
    }
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
}
inline BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
}
inline BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline BigComplex operator*(const BigReal& a, const BigComplex& b) {
    return {a * b.re, a * b.im};
}
inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline BigComplex operator/(const BigComplex& a, const BigReal& b) {
    return {a.re / b, a.im / b};
}
inline BigComplex& operator+=(BigComplex& a, const BigComplex& b) {
    a.re += b.re;
    a.im += b.im;
    return a;
}

inline BigReal abs(const BigComplex& a) { return sqrt(a.re * a.re + a.im * a.im); }
inline BigReal arg(const BigComplex& a) { return atan2(a.im, a.re); }
inline BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }

// Principal branch.
inline BigComplex log(const BigComplex& a) {
    return {BigReal(log(a.re * a.re + a.im * a.im) / 2), arg(a)};
}
inline BigComplex exp(const BigComplex& a) {
    BigReal m = exp(a.re);
    return {m * cos(a.im), m * sin(a.im)};
}

} // namespace ccb

#endif
