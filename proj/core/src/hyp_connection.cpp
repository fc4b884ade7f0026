#include <cmath>

#include "ccb/hyp.hpp"
#include "ccb/scalar.hpp"

namespace ccb {

Complex rho_of(Complex u) {
    Complex r = std::sqrt(1.0 - u);
    return (1.0 - r) / (1.0 + r);
}

Complex minus_rho_t_channel(Complex z) {
    // -rho(1/w) at w = 1 - z^{-2} collapses to (z/(1+sqrt(1-z^2)))^2,
    // branch-stable for Re z > 0.
    Complex q = z / (1.0 + std::sqrt(1.0 - z * z));
    return q * q;
}

namespace {

// 2F1(1/2, 1/2 + i e t; 1 + i e t; rho2), e = +-1; coefficients are bounded
// uniformly in t, so the series converges like rho2^n.
Complex connection_series(double t, double e, Complex rho2) {
    Complex sum = 1.0, term = 1.0;
    const Complex iet{0.0, e * t};
    for (unsigned n = 0; n < 1000; ++n) {
        term *= (0.5 + n) * (0.5 + n + iet) / ((1.0 + n + iet) * (n + 1.0)) * rho2;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) return sum;
    }
    throw ConvergenceError("hyp2f1_connection_t: series did not converge");
}

} // namespace

BlockValue hyp2f1_connection_t(const SpectralPoint& s, Complex z,
                               PrecisionSpec /*prec*/) {
    s.validate();
    const double t = s.t;
    if (!(t >= 1.0)) throw DomainError("hyp2f1_connection_t: t >= 1 required");
    if (!(z.real() > 0.0)) throw DomainError("hyp2f1_connection_t: Re z > 0 required");
    if (std::abs(z) > 0.3) throw DomainError("hyp2f1_connection_t: |z| <= 0.3 required");

    const Complex mrho = minus_rho_t_channel(z);
    const Complex rho2 = mrho * mrho; // rho^2 = (-rho)^2
    if (std::abs(rho2) >= 0.5)
        throw DomainError("hyp2f1_connection_t: |rho^2| >= 1/2");

    // log(-4 rho) via the z-form: 2(log 2 + Log z - Log(1 + sqrt(1-z^2)))
    const Complex log_m4rho =
        2.0 * (std::log(2.0) + std::log(z) - std::log(1.0 + std::sqrt(1.0 - z * z)));

    // e^{-pi t} H_s(1-z^{-2}) = sum over e = +-1 of
    //   exp(logG(-2iet) - 2 logG(1/2 - iet) + (1/2 + iet) log(-4rho) - pi t)
    //   * 2F1(1/2, 1/2 + iet; 1 + iet; rho^2)
    Complex value{0.0, 0.0};
    double err = 0.0;
    for (double e : {1.0, -1.0}) {
        Complex log_pref = log_gamma({0.0, -2.0 * e * t}) -
                           2.0 * log_gamma({0.5, -e * t}) +
                           Complex{0.5, e * t} * log_m4rho - M_PI * t;
        if (log_pref.real() < -700.0) continue; // term underflows entirely
        Complex term = std::exp(log_pref) * connection_series(t, e, rho2);
        value += term;
        err += 1e-14 * std::abs(term);
    }
    return {value, err, Method::connection};
}

} // namespace ccb
