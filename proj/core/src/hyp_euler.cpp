#include <cmath>

#include "ccb/hyp.hpp"
#include "ccb/scalar.hpp"

namespace ccb {

namespace {

// Exponent for the substitution that flattens an x^{-sigma}-type endpoint:
// x = u^p with p = 2/(1-sigma) turns x^{-s} dx into ~u du exactly.
double flatten_exponent(double sigma) {
    if (sigma <= 0.5) return 2.0;
    if (sigma >= 1.0 - 1e-9)
        throw DomainError("hyp2f1_euler: sigma too close to 1 for the Euler integral");
    return 2.0 / (1.0 - sigma);
}

} // namespace

BlockValue hyp2f1_euler(const SpectralPoint& s, Complex z, Channel channel,
                        PrecisionSpec /*prec*/) {
    s.validate();
    if (s.t > 1.0)
        throw DomainError("hyp2f1_euler: t <= 1 required (large t routes elsewhere)");
    if (!(z.real() > 0.0)) throw DomainError("hyp2f1_euler: Re z > 0 required");
    if (s.sigma == 1.0) {
        // s = 1: H_0 is identically 1; the t-channel prefactor z^{2(1-s)} is 1.
        return {Complex{1.0, 0.0}, 0.0, Method::euler};
    }

    const Complex sc = s.s();
    const Complex sm1 = sc - 1.0;
    const Complex z2 = z * z;

    // u-channel: H_s(1-z^2)  = sin(pi s)/pi Int (1-x)^{s-1} x^{-s} k(x) dx
    // t-channel: H_s(1-z^-2) = z^{2(1-s)} sin(pi s)/pi Int x^{s-1} (1-x)^{-s} k(x) dx
    // with k(x) = (x + z^2(1-x))^{s-1}.  The singular endpoint of each factor
    // is flattened by a power substitution; logs of x and 1-x are taken in
    // the substitution variable so neither endpoint loses precision.
    const bool uch = (channel == Channel::u);
    const double p = uch ? flatten_exponent(s.sigma) : 2.0; // x = u^p near 0
    const double q = uch ? 2.0 : flatten_exponent(s.sigma); // 1-x = v^q near 1
    const Complex e0 = uch ? -sc : sm1;  // exponent of x
    const Complex e1 = uch ? sm1 : -sc;  // exponent of 1-x

    auto kern = [&](double x) {
        return std::exp(sm1 * principal_log(x + z2 * (1.0 - x)));
    };
    auto lower = [&](double u) -> Complex { // x = u^p on x in (0, 1/2]
        const double lu = std::log(u);
        const double x = std::exp(p * lu);
        return p * std::exp((p - 1.0 + e0 * p) * lu + e1 * std::log1p(-x)) * kern(x);
    };
    auto upper = [&](double v) -> Complex { // 1-x = v^q on x in [1/2, 1)
        const double lv = std::log(v);
        const double omx = std::exp(q * lv);
        return q * std::exp((q - 1.0 + e1 * q) * lv + e0 * std::log1p(-omx)) *
               kern(1.0 - omx);
    };

    QuadratureSpec spec;
    spec.rel_tol = 1e-11;
    spec.max_panels = 1u << 16;
    const double umax = std::pow(0.5, 1.0 / p), vmax = std::pow(0.5, 1.0 / q);
    auto scaled = [](double m, std::initializer_list<double> fr) {
        std::vector<double> b;
        for (double f : fr) b.push_back(f * m);
        return b;
    };
    const std::initializer_list<double> fr{0.0, 1e-6, 1e-3, 0.05, 0.3, 1.0};
    auto lo = integrate_adaptive(lower, scaled(umax, fr), spec);
    auto hi = integrate_adaptive(upper, scaled(vmax, fr), spec);

    const Complex pref = std::sin(M_PI * sc) / M_PI;
    Complex value = pref * (lo.value + hi.value);
    double err = std::abs(pref) * (lo.abs_err + hi.abs_err);
    if (channel == Channel::t) {
        Complex zpref = principal_pow(z, 2.0 * (1.0 - sc));
        value *= zpref;
        err *= std::abs(zpref);
    }
    return {value, err, Method::euler};
}

} // namespace ccb
