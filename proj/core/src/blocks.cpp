#include <cmath>

#include "ccb/blocks.hpp"
#include "ccb/calibration.hpp"
#include "ccb/scalar.hpp"

namespace ccb {

namespace {

bool on_positive_cut(Complex w) { return w.imag() == 0.0 && w.real() >= 1.0; }

// exponent 4k - 2 applied to t, the large-t normalization scale
double t_power(const SpectralPoint& s, unsigned k) {
    return std::pow(s.t, 4.0 * k - 2.0);
}

} // namespace

BlockValue block_H(const SpectralPoint& s, Complex w, PrecisionSpec prec) {
    s.validate();
    if (on_positive_cut(w)) throw DomainError("block_H: w on the cut [1, inf)");
    if (s.sigma == 1.0) return {Complex{1.0, 0.0}, 0.0, Method::taylor};

    if (s.t <= 1.0) {
        if (std::abs(w) < 1.0 - 1e-6)
            return hyp2f1_taylor(s.s(), 1.0 - s.s(), {1.0, 0.0}, w, prec);
        // route through the Euler integral at z = sqrt(1-w), Re z > 0
        Complex z = std::sqrt(1.0 - w);
        return hyp2f1_euler(s, z, Channel::u, prec);
    }
    // t > 1: reconstruct from the normalized Barnes value
    if (M_PI * s.t > 700.0)
        throw ConditioningError("block_H: e^{pi t} overflows; use the normalized blocks");
    Complex z = std::sqrt(1.0 - w);
    BlockValue n = hyp2f1_barnes(s, z, prec);
    const double scale = std::exp(M_PI * s.t);
    return {n.value * scale, n.abs_err * scale, Method::barnes};
}

BlockValue block_Htilde_u(const SpectralPoint& s, Complex z,
                          const WeightParams& params, PrecisionSpec prec) {
    s.validate();
    params.validate();
    if (!(z.real() > 0.0) || std::abs(z) > 0.5)
        throw DomainError("block_Htilde_u: Re z > 0 and |z| <= 0.5 required");
    if (s.t <= 1.0) {
        BlockValue h = block_H(s, 1.0 - z * z, prec);
        return h;
    }
    BlockValue n = hyp2f1_barnes(s, z, prec);
    const double scale = t_power(s, params.k);
    return {n.value * scale, n.abs_err * scale, Method::barnes};
}

BlockValue block_Htilde_t(const SpectralPoint& s, Complex z,
                          const WeightParams& params, PrecisionSpec prec) {
    s.validate();
    params.validate();
    if (!(z.real() > 0.0) || std::abs(z) > 0.3)
        throw DomainError("block_Htilde_t: Re z > 0 and |z| <= 0.3 required");
    if (s.sigma == 1.0) return {Complex{1.0, 0.0}, 0.0, Method::euler};
    if (s.t <= 1.0) return hyp2f1_euler(s, z, Channel::t, prec);
    BlockValue n = hyp2f1_connection_t(s, z, prec);
    const double scale = t_power(s, params.k);
    return {n.value * scale, n.abs_err * scale, Method::connection};
}

double envelope_bounds(Channel channel, const SpectralPoint& s, Complex z,
                       const WeightParams& params) {
    s.validate();
    params.validate();
    const double az = std::abs(z);
    if (!(az > 0.0 && az < 1.0))
        throw DomainError("envelope_bounds: |z| in (0,1) required");
    const double log_inv = std::log(1.0 / az);
    if (s.t <= 1.0) {
        if (channel == Channel::u) return calib::kEnvUTrivial * log_inv;
        return calib::kEnvTTrivial * std::pow(az, 2.0 * (1.0 - s.sigma)) * log_inv;
    }
    if (channel == Channel::u) {
        const double decay = std::max(0.0, 2.0 * (s.t * z.real() - 1.0));
        return calib::kEnvUSize * std::pow(s.t, 4.0 * params.k - 2.0) * std::exp(-decay);
    }
    const double y = std::max(0.0, z.imag());
    return calib::kEnvTSize * std::pow(s.t, 4.0 * params.k - 2.5) * az *
           std::exp(-calib::kEnvTDecayRate * s.t / (params.T * y + 1.0));
}

} // namespace ccb
