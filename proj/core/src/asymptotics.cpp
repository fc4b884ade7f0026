#include <cmath>

#include "ccb/asymptotics.hpp"

namespace ccb {

double u_expansion_coeff(unsigned j) {
    if (j > 6) throw DomainError("u_expansion_coeff: j <= 6");
    double c = 1.0;
    for (unsigned m = 1; m <= j; ++m) c *= -1.0 / (3.0 * m);
    return c;
}

BlockValue u_block_asym(const SpectralPoint& s, Complex z,
                        const WeightParams& params, unsigned J) {
    s.validate();
    params.validate();
    if (J > 6) throw DomainError("u_block_asym: J <= 6");
    const double t = s.t;
    const double az = std::abs(z);
    if (!(t > 1.0)) throw DomainError("u_block_asym: t > 1 required");
    if (!(az <= 1.0 && t * az >= 0.05))
        throw DomainError("u_block_asym: need 1/t <~ |z| <~ 1");
    if (!(z.real() >= 0.5 * std::pow(t, -2.0 / 3.0) * az))
        throw DomainError("u_block_asym: Re z too small for the sector hypothesis");

    const Complex tz = t * z;
    const Complex tz3 = t * z * z * z;
    Complex sum = 0.0;
    for (unsigned j = 0; j <= J; ++j) sum += u_expansion_coeff(j) * std::pow(tz3, j);
    const Complex pref =
        std::pow(t, 4.0 * params.k - 2.5) / (2.0 * std::sqrt(M_PI * z));
    const Complex value = pref * std::exp(-2.0 * tz) * sum;

    const double damp = std::exp(-2.0 * t * z.real());
    const double err = std::abs(pref) * damp *
                       (1.0 / std::abs(tz) +
                        std::abs(u_expansion_coeff(std::min(J + 1, 6u))) *
                            std::pow(std::abs(tz3), J + 1.0));
    return {value, err, Method::barnes};
}

Complex phase_phi(Complex z) { return -std::log(1.0 + std::sqrt(1.0 - z * z)); }

Complex phase_psi(Complex z) {
    const Complex rot{std::cos(M_PI / 4.0), -std::sin(M_PI / 4.0)};
    return rot / (std::sqrt(M_PI) * (1.0 + std::sqrt(1.0 - z * z)));
}

BlockValue t_block_asym(const SpectralPoint& s, Complex z,
                        const WeightParams& params) {
    s.validate();
    params.validate();
    const double t = s.t;
    if (!(t > 1.0)) throw DomainError("t_block_asym: t > 1 required");
    if (!(z.real() > 0.0 && z.imag() >= 0.0 && std::abs(z) <= 0.3))
        throw DomainError("t_block_asym: Re z > 0, Im z >= 0, |z| <= 0.3 required");

    const Complex phase = std::log(Complex{0.0, -1.0} * z) + phase_phi(z);
    const Complex expo = Complex{0.0, -2.0 * t} * phase;
    const double tp = std::pow(t, 4.0 * params.k - 2.5);
    const Complex value = tp * z * phase_psi(z) * std::exp(expo);
    const double az = std::abs(z);
    const double err =
        tp * az * (1.0 / t + std::pow(az, 4.0) + std::exp(-M_PI * t));
    return {value, err, Method::connection};
}

Complex rho_smooth(double y, double t, const WeightParams& params, double p) {
    params.validate();
    const double T = params.T;
    if (!(y >= 2.0 / T && y <= std::pow(T, -1.0 / 3.0)))
        throw DomainError("rho_smooth: y in [2/T, T^{-1/3}] required");
    if (!(t > 1.0 && t <= std::pow(T, 2.0 / 3.0)))
        throw DomainError("rho_smooth: 1 < t <= T^{2/3} required");
    const Complex z{1.0 / T, y};
    const Complex base{1.0 / (T * y), 1.0};
    const Complex inner = std::log(1.0 - Complex{0.0, 1.0} / (T * y)) + phase_phi(z);
    return std::pow(base, p + 1.0) * phase_psi(z) *
           std::exp(Complex{0.0, -2.0 * t} * inner);
}

double weight_W_asym(double t, const WeightParams& params) {
    params.validate();
    if (!(t > 1.0)) throw DomainError("weight_W_asym: t > 1 required");
    const double r = t / params.T;
    const double g = (t - params.T) / params.H();
    return 0.5 * std::pow(r, 4.0 * params.k - 2.5) * std::exp(-2.0 * r) *
           std::exp(-g * g);
}

double alpha_phase(double t, const WeightParams& params) {
    params.validate();
    const double r = t / params.T;
    return 0.75 * M_PI + 2.0 * t * (1.0 + std::log(2.0) - std::log(r) + 0.25 * r * r);
}

double weight_Wcheck_asym(double t, const WeightParams& params) {
    params.validate();
    if (!(t > 1.0)) throw DomainError("weight_Wcheck_asym: t > 1 required");
    const double u = t * params.H() / params.T;
    return std::exp(-2.0) * params.H() / std::sqrt(t) * std::exp(-u * u) *
           std::cos(alpha_phase(t, params));
}

} // namespace ccb
