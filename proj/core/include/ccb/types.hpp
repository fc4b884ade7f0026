#ifndef CCB_TYPES_HPP
#define CCB_TYPES_HPP

#include <cmath>
#include <complex>
#include <string>

#include "ccb/errors.hpp"

namespace ccb {

using Complex = std::complex<double>;

enum class Channel { u, t };

enum class Method { automatic, taylor, euler, barnes, connection, ode_continuation };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::automatic: return "auto";
        case Method::taylor: return "taylor";
        case Method::euler: return "euler";
        case Method::barnes: return "barnes";
        case Method::connection: return "connection";
        default: return "ode_continuation";
    }
}

// A block (or hypergeometric) value with an error estimate and the engine
// that produced it.
struct BlockValue {
    Complex value{0.0, 0.0};
    double abs_err = 0.0;
    Method method = Method::taylor;
};

// Spectral parameter s = sigma + it restricted to the locus
// (1/2, 1] x {0}  union  {1/2} x [0, inf), so lambda = s(1-s) >= 0.
struct SpectralPoint {
    double sigma = 1.0;
    double t = 0.0;

    SpectralPoint() = default;
    SpectralPoint(double sigma_, double t_) : sigma(sigma_), t(t_) { validate(); }

    void validate() const {
        if (!(sigma >= 0.5 && sigma <= 1.0) || !(t >= 0.0))
            throw DomainError("SpectralPoint: sigma in [1/2,1] and t >= 0 required");
        if (t > 0.0 && sigma != 0.5)
            throw DomainError("SpectralPoint: off the spectrum locus (t > 0 needs sigma = 1/2)");
    }

    Complex s() const { return {sigma, t}; }
    // lambda = s(1-s), real and nonnegative on the locus
    double lambda() const { return sigma * (1.0 - sigma) + t * t; }
};

// Parameters of the averaged crossing weights: modular weight 2k, center T,
// exponent eps, window width H = T^{1/3 + 2 eps}.
struct WeightParams {
    unsigned k = 1;
    double T = 75.0;
    double eps = 0.1;

    WeightParams() = default;
    WeightParams(unsigned k_, double T_, double eps_) : k(k_), T(T_), eps(eps_) { validate(); }

    void validate() const {
        if (k < 1) throw DomainError("WeightParams: k >= 1 required");
        if (!(T >= 4.0)) throw DomainError("WeightParams: T >= 4 required");
        if (!(eps > 0.0 && eps <= 1.0 / 6.0))
            throw DomainError("WeightParams: eps in (0, 1/6] required");
    }

    double H() const { return std::pow(T, 1.0 / 3.0 + 2.0 * eps); }
    // half-width of the y-integration range, T^eps / H = T^{-1/3-eps}
    double y_cutoff() const { return std::pow(T, eps) / H(); }
};

// Panel-based oscillatory quadrature controls.
struct QuadratureSpec {
    unsigned panel_order = 32;
    double phase_per_panel = 1.5707963267948966; // pi/2
    double rel_tol = 1e-9;
    unsigned max_panels = 1u << 20;

    void validate() const {
        if (panel_order < 2) throw DomainError("QuadratureSpec: panel_order >= 2");
        if (!(phase_per_panel > 0.0 && phase_per_panel <= 3.14159265358979324))
            throw DomainError("QuadratureSpec: phase_per_panel in (0, pi]");
        if (!(rel_tol >= 1e-13)) throw DomainError("QuadratureSpec: rel_tol >= 1e-13");
        if (max_panels < 1) throw DomainError("QuadratureSpec: max_panels >= 1");
    }
};

struct WeightResult {
    double value = 0.0;
    double abs_err = 0.0;
    unsigned panels_used = 0;
};

} // namespace ccb

#endif
