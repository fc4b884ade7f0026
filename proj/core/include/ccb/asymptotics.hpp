#ifndef CCB_ASYMPTOTICS_HPP
#define CCB_ASYMPTOTICS_HPP

#include "ccb/types.hpp"

namespace ccb {

/// Coefficients of the u-channel expansion, c_j = (-1)^j / (3^j j!).
double u_expansion_coeff(unsigned j);

/// Truncated u-channel asymptotic for Htilde_u at order J <= 6:
///   (t^{4k-5/2} / (2 sqrt(pi z))) e^{-2tz} sum_{j<=J} c_j (t z^3)^j
/// Hypotheses: t > 1, 1/t <~ |z| <~ 1, Re z >= t^{-2/3} |z| (up to margins).
BlockValue u_block_asym(const SpectralPoint& s, Complex z,
                        const WeightParams& params, unsigned J = 2);

/// phi(z) = -log(1 + sqrt(1-z^2)), psi(z) = e^{-i pi/4} / (sqrt(pi)(1+sqrt(1-z^2)))
Complex phase_phi(Complex z);
Complex phase_psi(Complex z);

/// t-channel asymptotic main term for Htilde_t:
///   t^{4k-5/2} z psi(z) exp(-2it [log(-iz) + phi(z)])
/// Hypotheses: t > 1, Re z > 0, Im z >= 0, |z| <= 0.3.
BlockValue t_block_asym(const SpectralPoint& s, Complex z,
                        const WeightParams& params);

/// Smooth factor of the t-channel block along z = 1/T + iy:
///   rho(y) = (1/(Ty) + i)^{p+1} psi(z) exp(-2it [log(1 - i/(Ty)) + phi(z)]),
/// so that z^p Htilde_t ~ t^{4k-5/2} y^{p+1} rho(y) e^{-2it log y}.
/// Domain: y in [2/T, T^{-1/3}], 1 < t <= T^{2/3}.
Complex rho_smooth(double y, double t, const WeightParams& params, double p);

/// Main term of W(1/2 + it), t > 1:
///   (1/2) (t/T)^{4k-5/2} e^{-2t/T} exp(-((t-T)/H)^2)
double weight_W_asym(double t, const WeightParams& params);

/// Oscillation phase alpha(t) = 3pi/4 + 2t (1 + log 2 - log(t/T) + (t/T)^2/4),
/// kept unreduced mod 2 pi.
double alpha_phase(double t, const WeightParams& params);

/// Main term of Wcheck(1/2 + it), t > 1:
///   e^{-2} H t^{-1/2} exp(-(t H / T)^2) cos(alpha(t))
double weight_Wcheck_asym(double t, const WeightParams& params);

} // namespace ccb

#endif
