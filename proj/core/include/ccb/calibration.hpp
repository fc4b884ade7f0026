#ifndef CCB_CALIBRATION_HPP
#define CCB_CALIBRATION_HPP

// Constants the underlying estimates leave implicit, measured once on fixed
// coarse grids and then frozen here.  Tests and envelope_bounds treat these
// as part of the contract.  Measured maxima noted next to each value.

namespace ccb::calib {

// ---- envelope constants (blocks module) ----
// u-channel, t <= 1: |Htilde_u| <= K log(1/|z|)          (measured 8.94)
inline constexpr double kEnvUTrivial = 12.0;
// t-channel, t <= 1: |Htilde_t| <= K |z|^{2(1-sigma)} log(1/|z|)  (measured 2.64)
inline constexpr double kEnvTTrivial = 4.0;
// u-channel, t > 1, z on/near the positive real axis or the averaging line,
// |z| >= 1e-3: |Htilde_u| <= K t^{4k-2} exp(-max(0, 2(t Re z - 1)))
// (measured 1.80; the ratio grows ~log(1/|z|) below 1e-3, the K0 log regime)
inline constexpr double kEnvUSize = 2.5;
// t-channel, t > 1: |Htilde_t| <= K t^{4k-5/2} |z| exp(-c t/(T y + 1))
// (measured 0.244 at c = 1)
inline constexpr double kEnvTSize = 1.0;
inline constexpr double kEnvTDecayRate = 1.0;

// ---- weight-function constants (averaging module) ----
// trivial range t <= 1: |W| <= K T^{-4k+5/2} H^{-1/2}    (measured 0.303)
inline constexpr double kTrivWeightU = 1.0;
//                      |Wcheck| <= K T H                 (measured 0.0327)
inline constexpr double kTrivWeightT = 0.1;
// Wcheck(s0)/(T H) bracket, s0 = 1, eps = 1/40, T in {200, 500, 1000}
// (measured 1.4462 .. 1.4472)
inline constexpr double kWcheckOneLo = 1.2;
inline constexpr double kWcheckOneHi = 1.7;

// ---- figure-reproduction tolerance ----
// max |exact - asymptotic| for W on the k=1, T=75, eps=0.1 integer grid
// (measured 0.00300 at t = 58)
inline constexpr double kTolIu = 0.005;

} // namespace ccb::calib

#endif
