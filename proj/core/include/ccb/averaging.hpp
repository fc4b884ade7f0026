#ifndef CCB_AVERAGING_HPP
#define CCB_AVERAGING_HPP

#include <utility>

#include "ccb/precision.hpp"
#include "ccb/quadrature.hpp"
#include "ccb/types.hpp"

namespace ccb {

/// Averaged u-channel weight
///   W(s) = T^{-4k+5/2} H Int_{|y| <= T^eps/H} e^{-(Hy)^2} e^{2iTy}
///          z^{1/2} Htilde_s(1-z^2) dy,   z = 1/T + iy,
/// evaluated by conjugate symmetry as twice the real part over [0, ymax].
/// For t > 1 the block values along the y-line come from one Barnes anchor
/// at y = 0 continued by the hypergeometric ODE; for t <= 1 each node is an
/// Euler-integral evaluation.
WeightResult weight_W_exact(const SpectralPoint& s, const WeightParams& params,
                            const QuadratureSpec& q = {});

/// Averaged t-channel weight
///   Wcheck(s) = T^{-4k+5/2} H Int e^{-(Hy)^2} e^{2iTy} z^{-4k+1/2}
///               Htilde_s(1-z^{-2}) dy,
/// same symmetry reduction; t > 1 blocks via the connection formula.
WeightResult weight_Wcheck_exact(const SpectralPoint& s, const WeightParams& params,
                                 const QuadratureSpec& q = {});

/// Realness audits: the same integrals computed over the FULL range
/// [-ymax, ymax] with no symmetry shortcut, returning the raw complex value
/// whose imaginary part should vanish to quadrature accuracy.
AdaptiveResult weight_W_full_audit(const SpectralPoint& s, const WeightParams& params,
                                   const QuadratureSpec& q = {});
AdaptiveResult weight_Wcheck_full_audit(const SpectralPoint& s,
                                        const WeightParams& params,
                                        const QuadratureSpec& q = {});

/// Convexity-point evaluation at z = 1/T: the pair
///   (z^{2k} Htilde_s(1-z^2), z^{-2k} Htilde_s(1-z^{-2})).
std::pair<BlockValue, BlockValue> convexity_point(
    const SpectralPoint& s, const WeightParams& params,
    PrecisionSpec prec = PrecisionSpec::machine());

} // namespace ccb

#endif
