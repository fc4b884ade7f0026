#ifndef CCB_BLOCKS_HPP
#define CCB_BLOCKS_HPP

#include "ccb/hyp.hpp"
#include "ccb/types.hpp"

namespace ccb {

/// H_s(w) = 2F1(s, 1-s; 1; w) with automatic engine dispatch.  For t > 1 the
/// value is reconstructed from the normalized Barnes evaluation and throws
/// ConditioningError once e^{pi t} itself overflows (t > ~225); large-t
/// callers should use the normalized block_Htilde forms instead.
BlockValue block_H(const SpectralPoint& s, Complex w,
                   PrecisionSpec prec = PrecisionSpec::machine());

/// u-channel normalized block Htilde_s(1 - z^2):
///   t <= 1:  H_s(1 - z^2)
///   t  > 1:  t^{4k-2} e^{-pi t} H_s(1 - z^2)
/// Requires Re z > 0, |z| <= 0.5.
BlockValue block_Htilde_u(const SpectralPoint& s, Complex z,
                          const WeightParams& params,
                          PrecisionSpec prec = PrecisionSpec::machine());

/// t-channel normalized block Htilde_s(1 - z^{-2}), same normalization.
/// Requires Re z > 0, |z| <= 0.3.
BlockValue block_Htilde_t(const SpectralPoint& s, Complex z,
                          const WeightParams& params,
                          PrecisionSpec prec = PrecisionSpec::machine());

/// Calibrated envelope bound on |Htilde| for the given channel, used by
/// truncation decisions and tail tests:
///   u, t <= 1:  K log(1/|z|)
///   t, t <= 1:  K |z|^{2(1-sigma)} log(1/|z|)
///   u, t  > 1:  K t^{4k-2} exp(-max(0, 2(t Re z - 1)))
///   t, t  > 1:  K t^{4k-5/2} |z| exp(-c t / (T Im z + 1))
double envelope_bounds(Channel channel, const SpectralPoint& s, Complex z,
                       const WeightParams& params);

} // namespace ccb

#endif
