#ifndef CCB_SCALAR_HPP
#define CCB_SCALAR_HPP

#include <complex>

#include "ccb/bigcomplex.hpp"
#include "ccb/errors.hpp"
#include "ccb/precision.hpp"

namespace ccb {

using Complex = std::complex<double>;

/// True if z lies on the branch cut (-inf, 0] of the principal logarithm.
bool on_log_cut(Complex z);

/// Principal branch of log z.  Throws DomainError on the cut.
Complex principal_log(Complex z);

/// z^s = exp(s log z), principal branch.  z = 0 is admitted only for
/// Re s > 0 (limit value 0).
Complex principal_pow(Complex z, Complex s);

/// Principal (continuous on the cut plane, real on the positive axis)
/// branch of log Gamma.  Stirling series after an argument-shift recursion.
/// Throws PoleError at nonpositive integers.
Complex log_gamma(Complex w);

/// Extended-precision log Gamma, absolute error <= 10^(2 - digits).
BigComplex log_gamma_ext(const BigComplex& w, unsigned digits);

/// Modified Bessel function K_nu(w), integer nu >= 0, for w off (-inf, 0].
/// Machine mode carries enough internal precision for ~1e-12 relative
/// accuracy across the series/asymptotic crossover; extended mode raises the
/// internal working precision to the requested digit count.
Complex bessel_k(unsigned nu, Complex w,
                 PrecisionSpec prec = PrecisionSpec::machine());

/// g(xi) = sqrt(pi) * exp(-xi^2/4), the Fourier transform of exp(-y^2).
double gaussian_transform(double xi);

/// ell-th derivative of g, ell <= 6, by the explicit Hermite-polynomial form.
double gaussian_transform_deriv(unsigned ell, double xi);

} // namespace ccb

#endif
