#ifndef CCB_HYP_HPP
#define CCB_HYP_HPP

#include <vector>

#include "ccb/precision.hpp"
#include "ccb/quadrature.hpp"
#include "ccb/types.hpp"

namespace ccb {

/// Direct Taylor summation of 2F1(a, b; c; z), |z| < 1.  Machine mode stops
/// once two successive terms fall below rel tol; extended mode sums in
/// big-float arithmetic at prec.digits.  abs_err = 10 x last term magnitude.
BlockValue hyp2f1_taylor(Complex a, Complex b, Complex c, Complex z,
                         PrecisionSpec prec = PrecisionSpec::machine());

/// Extended-precision oracle for H_s(w) = 2F1(s, 1-s; 1; w) at real w < 1
/// and s on the spectrum locus.  Every Taylor coefficient is then the
/// nonnegative real prod_{m<n} (lambda + m(m+1)) / (n!)^2, so the sum is
/// cancellation-free and needs only real big-float arithmetic.
BigReal hyp2f1_taylor_locus(const SpectralPoint& s, double w, unsigned digits);

/// Euler-integral evaluation of the channel blocks for t <= 1:
/// u: H_s(1-z^2), t: H_s(1-z^{-2}) including its z^{2(1-s)} prefactor.
/// Endpoint singularities are removed by x = u^2 / 1-x = v^2 substitutions.
BlockValue hyp2f1_euler(const SpectralPoint& s, Complex z, Channel channel,
                        PrecisionSpec prec = PrecisionSpec::machine());

/// Reusable Barnes contour for fixed t >= 1: gamma-function data along
/// Re s' = 1/4 is precomputed once, so each eval(z) costs only one
/// exponential per retained node.  Returns the NORMALIZED value
/// e^{-pi t} H_{1/2+it}(1-z^2).  The contour truncation covers every z with
/// |z| >= abs_z_min and Re z/|z| >= delta.
class BarnesContour {
public:
    BarnesContour(double t, double abs_z_min, double delta,
                  const QuadratureSpec& spec = {});

    BlockValue eval(Complex z) const;

    // Value and z-derivative of the normalized block in one pass (the
    // contour integrand differentiates exactly: factor -2s'/z per node).
    void eval_pair(Complex z, Complex& value, Complex& dvalue, double& abs_err) const;

    // Same node sum accumulated in big floats, for z where the cancellation
    // between O(1) contour contributions exceeds double precision.
    BlockValue eval_extended(Complex z, unsigned digits,
                             const QuadratureSpec& spec = {}) const;

    double t() const { return t_; }

private:
    double t_;
    double delta_;
    double tau_max_;
    // integrand density (z-independent part) at the truncation ends, for the
    // Lemma-style tail bound
    double tail_lo_, tail_hi_;
    // per-node data: contour point s' = 1/4 + i tau, coefficient
    // w_i * C/(2 pi) * exp(log-gamma product + pi t), and its log-magnitude
    std::vector<double> tau_;
    std::vector<Complex> coeff_;
    std::vector<double> log_mag_;
};

/// One-shot wrapper: builds a contour for this (s, z) and evaluates.
BlockValue hyp2f1_barnes(const SpectralPoint& s, Complex z,
                         PrecisionSpec prec = PrecisionSpec::machine(),
                         double delta = -1.0);

/// t-channel connection formula: NORMALIZED e^{-pi t} H_s(1-z^{-2}) from the
/// two-term functional equation through the quadratic-transformation variable
/// rho, valid for t >= 1, Re z > 0, |z| <= 0.3.
BlockValue hyp2f1_connection_t(const SpectralPoint& s, Complex z,
                               PrecisionSpec prec = PrecisionSpec::machine());

/// rho(u) = (1 - sqrt(1-u)) / (1 + sqrt(1-u)) and the branch-stable value of
/// -rho(1/w) at w = 1 - z^{-2}, namely (z/(1+sqrt(1-z^2)))^2.
Complex rho_of(Complex u);
Complex minus_rho_t_channel(Complex z);

/// Cross-validation oracle: integrate the hypergeometric ODE
/// w(1-w) H'' + (1-2w) H' - (1/4 + t^2) H = 0 from a Taylor anchor
/// (|anchor_w| < 0.5, real) to target_w along a straight or two-segment path
/// that avoids [1, inf) and keeps 0.05 clearance from w in {0, 1} except at
/// the endpoints themselves.
BlockValue hyp2f1_ode_continuation(const SpectralPoint& s, Complex target_w,
                                   double anchor_w,
                                   PrecisionSpec prec = PrecisionSpec::machine());

} // namespace ccb

#endif
