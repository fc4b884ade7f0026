#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "ccb/bigcomplex.hpp"
#include "ccb/hyp.hpp"
#include "ccb/scalar.hpp"

namespace ccb {

namespace {

constexpr double kSigmaC = 0.25; // contour Re s' = 1/4
// Contributions this far (in log scale) below the per-z peak are skipped.
constexpr double kLogWindow = 45.0;

} // namespace

BarnesContour::BarnesContour(double t, double abs_z_min, double delta,
                             const QuadratureSpec& spec) {
    spec.validate();
    if (!(t >= 1.0)) throw DomainError("BarnesContour: t >= 1 required");
    if (!(abs_z_min > 0.0 && abs_z_min <= 1.0))
        throw DomainError("BarnesContour: abs_z_min in (0, 1] required");
    if (!(delta > 0.0 && delta <= 1.0))
        throw DomainError("BarnesContour: delta in (0, 1] required");
    if (delta < 1e-6)
        throw ConditioningError("BarnesContour: delta < 1e-6, contour decay too slow");
    t_ = t;
    delta_ = delta;

    const double log_inv_z = std::log(1.0 / abs_z_min);
    const double tau_max =
        std::max(std::pow(t, 2.0 / 3.0), (40.0 + 2.0 * kSigmaC * log_inv_z) / (2.0 * delta));
    // Oscillation of z^{-2s'} runs at 2|log|z||; the gamma phases add
    // ~2 log(2+t+tau).  Panels sized against the combined worst-case rate.
    const double rate = 2.0 * log_inv_z + 2.0 * std::log(2.0 + t + tau_max);
    const unsigned panels = static_cast<unsigned>(
        std::ceil(2.0 * tau_max * rate / spec.phase_per_panel)) + 1;
    if (panels > spec.max_panels)
        throw ConvergenceError("BarnesContour: panel budget exhausted");

    const GaussRule& rule = gauss_legendre(spec.panel_order);
    const size_t n = static_cast<size_t>(panels) * rule.nodes.size();
    tau_.reserve(n);
    coeff_.reserve(n);
    log_mag_.reserve(n);

    // e^{-pi t} H = C e^{pi t} I with C = (1 + e^{-2 pi t})^2 / (4 pi^2);
    // the e^{pi t} is folded into each node's log-gamma exponent, keeping
    // every stored magnitude moderate.
    const double log_c = 2.0 * std::log1p(std::exp(-2.0 * M_PI * t)) -
                         std::log(4.0 * M_PI * M_PI);
    const double panel_w = 2.0 * tau_max / panels;
    for (unsigned p = 0; p < panels; ++p) {
        const double mid = -tau_max + (p + 0.5) * panel_w;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            const double tau = mid + 0.5 * panel_w * rule.nodes[i];
            const double w = 0.5 * panel_w * rule.weights[i];
            Complex g = 2.0 * log_gamma({kSigmaC, tau}) +
                        log_gamma({kSigmaC, t - tau}) +
                        log_gamma({kSigmaC, -(t + tau)});
            const double lm = g.real() + M_PI * t + log_c + std::log(w / (2.0 * M_PI));
            tau_.push_back(tau);
            log_mag_.push_back(lm);
            coeff_.push_back(std::exp(lm) * Complex{std::cos(g.imag()), std::sin(g.imag())});
        }
    }
    // Lemma-style tail bound: integrand density at the cut ends, decaying at
    // rate >= 2 delta beyond them.
    tau_max_ = tau_max;
    const double end_w = 0.5 * panel_w * rule.weights.front();
    tail_lo_ = std::exp(log_mag_.front()) / (end_w * 2.0 * delta);
    tail_hi_ = std::exp(log_mag_.back()) / (end_w * 2.0 * delta);
}

void BarnesContour::eval_pair(Complex z, Complex& value, Complex& dvalue,
                              double& abs_err) const {
    if (!(z.real() > 0.0)) throw DomainError("BarnesContour: Re z > 0 required");
    const double az = std::abs(z);
    if (z.real() / az < 0.999 * delta_)
        throw DomainError("BarnesContour: z outside the delta sector of this contour");
    const Complex lz = std::log(z);
    const double a = lz.real(), b = lz.imag();

    // node magnitude: log_mag + Re(-2 s' log z) = log_mag - a/2 + 2 tau b
    double peak = -1e300;
    for (size_t i = 0; i < tau_.size(); ++i)
        peak = std::max(peak, log_mag_[i] - 0.5 * a + 2.0 * tau_[i] * b);
    const double floor = peak - kLogWindow;

    Complex sum{0.0, 0.0}, dsum{0.0, 0.0};
    double mag_sum = 0.0;
    for (size_t i = 0; i < tau_.size(); ++i) {
        const double lm = log_mag_[i] - 0.5 * a + 2.0 * tau_[i] * b;
        if (lm < floor) continue;
        const double mag = std::exp(-0.5 * a + 2.0 * tau_[i] * b);
        const double ph = -0.5 * b - 2.0 * tau_[i] * a;
        const Complex node = coeff_[i] * (mag * Complex{std::cos(ph), std::sin(ph)});
        sum += node;
        mag_sum += std::abs(node);
        // d/dz z^{-2s'} brings down -2 s'/z
        dsum += node * Complex{-2.0 * kSigmaC, -2.0 * tau_[i]};
    }
    value = sum;
    dvalue = dsum / z;
    // rounding term scales with the magnitude sum, not the (possibly heavily
    // cancelled) value, so deep cancellation is reported honestly
    abs_err = tail_lo_ * std::exp(-0.5 * a - 2.0 * tau_max_ * b) +
              tail_hi_ * std::exp(-0.5 * a + 2.0 * tau_max_ * b) +
              2e-16 * mag_sum;
}

BlockValue BarnesContour::eval(Complex z) const {
    Complex v, dv;
    double err;
    eval_pair(z, v, dv, err);
    return {v, err, Method::barnes};
}

BlockValue BarnesContour::eval_extended(Complex z, unsigned digits,
                                        const QuadratureSpec& spec) const {
    if (!(z.real() > 0.0)) throw DomainError("BarnesContour: Re z > 0 required");
    const double az = std::abs(z);
    if (z.real() / az < 0.999 * delta_)
        throw DomainError("BarnesContour: z outside the delta sector of this contour");
    const Complex lz = std::log(z);
    const double a = lz.real(), b = lz.imag();
    const double log_inv_z = -std::log(az);
    const double ln10 = 2.3025850929940457;

    // The value scale is exp(-2 t asin|z|) while node magnitudes are O(1), so
    // absolute targets (truncation depth, node screen, working precision) are
    // set against the value scale, not the node scale.
    const double log_val = -2.0 * t_ * std::asin(std::min(az, 1.0));
    const double floor_log = log_val - digits * ln10 - 10.0;
    const double margin = -floor_log + 10.0; // decay demanded beyond the ends

    const double tau_max = std::max(
        std::pow(t_, 2.0 / 3.0), (margin + 2.0 * kSigmaC * log_inv_z) / (2.0 * delta_));
    const double rate = 2.0 * log_inv_z + 2.0 * std::log(2.0 + t_ + tau_max) +
                        2.0 * std::abs(b);
    const unsigned panels = static_cast<unsigned>(
        std::ceil(2.0 * tau_max * rate / spec.phase_per_panel)) + 1;
    if (panels > spec.max_panels)
        throw ConvergenceError("BarnesContour: extended panel budget exhausted");
    const unsigned work_digits =
        digits + 25 + static_cast<unsigned>(std::max(0.0, -log_val) / ln10);
    PrecisionGuard guard(work_digits);
    // Machine-precision quadrature nodes would inject ~1e-16 relative noise
    // at the O(1) node-magnitude scale, swamping a deeply cancelled value;
    // the rule and the panel tiling must both live at working precision.
    const BigGaussRule rule = big_gauss_legendre(spec.panel_order);
    const BigReal pi_big = boost::math::constants::pi<BigReal>();
    const BigReal t_big(t_);
    const BigComplex lz_big = log(BigComplex(BigReal(z.real()), BigReal(z.imag())));
    const BigReal log_c = BigReal(2 * log1p(exp(BigReal(-2 * pi_big * t_big))) -
                                  log(4 * pi_big * pi_big));
    const BigReal log_2pi = BigReal(log(2 * pi_big));

    BigComplex sum(BigReal(0), BigReal(0));
    const BigReal panel_w = BigReal(2 * BigReal(tau_max) / panels);
    const BigReal half_w = BigReal(panel_w / 2);
    double end_density = 0.0;
    for (unsigned p = 0; p < panels; ++p) {
        const BigReal mid =
            BigReal(-BigReal(tau_max) + (2 * static_cast<int>(p) + 1) * half_w);
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            const BigReal tau = BigReal(mid + half_w * rule.nodes[i]);
            const BigReal w = BigReal(half_w * rule.weights[i]);
            const double tau_d = tau.convert_to<double>();
            const double w_d = w.convert_to<double>();
            // cheap machine screen before paying for big-float gammas
            const double lm_est =
                2.0 * log_gamma(Complex{kSigmaC, tau_d}).real() +
                log_gamma(Complex{kSigmaC, t_ - tau_d}).real() +
                log_gamma(Complex{kSigmaC, -(t_ + tau_d)}).real() + M_PI * t_ +
                std::log(w_d / (2.0 * M_PI)) - 0.5 * a + 2.0 * tau_d * b;
            if ((p == 0 && i == 0) || (p + 1 == panels && i + 1 == rule.nodes.size()))
                end_density = std::max(end_density, std::exp(lm_est) / w_d);
            if (lm_est < floor_log) continue;
            const BigComplex g =
                BigReal(2) *
                    log_gamma_ext(BigComplex(BigReal(0.25), tau), work_digits) +
                log_gamma_ext(BigComplex(BigReal(0.25), BigReal(t_big - tau)),
                              work_digits) +
                log_gamma_ext(BigComplex(BigReal(0.25), BigReal(-(t_big + tau))),
                              work_digits);
            const BigComplex expo =
                g +
                BigComplex(BigReal(pi_big * t_big + log_c + log(w) - log_2pi),
                           BigReal(0)) -
                BigComplex(BigReal(0.5), BigReal(2 * tau)) * lz_big;
            sum += exp(expo);
        }
    }
    const Complex value = sum.to_double();
    const double tail = end_density / (2.0 * delta_) *
                        std::exp(-0.5 * a + 2.0 * tau_max * std::abs(b));
    const double abs_err = tail + std::exp(floor_log) +
                           std::pow(10.0, -static_cast<double>(digits)) *
                               std::max(std::abs(value), std::exp(log_val));
    return {value, abs_err, Method::barnes};
}

BlockValue hyp2f1_barnes(const SpectralPoint& s, Complex z, PrecisionSpec prec,
                         double delta) {
    s.validate();
    if (!(s.t >= 1.0)) throw DomainError("hyp2f1_barnes: t >= 1 required");
    if (!(z.real() > 0.0)) throw DomainError("hyp2f1_barnes: Re z > 0 required");
    const double az = std::abs(z);
    if (delta <= 0.0) delta = z.real() / az;
    if (delta < 1e-6)
        throw ConditioningError("hyp2f1_barnes: delta < 1e-6");
    BarnesContour contour(s.t, az, delta);
    BlockValue v = contour.eval(z);
    if (prec.is_extended())
        return contour.eval_extended(z, prec.digits);
    // The contour magnitudes are O(1) while the value decays like
    // exp(-2 t asin|z|); once double rounding eats the requested accuracy,
    // redo the node sum in big floats sized to the cancellation depth.
    if (v.abs_err > 1e-10 * std::abs(v.value)) return contour.eval_extended(z, 16);
    return v;
}

} // namespace ccb
