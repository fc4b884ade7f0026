#include <array>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "ccb/hyp.hpp"

namespace ccb {

namespace {

using State = std::array<Complex, 2>; // (H, dH/dw)

// Minimum distance from the segment [p, q] to the point c, and whether that
// minimum is attained at an endpoint of the segment.
std::pair<double, bool> segment_distance(Complex p, Complex q, Complex c) {
    const Complex d = q - p;
    const double len2 = std::norm(d);
    double tau = len2 > 0.0
        ? ((c - p).real() * d.real() + (c - p).imag() * d.imag()) / len2
        : 0.0;
    bool at_end = tau <= 1e-12 || tau >= 1.0 - 1e-12;
    tau = std::clamp(tau, 0.0, 1.0);
    return {std::abs(p + tau * d - c), at_end};
}

void check_segment(Complex p, Complex q) {
    // no crossing of the cut [1, inf)
    if ((p.imag() > 0) != (q.imag() > 0) && p.imag() != q.imag()) {
        double tau = p.imag() / (p.imag() - q.imag());
        if (tau >= 0.0 && tau <= 1.0) {
            double x = p.real() + tau * (q.real() - p.real());
            if (x >= 1.0 - 1e-12)
                throw PathError("hyp2f1_ode_continuation: path crosses [1, inf)");
        }
    }
    if (p.imag() == 0.0 && q.imag() == 0.0 &&
        std::max(p.real(), q.real()) >= 1.0 - 1e-12)
        throw PathError("hyp2f1_ode_continuation: path touches [1, inf)");
    // clearance 0.05 from the singular points, relaxed only where an endpoint
    // itself approaches one of them
    for (Complex c : {Complex{0, 0}, Complex{1, 0}}) {
        auto [dist, at_end] = segment_distance(p, q, c);
        double need = std::min({0.05, std::abs(p - c), std::abs(q - c)});
        if (dist < need - 1e-12 || (dist < 1e-12 && !at_end))
            throw PathError("hyp2f1_ode_continuation: clearance violated");
    }
}

void integrate_segment(double lambda, Complex p, Complex q, State& y) {
    namespace ode = boost::numeric::odeint;
    const Complex dw = q - p;
    auto rhs = [&](const State& s, State& dsdt, double tau) {
        const Complex w = p + tau * dw;
        const Complex hww = ((2.0 * w - 1.0) * s[1] + lambda * s[0]) / (w * (1.0 - w));
        dsdt[0] = s[1] * dw;
        dsdt[1] = hww * dw;
    };
    auto stepper = ode::make_controlled(1e-13, 1e-13,
                                        ode::runge_kutta_cash_karp54<State>());
    ode::integrate_adaptive(stepper, rhs, y, 0.0, 1.0, 1e-3);
}

} // namespace

BlockValue hyp2f1_ode_continuation(const SpectralPoint& s, Complex target_w,
                                   double anchor_w, PrecisionSpec /*prec*/) {
    s.validate();
    if (!(std::abs(anchor_w) < 0.5))
        throw DomainError("hyp2f1_ode_continuation: |anchor_w| < 0.5 required");
    const double lambda = s.lambda();
    const Complex sc = s.s();

    if (target_w == Complex{anchor_w, 0.0}) {
        BlockValue h = hyp2f1_taylor(sc, 1.0 - sc, {1.0, 0.0}, target_w);
        h.method = Method::ode_continuation;
        return h;
    }
    // The ODE is singular at w = 0; if the anchor sits there, move the
    // initial data a short step along the path (Taylor handles complex w).
    Complex p{anchor_w, 0.0};
    if (std::abs(anchor_w) < 1e-3) {
        Complex dir = (target_w - p) / std::abs(target_w - p);
        p += std::min(0.05, 0.5 * std::abs(target_w - p)) * dir;
    }
    if (std::abs(target_w - p) < 1e-12) {
        BlockValue h = hyp2f1_taylor(sc, 1.0 - sc, {1.0, 0.0}, target_w);
        h.method = Method::ode_continuation;
        return h;
    }
    // Taylor initial data at the anchor; H' = s(1-s) 2F1(s+1, 2-s; 2; w).
    BlockValue h0 = hyp2f1_taylor(sc, 1.0 - sc, {1.0, 0.0}, p);
    BlockValue h1 = hyp2f1_taylor(sc + 1.0, 2.0 - sc, {2.0, 0.0}, p);
    State y{h0.value, lambda * h1.value};
    std::vector<Complex> waypoints;
    try {
        check_segment(p, target_w);
        waypoints = {p, target_w};
    } catch (const PathError&) {
        // detour through a point displaced off the real axis
        const double side = target_w.imag() >= 0.0 ? 1.0 : -1.0;
        Complex mid = 0.5 * (p + target_w) +
                      Complex{0.0, side * std::max(0.2, 0.3 * std::abs(target_w - p))};
        check_segment(p, mid);
        check_segment(mid, target_w);
        waypoints = {p, mid, target_w};
    }
    for (size_t i = 0; i + 1 < waypoints.size(); ++i)
        integrate_segment(lambda, waypoints[i], waypoints[i + 1], y);

    const double err = 1e-10 * (std::abs(y[0]) + 1.0);
    return {y[0], err, Method::ode_continuation};
}

} // namespace ccb
