#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include <boost/numeric/odeint.hpp>

#include "ccb/averaging.hpp"
#include "ccb/blocks.hpp"
#include "ccb/hyp.hpp"
#include "ccb/scalar.hpp"

namespace ccb {

namespace {

// Marches the normalized u-channel block F(y) = e^{-pi t} H_s(1 - z(y)^2),
// z = 1/T + iy, along the y-line via the hypergeometric ODE transplanted to
// y:  F'' = -4 lambda/(1-z^2) F + i (3z^2-1)/(z(1-z^2)) F'.
// Both fundamental solutions have constant magnitude in y (Re z is fixed),
// so the march is well-conditioned in either direction.
class UOdeMarcher {
public:
    UOdeMarcher(double lambda, double T, Complex f0, Complex g0)
        : lambda_(lambda), T_(T), y_(0.0), state_{f0, g0} {}

    Complex advance(double y) {
        namespace ode = boost::numeric::odeint;
        if (y == y_) return state_[0];
        auto rhs = [this](const std::array<Complex, 2>& s,
                          std::array<Complex, 2>& dsdy, double yy) {
            const Complex z{1.0 / T_, yy};
            const Complex z2 = z * z;
            dsdy[0] = s[1];
            dsdy[1] = -4.0 * lambda_ / (1.0 - z2) * s[0] +
                      Complex{0.0, 1.0} * (3.0 * z2 - 1.0) / (z * (1.0 - z2)) * s[1];
        };
        auto stepper = ode::make_controlled(
            1e-13, 1e-13, ode::runge_kutta_cash_karp54<std::array<Complex, 2>>());
        const double dt0 = (y > y_ ? 1.0 : -1.0) * 1e-4;
        ode::integrate_adaptive(stepper, rhs, state_, y_, y, dt0);
        y_ = y;
        return state_[0];
    }

private:
    double lambda_, T_, y_;
    std::array<Complex, 2> state_;
};

enum class BlockMode { one, euler_u, euler_t, ode_u, conn_t };

// Batch evaluation of the channel block along z = 1/T + iy at sorted nodes.
std::vector<Complex> blocks_on_line(BlockMode mode, const SpectralPoint& s,
                                    const WeightParams& params,
                                    const std::vector<double>& ys,
                                    double* anchor_err) {
    std::vector<Complex> out(ys.size());
    *anchor_err = 0.0;
    const double scale =
        s.t > 1.0 ? std::pow(s.t, 4.0 * params.k - 2.0) : 1.0;
    switch (mode) {
        case BlockMode::one:
            std::fill(out.begin(), out.end(), Complex{1.0, 0.0});
            break;
        case BlockMode::euler_u:
        case BlockMode::euler_t: {
            const Channel ch = mode == BlockMode::euler_u ? Channel::u : Channel::t;
            for (size_t i = 0; i < ys.size(); ++i) {
                BlockValue b = hyp2f1_euler(s, {1.0 / params.T, ys[i]}, ch);
                out[i] = b.value;
                *anchor_err = std::max(*anchor_err, b.abs_err);
            }
            break;
        }
        case BlockMode::conn_t:
            for (size_t i = 0; i < ys.size(); ++i)
                out[i] = scale *
                         hyp2f1_connection_t(s, {1.0 / params.T, ys[i]}).value;
            break;
        case BlockMode::ode_u: {
            BarnesContour anchor(s.t, 1.0 / params.T, 1.0);
            Complex f0, df0;
            double err0;
            anchor.eval_pair({1.0 / params.T, 0.0}, f0, df0, err0);
            *anchor_err = scale * err0;
            const double lambda = s.lambda();
            // nonnegative nodes ascending from 0, negative ones descending
            const auto first_nn = std::lower_bound(ys.begin(), ys.end(), 0.0);
            const size_t split = static_cast<size_t>(first_nn - ys.begin());
            UOdeMarcher up(lambda, params.T, f0, Complex{0.0, 1.0} * df0);
            for (size_t i = split; i < ys.size(); ++i)
                out[i] = scale * up.advance(ys[i]);
            if (split > 0) {
                UOdeMarcher down(lambda, params.T, f0, Complex{0.0, 1.0} * df0);
                for (size_t i = split; i-- > 0;)
                    out[i] = scale * down.advance(ys[i]);
            }
            break;
        }
    }
    return out;
}

BlockMode pick_mode(Channel ch, const SpectralPoint& s) {
    if (s.sigma == 1.0) return BlockMode::one;
    if (s.t > 1.0) return ch == Channel::u ? BlockMode::ode_u : BlockMode::conn_t;
    return ch == Channel::u ? BlockMode::euler_u : BlockMode::euler_t;
}

struct RawWeight {
    Complex integral;
    double abs_err;
    unsigned panels;
};

// Richardson-refined phase-panel quadrature of
//   Int_{y_lo}^{y_hi} e^{-(Hy)^2} e^{2iTy} zfac(z) * block(y) dy.
RawWeight integrate_weight(Channel ch, const SpectralPoint& s,
                           const WeightParams& params, const QuadratureSpec& q,
                           double y_lo, double y_hi) {
    q.validate();
    const double T = params.T, H = params.H();
    const double kexp = ch == Channel::u ? 0.5 : 0.5 - 4.0 * params.k;
    const BlockMode mode = pick_mode(ch, s);

    // total-phase model: the Gaussian carrier 2Ty plus the block's own
    // oscillation (2ty in the u-channel, ~2t log y in the t-channel)
    const double t = s.t;
    auto phase = [&](double y) {
        double p = 2.0 * (T + (ch == Channel::u ? t : 0.0)) * y;
        if (ch == Channel::t && t > 1.0)
            p += 2.0 * t * (y >= 0 ? 1.0 : -1.0) * std::log1p(T * std::abs(y));
        return p;
    };
    // geometric seeds resolving the |z|^{-4k+1/2} peak at y = 0
    std::vector<double> seeds;
    if (ch == Channel::t)
        for (double g = 1.0 / T; g < y_hi; g *= 2.0) {
            if (g < y_hi) seeds.push_back(g);
            if (y_lo < -g) seeds.push_back(-g);
        }

    const GaussRule& rule = gauss_legendre(q.panel_order);
    QuadratureSpec level_spec = q;
    Complex prev{0.0, 0.0};
    double diff = 0.0, block_err = 0.0, mag_sum = 0.0;
    unsigned panels_total = 0;
    Complex cur{0.0, 0.0};
    for (unsigned level = 0;; ++level) {
        if (level > 14)
            throw ConvergenceError("weight quadrature: refinement stalled");
        level_spec.phase_per_panel = q.phase_per_panel / std::pow(2.0, level);
        std::vector<double> breaks = phase_breaks(y_lo, y_hi, phase, level_spec);
        breaks.insert(breaks.end(), seeds.begin(), seeds.end());
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
        const unsigned panels = static_cast<unsigned>(breaks.size() - 1);
        if (panels_total + panels > q.max_panels)
            throw ConvergenceError("weight quadrature: panel budget exhausted");
        panels_total += panels;

        std::vector<double> ys;
        std::vector<double> ws;
        ys.reserve(panels * rule.nodes.size());
        for (unsigned pnl = 0; pnl < panels; ++pnl) {
            const double mid = 0.5 * (breaks[pnl] + breaks[pnl + 1]);
            const double half = 0.5 * (breaks[pnl + 1] - breaks[pnl]);
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                ys.push_back(mid + half * rule.nodes[i]);
                ws.push_back(half * rule.weights[i]);
            }
        }
        double aerr = 0.0;
        std::vector<Complex> hv = blocks_on_line(mode, s, params, ys, &aerr);
        Complex sum{0.0, 0.0};
        double mags = 0.0;
        for (size_t i = 0; i < ys.size(); ++i) {
            const double y = ys[i];
            const Complex z{1.0 / T, y};
            const Complex f = std::exp(-(H * y) * (H * y)) *
                              Complex{std::cos(2.0 * T * y), std::sin(2.0 * T * y)} *
                              std::exp(kexp * std::log(z)) * hv[i];
            sum += ws[i] * f;
            mags += ws[i] * std::abs(f);
        }
        block_err = aerr * (y_hi - y_lo);
        mag_sum = mags;
        cur = sum;
        if (level > 0) {
            diff = std::abs(cur - prev);
            if (diff <= q.rel_tol * std::abs(cur) + 1e-14 * mag_sum + 1e-300) break;
        }
        prev = cur;
    }
    // the 1e-11 mag_sum floor covers correlated block-engine roundoff that
    // the per-node error estimates miss (visible as the residual imaginary
    // part of the full-range audits)
    return {cur, diff + block_err + 1e-11 * mag_sum, panels_total};
}

} // namespace

WeightResult weight_W_exact(const SpectralPoint& s, const WeightParams& params,
                            const QuadratureSpec& q) {
    s.validate();
    params.validate();
    const double pref = std::pow(params.T, -4.0 * params.k + 2.5) * params.H();
    RawWeight r = integrate_weight(Channel::u, s, params, q, 0.0, params.y_cutoff());
    return {pref * 2.0 * r.integral.real(), pref * 2.0 * r.abs_err, r.panels};
}

WeightResult weight_Wcheck_exact(const SpectralPoint& s, const WeightParams& params,
                                 const QuadratureSpec& q) {
    s.validate();
    params.validate();
    const double pref = std::pow(params.T, -4.0 * params.k + 2.5) * params.H();
    RawWeight r = integrate_weight(Channel::t, s, params, q, 0.0, params.y_cutoff());
    return {pref * 2.0 * r.integral.real(), pref * 2.0 * r.abs_err, r.panels};
}

AdaptiveResult weight_W_full_audit(const SpectralPoint& s, const WeightParams& params,
                                   const QuadratureSpec& q) {
    s.validate();
    params.validate();
    const double pref = std::pow(params.T, -4.0 * params.k + 2.5) * params.H();
    RawWeight r = integrate_weight(Channel::u, s, params, q, -params.y_cutoff(),
                                   params.y_cutoff());
    return {pref * r.integral, pref * r.abs_err, r.panels};
}

AdaptiveResult weight_Wcheck_full_audit(const SpectralPoint& s,
                                        const WeightParams& params,
                                        const QuadratureSpec& q) {
    s.validate();
    params.validate();
    const double pref = std::pow(params.T, -4.0 * params.k + 2.5) * params.H();
    RawWeight r = integrate_weight(Channel::t, s, params, q, -params.y_cutoff(),
                                   params.y_cutoff());
    return {pref * r.integral, pref * r.abs_err, r.panels};
}

std::pair<BlockValue, BlockValue> convexity_point(const SpectralPoint& s,
                                                  const WeightParams& params,
                                                  PrecisionSpec prec) {
    s.validate();
    params.validate();
    const Complex z{1.0 / params.T, 0.0};
    BlockValue u = block_Htilde_u(s, z, params, prec);
    BlockValue t = block_Htilde_t(s, z, params, prec);
    const double zu = std::pow(params.T, -2.0 * params.k);
    const double zt = std::pow(params.T, 2.0 * params.k);
    u.value *= zu;
    u.abs_err *= zu;
    t.value *= zt;
    t.abs_err *= zt;
    return {u, t};
}

} // namespace ccb
