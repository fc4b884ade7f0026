#ifndef CCB_QUADRATURE_HPP
#define CCB_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "ccb/precision.hpp"
#include "ccb/types.hpp"

namespace ccb {

// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(unsigned order);

// The same rule refined to the current BigReal working precision (Newton on
// P_n from the machine nodes).  Not cached: the cost is trivial next to any
// big-float integrand.
struct BigGaussRule {
    std::vector<BigReal> nodes;
    std::vector<BigReal> weights;
};
BigGaussRule big_gauss_legendre(unsigned order);

struct AdaptiveResult {
    Complex value{0.0, 0.0};
    double abs_err = 0.0;
    unsigned panels_used = 0;
};

// Adaptive composite Gauss-Legendre over the panels defined by `breaks`
// (ascending, at least two entries).  Each panel's error is estimated by
// comparing one rule application against its bisection; the worst panel is
// split until the summed estimate is below rel_tol * |value| + 1e-300.
// Throws ConvergenceError when max_panels is exhausted.
AdaptiveResult integrate_adaptive(const std::function<Complex(double)>& f,
                                  const std::vector<double>& breaks,
                                  const QuadratureSpec& spec);

// Breakpoints for [a, b] sized so that `phase(x)`, a nondecreasing total
// phase, advances at most spec.phase_per_panel per panel.
std::vector<double> phase_breaks(double a, double b,
                                 const std::function<double(double)>& phase,
                                 const QuadratureSpec& spec);

} // namespace ccb

#endif
