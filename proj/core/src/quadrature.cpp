#include "ccb/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

namespace ccb {

namespace {

GaussRule make_rule(unsigned n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    // Newton on P_n with the Chebyshev-like initial guess; standard and
    // accurate to machine precision for the orders used here.
    for (unsigned i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (unsigned j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.nodes[i] = -x;
        r.weights[i] = w;
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

Complex panel_value(const std::function<Complex(double)>& f, double a, double b,
                    const GaussRule& rule) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    Complex sum{0.0, 0.0};
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

struct Panel {
    double a, b;
    Complex coarse;  // one rule application
    Complex fine;    // two halves
    double err;      // |coarse - fine|
};

Panel make_panel(const std::function<Complex(double)>& f, double a, double b,
                 const GaussRule& rule) {
    Panel p;
    p.a = a;
    p.b = b;
    p.coarse = panel_value(f, a, b, rule);
    double m = 0.5 * (a + b);
    p.fine = panel_value(f, a, m, rule) + panel_value(f, m, b, rule);
    p.err = std::abs(p.coarse - p.fine);
    return p;
}

} // namespace

const GaussRule& gauss_legendre(unsigned order) {
    static std::mutex mu;
    static std::map<unsigned, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
    return it->second;
}

AdaptiveResult integrate_adaptive(const std::function<Complex(double)>& f,
                                  const std::vector<double>& breaks,
                                  const QuadratureSpec& spec) {
    spec.validate();
    if (breaks.size() < 2 || !std::is_sorted(breaks.begin(), breaks.end()))
        throw DomainError("integrate_adaptive: need ascending breakpoints");
    const GaussRule& rule = gauss_legendre(spec.panel_order);

    auto cmp = [](const Panel& x, const Panel& y) { return x.err < y.err; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> heap(cmp);

    Complex total{0.0, 0.0};
    double err_sum = 0.0;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        Panel p = make_panel(f, breaks[i], breaks[i + 1], rule);
        total += p.fine;
        err_sum += p.err;
        heap.push(std::move(p));
    }
    unsigned panels = static_cast<unsigned>(breaks.size() - 1);

    while (err_sum > spec.rel_tol * std::abs(total) + 1e-300) {
        if (panels + 1 > spec.max_panels)
            throw ConvergenceError("integrate_adaptive: panel budget exhausted");
        Panel worst = heap.top();
        heap.pop();
        total -= worst.fine;
        err_sum -= worst.err;
        double m = 0.5 * (worst.a + worst.b);
        if (m <= worst.a || m >= worst.b)
            throw ConvergenceError("integrate_adaptive: panel width underflow");
        for (Panel half : {make_panel(f, worst.a, m, rule), make_panel(f, m, worst.b, rule)}) {
            total += half.fine;
            err_sum += half.err;
            heap.push(std::move(half));
        }
        ++panels;
    }
    return {total, err_sum, panels};
}

std::vector<double> phase_breaks(double a, double b,
                                 const std::function<double(double)>& phase,
                                 const QuadratureSpec& spec) {
    spec.validate();
    if (!(b > a)) throw DomainError("phase_breaks: need b > a");
    const double pa = phase(a), pb = phase(b);
    const double span = pb - pa;
    if (!(span >= 0.0)) throw DomainError("phase_breaks: phase must be nondecreasing");
    unsigned n = static_cast<unsigned>(std::ceil(span / spec.phase_per_panel)) + 1;
    if (n > spec.max_panels / 2)
        throw ConvergenceError("phase_breaks: too many phase panels");
    std::vector<double> breaks;
    breaks.reserve(n + 1);
    breaks.push_back(a);
    for (unsigned i = 1; i < n; ++i) {
        double target = pa + span * i / n;
        double lo = breaks.back(), hi = b;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * (std::abs(hi) + 1); ++it) {
            double mid = 0.5 * (lo + hi);
            (phase(mid) < target ? lo : hi) = mid;
        }
        breaks.push_back(0.5 * (lo + hi));
    }
    breaks.push_back(b);
    return breaks;
}

BigGaussRule big_gauss_legendre(unsigned order) {
    const GaussRule& seed = gauss_legendre(order);
    BigGaussRule rule;
    rule.nodes.reserve(order);
    rule.weights.reserve(order);
    for (unsigned i = 0; i < order; ++i) {
        BigReal x(seed.nodes[i]);
        BigReal p, dp;
        // Newton from the machine node; quadratic convergence reaches the
        // working precision in a handful of steps
        for (int it = 0; it < 40; ++it) {
            BigReal pm1(1), pk(x);
            for (unsigned k = 2; k <= order; ++k) {
                BigReal pk1 = BigReal(((2 * k - 1) * x * pk - (k - 1) * pm1) / k);
                pm1 = pk;
                pk = pk1;
            }
            p = pk;
            dp = BigReal(order * (x * pk - pm1) / (x * x - 1));
            BigReal step = BigReal(p / dp);
            x -= step;
            if (step == 0 || abs(step) < pow(BigReal(10),
                    -2 * static_cast<int>(BigReal::default_precision())))
                break;
        }
        rule.nodes.push_back(x);
        rule.weights.push_back(BigReal(2 / ((1 - x * x) * dp * dp)));
    }
    return rule;
}

} // namespace ccb
