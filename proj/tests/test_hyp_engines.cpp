#include <cmath>
#include <complex>

#include <doctest.h>

#include "ccb/hyp.hpp"
#include "ccb/scalar.hpp"

using ccb::Complex;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// Frozen big-float locus-series values (cancellation-free real sums at 80
// digits; every Taylor coefficient is prod_{m<n}(lambda + m(m+1)) / (n!)^2 >= 0).
struct LocusOracle {
    double sigma, t, w, value;
};
constexpr LocusOracle kLocusOracles[] = {
    {0.5, 2.0, 0.9975, 3.00725459488050717e+02},
    {0.5, 10.0, 0.96, 1.54100608571634583e+11},
    {0.75, 0.0, 0.5, 1.13391555972608282e+00},
    {0.5, 0.0, -0.8, 8.58702359551284711e-01},
    {1.0, 0.0, 0.3, 1.00000000000000000e+00},
    {0.5, 1.0, 0.75, 3.47984113662874339e+00},
};
// e^{-pi t} times the first two oracles
constexpr double kNorm_t2_z005 = 5.61587573560505593e-01;  // t=2,  z=0.05
constexpr double kNorm_t10_z02 = 3.49978056756432331e-03;  // t=10, z=0.2
// deep-cancellation point t=50, z=0.35 (value ~ e^{-2 t asin z})
constexpr double kNorm_t50_z035 = 2.0545801090648665e-17;

} // namespace

TEST_SUITE("hyp_engines") {

TEST_CASE("direct taylor series") {
    // 2F1(1,1;2;x) = -log(1-x)/x
    ccb::BlockValue v = ccb::hyp2f1_taylor({1, 0}, {1, 0}, {2, 0}, {0.3, 0.0});
    CHECK(rel(v.value, {-std::log(0.7) / 0.3, 0.0}) < 1e-14);
    CHECK(v.method == ccb::Method::taylor);
    CHECK(v.abs_err < 1e-13);
    // value at the origin
    CHECK(ccb::hyp2f1_taylor({0.5, 3}, {0.5, -3}, {1, 0}, {0, 0}).value ==
          Complex{1.0, 0.0});
    // extended mode agrees with machine where both converge comfortably
    ccb::BlockValue e = ccb::hyp2f1_taylor({0.5, 3}, {0.5, -3}, {1, 0}, {0.4, 0.1},
                                           ccb::PrecisionSpec::extended(40));
    ccb::BlockValue m = ccb::hyp2f1_taylor({0.5, 3}, {0.5, -3}, {1, 0}, {0.4, 0.1});
    CHECK(rel(e.value, m.value) < 1e-12);
}

TEST_CASE("locus taylor oracle values") {
    ccb::PrecisionGuard guard(80);
    for (const LocusOracle& o : kLocusOracles) {
        ccb::SpectralPoint s(o.sigma, o.t);
        double v = ccb::hyp2f1_taylor_locus(s, o.w, 80).convert_to<double>();
        CHECK(std::abs(v - o.value) < 1e-14 * std::abs(o.value));
    }
    CHECK_THROWS_AS(
        ccb::hyp2f1_taylor_locus(ccb::SpectralPoint(0.5, 0.0), 1.5, 50),
        ccb::DomainError);
}

TEST_CASE("euler integral against taylor, u channel") {
    // real and complex z with 1 - z^2 inside the unit disk
    for (Complex z : {Complex{0.8, 0.0}, Complex{0.75, 0.3}, Complex{0.9, -0.2}}) {
        for (double sigma : {0.5, 0.6, 0.9, 0.999}) {
            ccb::SpectralPoint s(sigma, 0.0);
            Complex w = 1.0 - z * z;
            ccb::BlockValue te =
                ccb::hyp2f1_taylor(s.s(), 1.0 - s.s(), {1, 0}, w);
            ccb::BlockValue eu = ccb::hyp2f1_euler(s, z, ccb::Channel::u);
            CHECK(rel(eu.value, te.value) < 1e-10);
        }
        ccb::SpectralPoint st(0.5, 0.7);
        Complex w = 1.0 - z * z;
        ccb::BlockValue te = ccb::hyp2f1_taylor(st.s(), 1.0 - st.s(), {1, 0}, w);
        ccb::BlockValue eu = ccb::hyp2f1_euler(st, z, ccb::Channel::u);
        CHECK(rel(eu.value, te.value) < 1e-10);
    }
}

TEST_CASE("euler integral against locus oracle at small z") {
    ccb::PrecisionGuard guard(80);
    // u-channel at w = 0.9975 (z = 0.05): far outside safe Taylor range in
    // machine arithmetic, the Euler integral must still deliver ~1e-11
    ccb::SpectralPoint s(0.5, 1.0);
    double oracle =
        ccb::hyp2f1_taylor_locus(s, 1.0 - 0.05 * 0.05, 80).convert_to<double>();
    ccb::BlockValue eu = ccb::hyp2f1_euler(s, {0.05, 0.0}, ccb::Channel::u);
    CHECK(rel(eu.value, {oracle, 0.0}) < 1e-10);
}

TEST_CASE("euler t channel matches ODE continuation") {
    ccb::SpectralPoint s(0.5, 0.8);
    for (Complex z : {Complex{0.2, 0.0}, Complex{0.15, 0.1}}) {
        Complex w = 1.0 - 1.0 / (z * z);
        ccb::BlockValue eu = ccb::hyp2f1_euler(s, z, ccb::Channel::t);
        ccb::BlockValue od = ccb::hyp2f1_ode_continuation(s, w, 0.0);
        CHECK(rel(eu.value, od.value) < 1e-9);
    }
    // sigma = 1 gives the constant block
    ccb::BlockValue one = ccb::hyp2f1_euler(ccb::SpectralPoint(1.0, 0.0),
                                            {0.2, 0.0}, ccb::Channel::t);
    CHECK(rel(one.value, {1.0, 0.0}) < 1e-12);
}

TEST_CASE("barnes contour against frozen normalized oracles") {
    ccb::BlockValue a = ccb::hyp2f1_barnes(ccb::SpectralPoint(0.5, 2.0), {0.05, 0.0});
    CHECK(rel(a.value, {kNorm_t2_z005, 0.0}) < 1e-11);
    CHECK(std::abs(a.value - Complex{kNorm_t2_z005, 0.0}) < 100.0 * a.abs_err);
    ccb::BlockValue b = ccb::hyp2f1_barnes(ccb::SpectralPoint(0.5, 10.0), {0.2, 0.0});
    CHECK(rel(b.value, {kNorm_t10_z02, 0.0}) < 1e-11);
    CHECK(b.method == ccb::Method::barnes);
}

TEST_CASE("barnes deep-cancellation escalation") {
    // value ~ 1e-17 against O(1) contour node magnitudes; the wrapper must
    // escalate to the big-float node sum and still hit full relative accuracy
    ccb::BlockValue v =
        ccb::hyp2f1_barnes(ccb::SpectralPoint(0.5, 50.0), {0.35, 0.0});
    CHECK(rel(v.value, {kNorm_t50_z035, 0.0}) < 1e-10);
    CHECK(v.abs_err < 1e-8 * std::abs(v.value));
}

TEST_CASE("barnes reusable contour serves multiple z") {
    ccb::BarnesContour contour(20.0, 0.01, 1.0);
    for (double z : {0.01, 0.02, 0.05}) {
        ccb::BlockValue direct = ccb::hyp2f1_barnes(ccb::SpectralPoint(0.5, 20.0),
                                                    {z, 0.0});
        ccb::BlockValue shared = contour.eval({z, 0.0});
        CHECK(rel(shared.value, direct.value) < 1e-11);
    }
    // derivative consistency against central differences
    Complex v1, v2, d1, d2;
    double e1, e2;
    const double h = 1e-6;
    contour.eval_pair({0.03 - h, 0.0}, v1, d1, e1);
    contour.eval_pair({0.03 + h, 0.0}, v2, d2, e2);
    Complex vm, dm;
    double em;
    contour.eval_pair({0.03, 0.0}, vm, dm, em);
    CHECK(std::abs(dm - (v2 - v1) / (2.0 * h)) < 1e-4 * std::abs(dm));
    CHECK_THROWS_AS(contour.eval({-0.01, 0.0}), ccb::DomainError);
}

TEST_CASE("barnes preconditions") {
    CHECK_THROWS_AS(ccb::hyp2f1_barnes(ccb::SpectralPoint(0.5, 0.5), {0.1, 0.0}),
                    ccb::DomainError);
    CHECK_THROWS_AS(ccb::hyp2f1_barnes(ccb::SpectralPoint(0.5, 5.0), {-0.1, 0.0}),
                    ccb::DomainError);
    CHECK_THROWS_AS(ccb::hyp2f1_barnes(ccb::SpectralPoint(0.5, 5.0), {1e-8, 0.1}),
                    ccb::ConditioningError);
}

TEST_CASE("connection formula against ODE continuation") {
    for (double t : {2.0, 5.0, 20.0}) {
        ccb::SpectralPoint s(0.5, t);
        for (Complex z : {Complex{0.15, 0.0}, Complex{0.1, 0.08}, Complex{0.02, 0.2}}) {
            Complex w = 1.0 - 1.0 / (z * z);
            ccb::BlockValue conn = ccb::hyp2f1_connection_t(s, z);
            ccb::BlockValue ode = ccb::hyp2f1_ode_continuation(s, w, 0.0);
            Complex ode_norm = ode.value * std::exp(-M_PI * t);
            CHECK(rel(conn.value, ode_norm) < 1e-9);
        }
    }
    CHECK_THROWS_AS(
        ccb::hyp2f1_connection_t(ccb::SpectralPoint(0.5, 5.0), {0.4, 0.0}),
        ccb::DomainError);
}

TEST_CASE("rho transformation identities") {
    // -rho(1/w) at w = 1 - z^{-2} equals (z / (1 + sqrt(1-z^2)))^2
    for (Complex z : {Complex{0.2, 0.0}, Complex{0.1, 0.05}}) {
        Complex w = 1.0 - 1.0 / (z * z);
        Complex direct = -ccb::rho_of(1.0 / w);
        Complex stable = ccb::minus_rho_t_channel(z);
        CHECK(std::abs(direct - stable) < 1e-13 * std::abs(stable));
    }
    CHECK(std::abs(ccb::rho_of({0.0, 0.0})) < 1e-300);
}

TEST_CASE("ODE continuation against taylor inside the disk") {
    for (Complex w : {Complex{0.6, 0.0}, Complex{-0.7, 0.2}, Complex{0.3, -0.5}}) {
        ccb::SpectralPoint s(0.5, 1.5);
        ccb::BlockValue te = ccb::hyp2f1_taylor(s.s(), 1.0 - s.s(), {1, 0}, w);
        ccb::BlockValue od = ccb::hyp2f1_ode_continuation(s, w, 0.0);
        CHECK(rel(od.value, te.value) < 1e-9);
    }
}

TEST_CASE("ODE continuation reaches far targets") {
    // far negative axis: cross-check against the Euler integral
    ccb::SpectralPoint s(0.5, 0.9);
    Complex w{-24.0, 0.0};
    Complex z = std::sqrt(1.0 - w); // z = 5
    ccb::BlockValue od = ccb::hyp2f1_ode_continuation(s, w, 0.0);
    ccb::BlockValue eu = ccb::hyp2f1_euler(s, z, ccb::Channel::u);
    CHECK(rel(od.value, eu.value) < 1e-9);
    // targets above/below the cut ray [1, inf) keep conjugate symmetry
    ccb::BlockValue up = ccb::hyp2f1_ode_continuation(s, {2.0, 0.3}, 0.0);
    ccb::BlockValue dn = ccb::hyp2f1_ode_continuation(s, {2.0, -0.3}, 0.0);
    CHECK(std::abs(up.value - std::conj(dn.value)) < 1e-9 * std::abs(up.value));
}

} // TEST_SUITE
