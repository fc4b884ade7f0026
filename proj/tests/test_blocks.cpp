#include <cmath>
#include <complex>

#include <doctest.h>

#include "ccb/blocks.hpp"
#include "ccb/calibration.hpp"
#include "ccb/scalar.hpp"

using ccb::Complex;

TEST_SUITE("blocks") {

TEST_CASE("H dispatch and elementary values") {
    // sigma = 1 block is identically 1
    CHECK(ccb::block_H(ccb::SpectralPoint(1.0, 0.0), {0.7, 0.2}).value ==
          Complex{1.0, 0.0});
    // small |w|: plain Taylor
    ccb::BlockValue v = ccb::block_H(ccb::SpectralPoint(0.75, 0.0), {0.5, 0.0});
    CHECK(v.method == ccb::Method::taylor);
    CHECK(std::abs(v.value.real() - 1.13391555972608282) < 1e-12);
    // |w| >= 1: routed through the Euler integral; cross-check with the ODE
    ccb::BlockValue e = ccb::block_H(ccb::SpectralPoint(0.5, 1.0), {1.5, 2.0});
    CHECK(e.method == ccb::Method::euler);
    Complex ode = ccb::hyp2f1_ode_continuation(ccb::SpectralPoint(0.5, 1.0),
                                               {1.5, 2.0}, 0.0).value;
    CHECK(std::abs(e.value - ode) < 1e-9 * std::abs(ode));
    // t > 1: reconstructed from the normalized Barnes value
    ccb::BlockValue b = ccb::block_H(ccb::SpectralPoint(0.5, 2.0), {0.9975, 0.0});
    CHECK(std::abs(b.value.real() - 3.00725459488050717e+02) < 1e-8 * 3.0e2);
    CHECK_THROWS_AS(ccb::block_H(ccb::SpectralPoint(0.5, 240.0), {0.99, 0.0}),
                    ccb::ConditioningError);
    CHECK_THROWS_AS(ccb::block_H(ccb::SpectralPoint(0.5, 1.0), {1.5, 0.0}),
                    ccb::DomainError);
}

TEST_CASE("H is real and its coefficients positive on the locus") {
    // on the spectrum locus all series coefficients are nonnegative, so
    // H(w) is real for real w < 1 and positive for w in [0, 1)
    for (double w : {-0.9, -0.3, 0.0, 0.4, 0.9}) {
        ccb::BlockValue v = ccb::block_H(ccb::SpectralPoint(0.5, 0.5), {w, 0.0});
        CHECK(std::abs(v.value.imag()) < 1e-12 * std::max(1.0, std::abs(v.value)));
        if (w >= 0.0) CHECK(v.value.real() >= 1.0);
    }
}

TEST_CASE("normalized block scaling across the t = 1 seam") {
    ccb::WeightParams params(1, 75.0, 0.1);
    Complex z{0.1, 0.0};
    // just below the seam Htilde = H; just above it carries t^{4k-2} e^{-pi t}
    ccb::BlockValue below =
        ccb::block_Htilde_u(ccb::SpectralPoint(0.5, 1.0 - 1e-9), z, params);
    ccb::BlockValue above =
        ccb::block_Htilde_u(ccb::SpectralPoint(0.5, 1.0 + 1e-9), z, params);
    const double scale = std::pow(1.0 + 1e-9, 2.0) * std::exp(-M_PI);
    CHECK(std::abs(above.value / below.value - scale) < 1e-6 * scale);
}

TEST_CASE("u and t channel normalized blocks at a paper-scale point") {
    ccb::WeightParams params(1, 75.0, 0.1);
    ccb::SpectralPoint s(0.5, 20.0);
    ccb::BlockValue u = ccb::block_Htilde_u(s, {0.02, 0.0}, params);
    CHECK(u.method == ccb::Method::barnes);
    // t^2 e^{-pi t} H(1 - z^2) with 2tz = 0.8: the confluent regime where
    // pi e^{-pi t} H ~ K0(2tz)
    const double expect =
        400.0 / M_PI * ccb::bessel_k(0, {0.8, 0.0}).real();
    CHECK(std::abs(u.value.real() - expect) < 2e-3 * expect);
    ccb::BlockValue t = ccb::block_Htilde_t(s, {0.02, 0.0}, params);
    CHECK(t.method == ccb::Method::connection);
    CHECK(std::abs(t.value) < ccb::envelope_bounds(ccb::Channel::t, s, {0.02, 0.0},
                                                   params) + 10.0 * t.abs_err);
    CHECK_THROWS_AS(ccb::block_Htilde_t(s, {0.31, 0.0}, params), ccb::DomainError);
    CHECK_THROWS_AS(ccb::block_Htilde_u(s, {0.51, 0.0}, params), ccb::DomainError);
}

TEST_CASE("envelope bounds hold on a coarse grid") {
    ccb::WeightParams params(1, 75.0, 0.1);
    // trivial range
    for (double sigma : {0.5, 0.8, 1.0}) {
        for (double az : {0.01, 0.1, 0.3}) {
            ccb::SpectralPoint s(sigma, 0.0);
            Complex z{az * 0.8, az * 0.6};
            double hu = std::abs(ccb::block_Htilde_u(s, z, params).value);
            CHECK(hu <= ccb::envelope_bounds(ccb::Channel::u, s, z, params));
            double ht = std::abs(ccb::block_Htilde_t(s, z, params).value);
            CHECK(ht <= ccb::envelope_bounds(ccb::Channel::t, s, z, params));
        }
    }
    // size range, real z and the averaging line
    for (double t : {2.0, 20.0, 75.0}) {
        ccb::SpectralPoint s(0.5, t);
        for (Complex z : {Complex{0.05, 0.0}, Complex{1.0 / 75.0, 0.05}}) {
            ccb::BlockValue b = ccb::block_Htilde_u(s, z, params);
            CHECK(std::abs(b.value) <=
                  ccb::envelope_bounds(ccb::Channel::u, s, z, params) +
                      10.0 * b.abs_err);
        }
    }
    CHECK_THROWS_AS(ccb::envelope_bounds(ccb::Channel::u,
                                         ccb::SpectralPoint(0.5, 1.0),
                                         {1.5, 0.0}, params),
                    ccb::DomainError);
}

TEST_CASE("t-channel blocks decay exponentially in t at fixed z") {
    // along the averaging line the envelope decays like exp(-c t/(T y + 1));
    // successive block magnitudes must fall at least at half that rate
    ccb::WeightParams params(1, 75.0, 0.1);
    Complex z{1.0 / 75.0, 0.05};
    const double per_t =
        ccb::calib::kEnvTDecayRate / (75.0 * z.imag() + 1.0);
    double prev = -1.0;
    for (double t : {10.0, 30.0, 50.0}) {
        ccb::SpectralPoint s(0.5, t);
        double mag = std::abs(ccb::block_Htilde_t(s, z, params).value) /
                     (std::pow(t, 1.5) * std::abs(z));
        if (prev > 0.0)
            CHECK(mag / prev < std::exp(-0.5 * per_t * 20.0));
        prev = mag;
    }
}

} // TEST_SUITE
