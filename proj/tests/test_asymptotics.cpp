#include <cmath>
#include <complex>

#include <doctest.h>

#include "ccb/asymptotics.hpp"
#include "ccb/blocks.hpp"

using ccb::Complex;

TEST_SUITE("asymptotics") {

TEST_CASE("u-channel expansion coefficients") {
    CHECK(ccb::u_expansion_coeff(0) == 1.0);
    CHECK(ccb::u_expansion_coeff(1) == -1.0 / 3.0);
    CHECK(std::abs(ccb::u_expansion_coeff(2) - 1.0 / 18.0) < 1e-17);
    CHECK(std::abs(ccb::u_expansion_coeff(3) + 1.0 / 162.0) < 1e-18);
    CHECK_THROWS_AS(ccb::u_expansion_coeff(7), ccb::DomainError);
}

TEST_CASE("u-channel asymptotic against the exact block") {
    ccb::WeightParams params(1, 75.0, 0.1);
    // measured relative errors at these points are 0.03% .. 3.7% (the series
    // drops the 1/(8tz) Bessel correction); 0.05 has comfortable margin
    for (double t : {30.0, 60.0, 100.0}) {
        for (double zr : {0.05, 0.08, 0.15}) {
            ccb::SpectralPoint s(0.5, t);
            Complex exact = ccb::block_Htilde_u(s, {zr, 0.0}, params).value;
            ccb::BlockValue asym = ccb::u_block_asym(s, {zr, 0.0}, params, 2);
            CHECK(std::abs(asym.value - exact) < 0.05 * std::abs(exact));
            CHECK(std::abs(asym.value - exact) < asym.abs_err);
        }
    }
    // the (t z^3)^j corrections matter once t z^3 is noticeable
    ccb::SpectralPoint s(0.5, 100.0);
    Complex exact = ccb::block_Htilde_u(s, {0.15, 0.0}, params).value;
    double e0 = std::abs(ccb::u_block_asym(s, {0.15, 0.0}, params, 0).value - exact);
    double e2 = std::abs(ccb::u_block_asym(s, {0.15, 0.0}, params, 2).value - exact);
    CHECK(e2 < 0.1 * e0);
    // hypothesis violations
    CHECK_THROWS_AS(ccb::u_block_asym(ccb::SpectralPoint(0.5, 0.5), {0.1, 0.0},
                                      params),
                    ccb::DomainError);
    CHECK_THROWS_AS(ccb::u_block_asym(s, {1e-5, 0.0}, params), ccb::DomainError);
    CHECK_THROWS_AS(ccb::u_block_asym(s, {1e-4, 0.2}, params), ccb::DomainError);
}

TEST_CASE("t-channel asymptotic error falls like 1/t") {
    ccb::WeightParams params(1, 1000.0, 0.025);
    double rel10 = 0.0, rel50 = 0.0;
    for (double t : {10.0, 50.0}) {
        ccb::SpectralPoint s(0.5, t);
        Complex z{1.0 / params.T, 0.05};
        Complex exact = ccb::block_Htilde_t(s, z, params).value;
        double rel = std::abs(ccb::t_block_asym(s, z, params).value - exact) /
                     std::abs(exact);
        (t == 10.0 ? rel10 : rel50) = rel;
    }
    // measured: 1.251e-2 and 2.500e-3, i.e. 1/(8t) to three digits
    CHECK(rel10 < 0.02);
    CHECK(rel50 < 0.004);
    CHECK(std::abs(rel50 / rel10 - 0.2) < 0.04);
    CHECK_THROWS_AS(ccb::t_block_asym(ccb::SpectralPoint(0.5, 10.0), {0.05, -0.01},
                                      params),
                    ccb::DomainError);
    CHECK_THROWS_AS(ccb::t_block_asym(ccb::SpectralPoint(0.5, 10.0), {0.25, 0.25},
                                      params),
                    ccb::DomainError);
}

TEST_CASE("smooth factor reproduces the t-channel main term") {
    // z^p Htilde_t ~ t^{4k-5/2} y^{p+1} rho(y) e^{-2it log y} is an exact
    // rearrangement of the main term, so the two sides must agree to rounding
    ccb::WeightParams params(1, 1000.0, 0.025);
    for (double p : {0.5, 2.5}) {
        for (double y : {0.005, 0.03, 0.09}) {
            for (double t : {5.0, 40.0, 99.0}) {
                ccb::SpectralPoint s(0.5, t);
                Complex z{1.0 / params.T, y};
                Complex lhs = std::pow(z, p) *
                              ccb::t_block_asym(s, z, params).value;
                Complex rhs = std::pow(t, 4.0 * params.k - 2.5) *
                              std::pow(y, p + 1.0) *
                              ccb::rho_smooth(y, t, params, p) *
                              std::exp(Complex{0.0, -2.0 * t * std::log(y)});
                CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
            }
        }
    }
    CHECK_THROWS_AS(ccb::rho_smooth(1e-4, 10.0, params, 0.5), ccb::DomainError);
    CHECK_THROWS_AS(ccb::rho_smooth(0.05, 200.0, params, 0.5), ccb::DomainError);
}

TEST_CASE("weight main terms at reference points") {
    ccb::WeightParams params(1, 75.0, 0.1);
    // at t = T all damping factors are at their centers
    CHECK(std::abs(ccb::weight_W_asym(75.0, params) - 0.5 * std::exp(-2.0)) <
          1e-16);
    CHECK(std::abs(ccb::alpha_phase(75.0, params) -
                   (0.75 * M_PI + 150.0 * (1.25 + std::log(2.0)))) < 1e-12);
    // Wcheck main term assembles amplitude x cos(alpha)
    ccb::WeightParams q(1, 1000.0, 0.025);
    const double t = 20.0, H = q.H();
    const double amp = std::exp(-2.0) * H / std::sqrt(t) *
                       std::exp(-std::pow(t * H / q.T, 2.0));
    CHECK(std::abs(ccb::weight_Wcheck_asym(t, q) -
                   amp * std::cos(ccb::alpha_phase(t, q))) < 1e-14 * amp);
    CHECK_THROWS_AS(ccb::weight_W_asym(0.5, params), ccb::DomainError);
    CHECK_THROWS_AS(ccb::weight_Wcheck_asym(0.5, params), ccb::DomainError);
}

} // TEST_SUITE
