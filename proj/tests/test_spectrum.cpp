#include <cmath>
#include <sstream>
#include <string>

#include <doctest.h>

#include "ccb/averaging.hpp"
#include "ccb/blocks.hpp"
#include "ccb/spectrum.hpp"

using ccb::Complex;

namespace {

ccb::SpectrumTable from_text(const std::string& text) {
    std::istringstream in(text);
    return ccb::parse_spectrum(in, "mem");
}

std::string error_of(const std::string& text) {
    try {
        from_text(text);
    } catch (const ccb::DomainError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_SUITE("spectrum") {

TEST_CASE("parser accepts comments, blanks, and reports line numbers") {
    ccb::SpectrumTable tab = from_text(
        "# spectral data\n"
        "\n"
        "1,0,1\n"
        "0.5,2.5,0.75  # inline comment\n");
    REQUIRE(tab.rows.size() == 2);
    CHECK(tab.rows[1].s.t == 2.5);
    CHECK(tab.rows[1].ctilde_sq == 0.75);

    CHECK(error_of("1,0,1\n0.5,x,1\n").find("mem:2:") == 0);
    CHECK(error_of("1,0,1\n\n0.5,1,1 junk\n").find("mem:3:") == 0);
    CHECK(error_of("0.9,0,1\n").find("first data row") != std::string::npos);
    CHECK(error_of("1,0,1\n0.4,0,1\n").find("mem:2:") == 0); // sigma < 1/2
    CHECK_THROWS_AS(from_text("1,0,1\n0.5,1,-0.5\n"), ccb::DomainError);
    CHECK_THROWS_AS(from_text("1,0,1\n0.5,9,1\n0.5,3,1\n"), ccb::DomainError);
    CHECK_THROWS_AS(from_text(""), ccb::DomainError);
}

TEST_CASE("write/parse round trip") {
    ccb::SpectrumTable tab =
        from_text("1,0,1\n0.75,0,0.125\n0.5,1.0000000000000002,3e-5\n");
    std::ostringstream out;
    ccb::write_spectrum(out, tab);
    std::istringstream back(out.str());
    ccb::SpectrumTable tab2 = ccb::parse_spectrum(back, "mem2");
    REQUIRE(tab2.rows.size() == tab.rows.size());
    for (size_t i = 0; i < tab.rows.size(); ++i) {
        CHECK(tab2.rows[i].s.sigma == tab.rows[i].s.sigma);
        CHECK(tab2.rows[i].s.t == tab.rows[i].s.t);
        CHECK(tab2.rows[i].ctilde_sq == tab.rows[i].ctilde_sq);
    }
}

TEST_CASE("synthetic tables are deterministic with the advertised density") {
    ccb::CoeffModel model;
    model.kind = ccb::CoeffModel::Kind::exponential;
    model.mean = 2.0;
    ccb::SpectrumTable a = ccb::synth_spectrum(50.0, 0.1, model, 42);
    ccb::SpectrumTable b = ccb::synth_spectrum(50.0, 0.1, model, 42);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].s.t == b.rows[i].s.t);
        CHECK(a.rows[i].ctilde_sq == b.rows[i].ctilde_sq);
    }
    std::ostringstream wa, wb;
    ccb::write_spectrum(wa, a);
    ccb::write_spectrum(wb, b);
    CHECK(wa.str() == wb.str());
    // counting function N(t) ~ 0.1 t^2: expect ~250 eigenvalues up to 50
    const double n = static_cast<double>(a.rows.size()) - 1.0;
    CHECK(std::abs(n - 0.1 * 50.0 * 50.0) <= 0.05 * 0.1 * 50.0 * 50.0);
    // a different seed moves the jittered eigenvalues
    ccb::SpectrumTable c = ccb::synth_spectrum(50.0, 0.1, model, 43);
    CHECK(c.rows[5].s.t != a.rows[5].s.t);
    CHECK_THROWS_AS(ccb::synth_spectrum(-1.0, 0.1, model, 1), ccb::DomainError);
}

TEST_CASE("window sum") {
    ccb::SpectrumTable tab =
        from_text("1,0,1\n0.5,60,2\n0.5,74,4\n0.5,80,8\n0.5,90,16\n");
    CHECK(ccb::window_sum(tab, 75.0, 10.0) == 12.0); // t = 74 and 80, inclusive
    CHECK(ccb::window_sum(tab, 75.0, 1.0) == 4.0);
    CHECK(ccb::window_sum(tab, 75.0, 1e9) == 31.0);
}

TEST_CASE("channel sums are linear in the coefficients") {
    ccb::WeightParams params(1, 75.0, 0.1);
    Complex z{0.05, 0.02};
    ccb::SpectrumTable base = from_text("1,0,1\n0.5,0.5,0.2\n0.5,3,0.4\n");
    ccb::SpectrumTable bumped = from_text("1,0,1\n0.5,0.5,0.2\n0.5,3,1.4\n");
    for (ccb::Channel ch : {ccb::Channel::u, ccb::Channel::t}) {
        Complex d = ccb::channel_sum(bumped, z, ch, params).value -
                    ccb::channel_sum(base, z, ch, params).value;
        const double kk = ch == ccb::Channel::u ? 2.0 : -2.0;
        ccb::BlockValue blk =
            ch == ccb::Channel::u
                ? ccb::block_Htilde_u(ccb::SpectralPoint(0.5, 3.0), z, params)
                : ccb::block_Htilde_t(ccb::SpectralPoint(0.5, 3.0), z, params);
        Complex expect = std::pow(z, kk) * blk.value;
        // the subtraction of the two sums loses a couple of digits
        CHECK(std::abs(d - expect) < 1e-11 * std::abs(expect));
    }
}

TEST_CASE("averaged defect reduces to one weight on the mandatory row") {
    ccb::WeightParams params(1, 75.0, 0.1);
    ccb::SpectrumTable tab = from_text("1,0,1\n");
    ccb::DefectReport rep = ccb::averaged_defect(tab, params,
                                                 ccb::PrecisionSpec::machine(), {});
    ccb::SpectralPoint one(1.0, 0.0);
    CHECK(rep.lhs == ccb::weight_W_exact(one, params).value);
    CHECK(rep.rhs == ccb::weight_Wcheck_exact(one, params).value);
    CHECK(rep.defect == rep.lhs - rep.rhs);
    REQUIRE(rep.contrib_lhs.size() == 1);
    CHECK(rep.grid.empty());
}

TEST_CASE("averaged defect bookkeeping on a small table") {
    ccb::WeightParams params(1, 75.0, 0.1);
    ccb::SpectrumTable tab = from_text("1,0,1\n0.5,0.5,2\n0.5,75,1\n");
    ccb::DefectReport rep = ccb::averaged_defect(tab, params,
                                                 ccb::PrecisionSpec::machine(),
                                                 {75.0});
    REQUIRE(rep.contrib_lhs.size() == 3);
    // per-row contributions are the scaled weights and add up to the sides
    for (size_t i = 0; i < 3; ++i) {
        const ccb::SpectrumRow& r = tab.rows[i];
        CHECK(rep.contrib_lhs[i] ==
              ccb::weight_W_exact(r.s, params).value * r.ctilde_sq);
    }
    CHECK(std::abs(rep.lhs - (rep.contrib_lhs[0] + rep.contrib_lhs[1] +
                              rep.contrib_lhs[2])) < 1e-18);
    // ranking is by decreasing |contribution|
    for (size_t i = 1; i < 3; ++i) {
        CHECK(std::abs(rep.contrib_lhs[rep.top_lhs[i - 1]]) >=
              std::abs(rep.contrib_lhs[rep.top_lhs[i]]));
        CHECK(std::abs(rep.contrib_rhs[rep.top_rhs[i - 1]]) >=
              std::abs(rep.contrib_rhs[rep.top_rhs[i]]));
    }
    // the weight curve is sampled at the requested abscissa
    REQUIRE(rep.grid.size() == 1);
    CHECK(rep.grid[0][0] == 75.0);
    CHECK(rep.grid[0][1] ==
          ccb::weight_W_exact(ccb::SpectralPoint(0.5, 75.0), params).value);
}

} // TEST_SUITE
