#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "ccb/averaging.hpp"
#include "ccb/blocks.hpp"
#include "ccb/io_format.hpp"
#include "ccb/scalar.hpp"
#include "ccb/spectrum.hpp"

namespace ccb {

void SpectrumTable::validate() const {
    if (rows.empty())
        throw DomainError("SpectrumTable: first row (sigma=1, t=0, 1) is mandatory");
    const SpectrumRow& head = rows.front();
    if (head.s.sigma != 1.0 || head.s.t != 0.0 || head.ctilde_sq != 1.0)
        throw DomainError("SpectrumTable: first row must be (1, 0, 1)");
    double prev = -1.0;
    for (const SpectrumRow& r : rows) {
        r.s.validate();
        if (r.ctilde_sq < 0.0)
            throw DomainError("SpectrumTable: ctilde_sq >= 0 required");
        const double lam = r.s.lambda();
        if (lam < prev - 1e-12)
            throw DomainError("SpectrumTable: rows must be sorted by eigenvalue");
        prev = lam;
    }
}

SpectrumTable parse_spectrum(std::istream& in, const std::string& source_label) {
    SpectrumTable tab;
    tab.source = source_label;
    std::string line;
    unsigned lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw DomainError(source_label + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        double vals[3];
        char comma;
        if (!(row >> vals[0] >> comma >> vals[1]) || comma != ',')
            fail("expected sigma,t,ctilde_sq");
        if (!(row >> comma >> vals[2]) || comma != ',') fail("expected sigma,t,ctilde_sq");
        std::string rest;
        if (row >> rest) fail("trailing characters");
        try {
            tab.rows.push_back({SpectralPoint(vals[0], vals[1]), vals[2]});
        } catch (const DomainError& e) {
            fail(e.what());
        }
        if (tab.rows.size() == 1 &&
            (vals[0] != 1.0 || vals[1] != 0.0 || vals[2] != 1.0))
            fail("first data row must be 1,0,1");
    }
    tab.validate();
    return tab;
}

SpectrumTable load_spectrum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open spectrum file: " + path);
    return parse_spectrum(in, path);
}

void write_spectrum(std::ostream& out, const SpectrumTable& tab) {
    out << "# sigma,t,ctilde_sq";
    if (!tab.source.empty()) out << "  (" << tab.source << ")";
    out << "\n";
    for (const SpectrumRow& r : tab.rows)
        out << format_g17(r.s.sigma) << ',' << format_g17(r.s.t) << ','
            << format_g17(r.ctilde_sq) << "\n";
}

BlockValue channel_sum(const SpectrumTable& tab, Complex z, Channel channel,
                       const WeightParams& params, PrecisionSpec prec) {
    tab.validate();
    params.validate();
    const double kk = 2.0 * params.k;
    const Complex pref = principal_pow(z, channel == Channel::u ? kk : -kk);
    Complex sum{0.0, 0.0};
    double err = 0.0;
    for (const SpectrumRow& r : tab.rows) {
        if (r.ctilde_sq == 0.0) continue;
        BlockValue b = channel == Channel::u
                           ? block_Htilde_u(r.s, z, params, prec)
                           : block_Htilde_t(r.s, z, params, prec);
        sum += r.ctilde_sq * b.value;
        err += r.ctilde_sq * b.abs_err;
    }
    return {pref * sum, std::abs(pref) * err,
            channel == Channel::u ? Method::barnes : Method::connection};
}

DefectReport averaged_defect(const SpectrumTable& tab, const WeightParams& params,
                             PrecisionSpec /*prec*/, const std::vector<double>& t_grid) {
    tab.validate();
    params.validate();
    DefectReport rep;
    rep.contrib_lhs.reserve(tab.rows.size());
    rep.contrib_rhs.reserve(tab.rows.size());
    for (const SpectrumRow& r : tab.rows) {
        const double wu =
            r.ctilde_sq == 0.0 ? 0.0 : weight_W_exact(r.s, params).value * r.ctilde_sq;
        const double wt = r.ctilde_sq == 0.0
                              ? 0.0
                              : weight_Wcheck_exact(r.s, params).value * r.ctilde_sq;
        rep.contrib_lhs.push_back(wu);
        rep.contrib_rhs.push_back(wt);
        rep.lhs += wu;
        rep.rhs += wt;
    }
    rep.defect = rep.lhs - rep.rhs;
    auto argsort = [](const std::vector<double>& v) {
        std::vector<std::size_t> idx(v.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return std::abs(v[a]) > std::abs(v[b]);
        });
        return idx;
    };
    rep.top_lhs = argsort(rep.contrib_lhs);
    rep.top_rhs = argsort(rep.contrib_rhs);
    for (double t : t_grid) {
        SpectralPoint s(0.5, t);
        rep.grid.push_back({t, weight_W_exact(s, params).value,
                            weight_Wcheck_exact(s, params).value});
    }
    return rep;
}

double window_sum(const SpectrumTable& tab, double T, double H) {
    tab.validate();
    double sum = 0.0;
    for (const SpectrumRow& r : tab.rows)
        if (std::abs(r.s.t - T) <= H) sum += r.ctilde_sq;
    return sum;
}

SpectrumTable synth_spectrum(double T_max, double density_const,
                             const CoeffModel& model, std::uint64_t seed) {
    if (!(T_max > 0.0 && T_max <= 5000.0))
        throw DomainError("synth_spectrum: 0 < T_max <= 5000 required");
    if (!(density_const > 0.0)) throw DomainError("synth_spectrum: density_const > 0");
    SpectrumTable tab;
    tab.source = "synthetic seed=" + std::to_string(seed);
    tab.rows.push_back({SpectralPoint(1.0, 0.0), 1.0});
    std::mt19937_64 rng(seed);
    // counting function N(t) = density_const t^2 inverted at j - 1/2, with a
    // deterministic jitter of a fraction of the local spacing
    for (std::uint64_t j = 1;; ++j) {
        const double base = std::sqrt((j - 0.5) / density_const);
        const double spacing = 0.5 / (density_const * std::max(base, 1e-9));
        const double u = (rng() >> 11) * 0x1.0p-53;
        double t = base + 0.3 * spacing * (2.0 * u - 1.0);
        if (t <= 0.0) t = base;
        if (t > T_max) break;
        double c = 1.0;
        if (model.kind == CoeffModel::Kind::exponential) {
            const double v = (rng() >> 11) * 0x1.0p-53;
            c = -model.mean * std::log1p(-v);
        } else {
            rng(); // keep the stream layout identical across models
        }
        tab.rows.push_back({SpectralPoint(0.5, t), c});
    }
    tab.validate();
    return tab;
}

} // namespace ccb
