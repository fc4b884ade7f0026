// crossing-blocks: command-line surface over the block/weight library.
// Exit codes: 0 success, 2 domain/validation error, 3 non-convergence.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccb/asymptotics.hpp"
#include "ccb/averaging.hpp"
#include "ccb/blocks.hpp"
#include "ccb/io_format.hpp"
#include "ccb/scalar.hpp"
#include "ccb/spectrum.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

using ccb::format_g17;
using nlohmann::json;

unsigned worker_count() {
    if (const char* env = std::getenv("CROSSING_BLOCKS_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Shards [0, n) across the worker pool; results land at their own index, so
// output order is independent of completion order.
template <class Fn>
void parallel_rows(std::size_t n, Fn&& fn) {
    const unsigned workers = std::min<std::size_t>(worker_count(), n ? n : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        });
    for (std::thread& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

struct Output {
    std::string path;     // empty = stdout
    std::string format;   // "csv" or "json"

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw ccb::DomainError("cannot open output file: " + path);
        out << text;
    }
};

using Row = std::vector<std::pair<std::string, double>>;

std::string render_rows(const Output& out, const json& config_echo,
                        const std::vector<std::string>& columns,
                        const std::vector<Row>& rows) {
    if (out.format == "csv") {
        std::string text;
        for (std::size_t c = 0; c < columns.size(); ++c)
            text += (c ? "," : "") + columns[c];
        text += "\n";
        for (const Row& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                text += (c ? "," : "") + format_g17(row[c].second);
            text += "\n";
        }
        return text;
    }
    json doc;
    doc["tool_version"] = kToolVersion;
    doc["config_echo"] = config_echo;
    doc["rows"] = json::array();
    for (const Row& row : rows) {
        json r;
        for (const auto& [name, value] : row) r[name] = value;
        doc["rows"].push_back(std::move(r));
    }
    return doc.dump(2) + "\n";
}

// ---- block eval ----

struct BlockEvalConfig {
    std::string channel = "u";
    double sigma = 0.5, t = 0.0, z_re = 0.0, z_im = 0.0;
    unsigned k = 1;
    double T = 75.0, eps = 0.1;
    std::string method = "auto";
    Output out{"", "csv"};
};

int run_block_eval(const BlockEvalConfig& cfg) {
    const ccb::SpectralPoint s(cfg.sigma, cfg.t);
    const ccb::WeightParams params(cfg.k, cfg.T, cfg.eps);
    const ccb::Complex z{cfg.z_re, cfg.z_im};
    const ccb::Channel ch = cfg.channel == "u" ? ccb::Channel::u : ccb::Channel::t;
    const ccb::Complex w =
        ch == ccb::Channel::u ? 1.0 - z * z : 1.0 - 1.0 / (z * z);
    // normalization scale of Htilde relative to the plain hypergeometric H
    const double norm = s.t > 1.0
        ? std::pow(s.t, 4.0 * cfg.k - 2.0) * std::exp(-M_PI * s.t)
        : 1.0;

    ccb::BlockValue b;
    if (cfg.method == "auto") {
        b = ch == ccb::Channel::u ? ccb::block_Htilde_u(s, z, params)
                                  : ccb::block_Htilde_t(s, z, params);
    } else if (cfg.method == "taylor") {
        b = ccb::hyp2f1_taylor(s.s(), 1.0 - s.s(), {1.0, 0.0}, w);
        b.value *= norm;
        b.abs_err *= norm;
    } else if (cfg.method == "euler") {
        b = ccb::hyp2f1_euler(s, z, ch);
        b.value *= norm;
        b.abs_err *= norm;
    } else if (cfg.method == "barnes") {
        b = ccb::hyp2f1_barnes(s, z);
        const double tp = std::pow(s.t, 4.0 * cfg.k - 2.0);
        b.value *= tp;
        b.abs_err *= tp;
    } else if (cfg.method == "connection") {
        b = ccb::hyp2f1_connection_t(s, z);
        const double tp = std::pow(s.t, 4.0 * cfg.k - 2.0);
        b.value *= tp;
        b.abs_err *= tp;
    } else { // ode_continuation
        b = ccb::hyp2f1_ode_continuation(s, w, 0.0);
        b.value *= norm;
        b.abs_err *= norm;
    }

    json echo{{"channel", cfg.channel}, {"sigma", cfg.sigma},   {"t", cfg.t},
              {"z_re", cfg.z_re},       {"z_im", cfg.z_im},     {"k", cfg.k},
              {"T", cfg.T},             {"eps", cfg.eps},       {"method", cfg.method}};
    std::string text;
    if (cfg.out.format == "csv") {
        text = "value_re,value_im,abs_err,method\n" + format_g17(b.value.real()) +
               "," + format_g17(b.value.imag()) + "," + format_g17(b.abs_err) + "," +
               ccb::method_name(b.method) + "\n";
    } else {
        json doc;
        doc["tool_version"] = kToolVersion;
        doc["config_echo"] = echo;
        doc["rows"] = json::array({json{{"value_re", b.value.real()},
                                        {"value_im", b.value.imag()},
                                        {"abs_err", b.abs_err},
                                        {"method", ccb::method_name(b.method)}}});
        text = doc.dump(2) + "\n";
    }
    cfg.out.write(text);
    return 0;
}

// ---- figures / weights scan ----

struct GridConfig {
    unsigned k = 1;
    double T = 75.0, eps = 0.1;
    std::vector<double> ts;
    Output out{"", "csv"};
    json echo;
};

int run_weight_grid(const GridConfig& cfg, bool u_channel_figure,
                    bool both_channels) {
    const ccb::WeightParams params(cfg.k, cfg.T, cfg.eps);
    std::vector<Row> rows(cfg.ts.size());
    parallel_rows(cfg.ts.size(), [&](std::size_t i) {
        const double t = cfg.ts[i];
        const ccb::SpectralPoint s(0.5, t);
        if (both_channels) {
            const double w = ccb::weight_W_exact(s, params).value;
            const double wc = ccb::weight_Wcheck_exact(s, params).value;
            const double wa = t > 1.0 ? ccb::weight_W_asym(t, params)
                                      : std::numeric_limits<double>::quiet_NaN();
            const double wca = t > 1.0 ? ccb::weight_Wcheck_asym(t, params)
                                       : std::numeric_limits<double>::quiet_NaN();
            rows[i] = {{"t", t},       {"W", w},          {"Wcheck", wc},
                       {"W_asym", wa}, {"Wcheck_asym", wca}};
        } else {
            const double exact = u_channel_figure
                                     ? ccb::weight_W_exact(s, params).value
                                     : ccb::weight_Wcheck_exact(s, params).value;
            const double asym = u_channel_figure
                                    ? ccb::weight_W_asym(t, params)
                                    : ccb::weight_Wcheck_asym(t, params);
            rows[i] = {{"t", t},
                       {"exact", exact},
                       {"asym", asym},
                       {"abs_diff", std::abs(exact - asym)}};
        }
    });
    const std::vector<std::string> cols =
        both_channels ? std::vector<std::string>{"t", "W", "Wcheck", "W_asym",
                                                 "Wcheck_asym"}
                      : std::vector<std::string>{"t", "exact", "asym", "abs_diff"};
    cfg.out.write(render_rows(cfg.out, cfg.echo, cols, rows));
    return 0;
}

// ---- crossing ----

int run_crossing(const std::string& spectrum_path, unsigned k, double T, double eps,
                 const std::vector<double>& t_grid, const Output& out) {
    const ccb::SpectrumTable tab = ccb::load_spectrum(spectrum_path);
    const ccb::WeightParams params(k, T, eps);
    const ccb::DefectReport rep =
        ccb::averaged_defect(tab, params, ccb::PrecisionSpec::machine(), t_grid);

    if (out.format == "csv") {
        std::string text = "index,sigma,t,ctilde_sq,contrib_W,contrib_Wcheck\n";
        for (std::size_t i = 0; i < tab.rows.size(); ++i)
            text += std::to_string(i) + "," + format_g17(tab.rows[i].s.sigma) + "," +
                    format_g17(tab.rows[i].s.t) + "," +
                    format_g17(tab.rows[i].ctilde_sq) + "," +
                    format_g17(rep.contrib_lhs[i]) + "," +
                    format_g17(rep.contrib_rhs[i]) + "\n";
        out.write(text);
        return 0;
    }
    json doc;
    doc["tool_version"] = kToolVersion;
    doc["config_echo"] = {{"spectrum", spectrum_path}, {"k", k}, {"T", T}, {"eps", eps}};
    doc["lhs"] = rep.lhs;
    doc["rhs"] = rep.rhs;
    doc["defect"] = rep.defect;
    auto top = [&](const std::vector<std::size_t>& order,
                   const std::vector<double>& contrib) {
        json arr = json::array();
        for (std::size_t j = 0; j < std::min<std::size_t>(5, order.size()); ++j) {
            const std::size_t i = order[j];
            arr.push_back({{"index", i},
                           {"sigma", tab.rows[i].s.sigma},
                           {"t", tab.rows[i].s.t},
                           {"contribution", contrib[i]}});
        }
        return arr;
    };
    doc["top_contributors_W"] = top(rep.top_lhs, rep.contrib_lhs);
    doc["top_contributors_Wcheck"] = top(rep.top_rhs, rep.contrib_rhs);
    doc["grid"] = json::array();
    for (const auto& g : rep.grid)
        doc["grid"].push_back({{"t", g[0]}, {"W", g[1]}, {"Wcheck", g[2]}});
    out.write(doc.dump(2) + "\n");
    return 0;
}

std::vector<double> make_grid(double lo, double hi, double step) {
    std::vector<double> ts;
    if (step <= 0.0) throw ccb::DomainError("grid step must be positive");
    for (int n = 0;; ++n) {
        const double t = lo + step * n;
        if (t > hi + 1e-12) break;
        ts.push_back(t);
    }
    return ts;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical blocks, averaged crossing weights, and spectral sums"};
    app.require_subcommand(1);

    // block eval
    BlockEvalConfig be;
    CLI::App* block = app.add_subcommand("block", "block function evaluation");
    block->require_subcommand(1);
    CLI::App* beval = block->add_subcommand("eval", "evaluate one channel block");
    beval->add_option("--channel", be.channel)->check(CLI::IsMember({"u", "t"}))->required();
    beval->add_option("--sigma", be.sigma);
    beval->add_option("--t", be.t)->required();
    beval->add_option("--z,--z-re", be.z_re)->required();
    beval->add_option("--z-im", be.z_im);
    beval->add_option("--k", be.k);
    beval->add_option("--T", be.T);
    beval->add_option("--eps", be.eps);
    beval->add_option("--method", be.method)
        ->check(CLI::IsMember({"auto", "taylor", "euler", "barnes", "connection",
                               "ode_continuation"}));
    beval->add_option("--output", be.out.path);
    beval->add_option("--format", be.out.format)->check(CLI::IsMember({"csv", "json"}));

    // figures
    std::string preset;
    GridConfig fig;
    CLI::App* figures = app.add_subcommand("figures", "exact-vs-asymptotic weight grids");
    figures->add_option("--preset", preset)->check(CLI::IsMember({"iu", "it"}))->required();
    auto* fk = figures->add_option("--k", fig.k);
    auto* fT = figures->add_option("--T", fig.T);
    auto* fe = figures->add_option("--eps", fig.eps);
    figures->add_option("--output", fig.out.path);
    figures->add_option("--format", fig.out.format)->check(CLI::IsMember({"csv", "json"}));

    // weights scan
    GridConfig scan;
    double scan_lo = 2.0, scan_hi = 1.0, scan_step = 1.0; // empty by default
    CLI::App* weights = app.add_subcommand("weights", "averaged weight evaluation");
    weights->require_subcommand(1);
    CLI::App* wscan = weights->add_subcommand("scan", "scan W and Wcheck over a t-grid");
    wscan->add_option("--t-min", scan_lo);
    wscan->add_option("--t-max", scan_hi);
    wscan->add_option("--t-step", scan_step);
    wscan->add_option("--k", scan.k);
    wscan->add_option("--T", scan.T);
    wscan->add_option("--eps", scan.eps);
    wscan->add_option("--output", scan.out.path);
    wscan->add_option("--format", scan.out.format)->check(CLI::IsMember({"csv", "json"}));

    // crossing
    std::string spectrum_path;
    unsigned ck = 1;
    double cT = 75.0, ceps = 0.1;
    double gx_lo = 0.0, gx_hi = -1.0, gx_step = 1.0;
    Output cout_{"", "json"};
    CLI::App* crossing = app.add_subcommand("crossing", "averaged crossing defect");
    crossing->add_option("--spectrum", spectrum_path)->required();
    crossing->add_option("--k", ck);
    crossing->add_option("--T", cT);
    crossing->add_option("--eps", ceps);
    crossing->add_option("--t-grid-min", gx_lo);
    crossing->add_option("--t-grid-max", gx_hi);
    crossing->add_option("--t-grid-step", gx_step);
    crossing->add_option("--output", cout_.path);
    crossing->add_option("--format", cout_.format)->check(CLI::IsMember({"csv", "json"}));

    // spectrum synth
    double st_max = 100.0, sdensity = 0.1, smean = 1.0;
    std::uint64_t sseed = 1;
    std::string scoeff = "unit", sout_path;
    CLI::App* spectrum = app.add_subcommand("spectrum", "spectral table utilities");
    spectrum->require_subcommand(1);
    CLI::App* synth = spectrum->add_subcommand("synth", "synthesize a Weyl-law table");
    synth->add_option("--t-max", st_max);
    synth->add_option("--density", sdensity);
    synth->add_option("--coeff-model", scoeff)->check(CLI::IsMember({"unit", "exponential"}));
    synth->add_option("--mean", smean);
    synth->add_option("--seed", sseed);
    synth->add_option("--output", sout_path);

    try {
        app.parse(argc, argv);

        if (beval->parsed()) return run_block_eval(be);

        if (figures->parsed()) {
            if (preset == "iu") {
                if (!*fk) fig.k = 1;
                if (!*fT) fig.T = 75.0;
                if (!*fe) fig.eps = 0.1;
                fig.ts = make_grid(2.0, 115.0, 1.0);
            } else {
                if (!*fk) fig.k = 1;
                if (!*fT) fig.T = 1000.0;
                if (!*fe) fig.eps = 1.0 / 40.0;
                fig.ts = make_grid(10.0, 100.0, 0.75);
            }
            fig.echo = {{"preset", preset}, {"k", fig.k}, {"T", fig.T}, {"eps", fig.eps}};
            return run_weight_grid(fig, preset == "iu", false);
        }

        if (wscan->parsed()) {
            scan.ts = scan_hi >= scan_lo ? make_grid(scan_lo, scan_hi, scan_step)
                                         : std::vector<double>{};
            scan.echo = {{"t_min", scan_lo}, {"t_max", scan_hi}, {"t_step", scan_step},
                         {"k", scan.k},      {"T", scan.T},      {"eps", scan.eps}};
            return run_weight_grid(scan, true, true);
        }

        if (crossing->parsed()) {
            std::vector<double> grid =
                gx_hi >= gx_lo && gx_hi > 0.0 ? make_grid(gx_lo, gx_hi, gx_step)
                                              : std::vector<double>{};
            return run_crossing(spectrum_path, ck, cT, ceps, grid, cout_);
        }

        if (synth->parsed()) {
            ccb::CoeffModel model;
            model.kind = scoeff == "unit" ? ccb::CoeffModel::Kind::unit
                                          : ccb::CoeffModel::Kind::exponential;
            model.mean = smean;
            const ccb::SpectrumTable tab =
                ccb::synth_spectrum(st_max, sdensity, model, sseed);
            if (sout_path.empty()) {
                ccb::write_spectrum(std::cout, tab);
            } else {
                std::ofstream out(sout_path);
                if (!out) throw ccb::DomainError("cannot open output file: " + sout_path);
                ccb::write_spectrum(out, tab);
            }
            return 0;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ccb::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ccb::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
