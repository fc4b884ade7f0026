#ifndef CCB_SPECTRUM_HPP
#define CCB_SPECTRUM_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ccb/precision.hpp"
#include "ccb/types.hpp"

namespace ccb {

// Finite spectral data set for crossing-equation sums.  Rows are sorted by
// eigenvalue lambda = s(1-s); the first row is always (s = 1, ctilde_sq = 1),
// the constant-eigenfunction term.
struct SpectrumRow {
    SpectralPoint s;
    double ctilde_sq = 0.0;
};

struct SpectrumTable {
    std::vector<SpectrumRow> rows;
    std::string source;

    void validate() const;
};

/// Parse the text format: one `sigma,t,ctilde_sq` row per line, `#` comments
/// and blank lines skipped, first data row must be `1,0,1`.  Errors carry the
/// 1-based line number.
SpectrumTable parse_spectrum(std::istream& in, const std::string& source_label);
SpectrumTable load_spectrum(const std::string& path);
void write_spectrum(std::ostream& out, const SpectrumTable& tab);

/// Truncated crossing-channel sum z^{+-2k} sum_r ctilde_sq_r Htilde_{s_r},
/// with per-term error accumulation.
BlockValue channel_sum(const SpectrumTable& tab, Complex z, Channel channel,
                       const WeightParams& params,
                       PrecisionSpec prec = PrecisionSpec::machine());

struct DefectReport {
    double lhs = 0.0;        // sum_r W(s_r) ctilde_sq_r
    double rhs = 0.0;        // sum_r Wcheck(s_r) ctilde_sq_r
    double defect = 0.0;     // lhs - rhs
    // per-row contributions (same order as the table)
    std::vector<double> contrib_lhs, contrib_rhs;
    // row indices sorted by |contribution|, largest first
    std::vector<std::size_t> top_lhs, top_rhs;
    // weight curves on the requested grid: (t, W, Wcheck)
    std::vector<std::array<double, 3>> grid;
};

/// Both sides of the averaged crossing identity for the table, with per-row
/// bookkeeping and weight curves sampled on t_grid.
DefectReport averaged_defect(const SpectrumTable& tab, const WeightParams& params,
                             PrecisionSpec prec, const std::vector<double>& t_grid);

/// Sharp-window coefficient mass: sum of ctilde_sq over |t_r - T| <= H.
double window_sum(const SpectrumTable& tab, double T, double H);

struct CoeffModel {
    enum class Kind { unit, exponential } kind = Kind::unit;
    double mean = 1.0;
};

/// Deterministic synthetic table with counting function ~ density_const t^2
/// and coefficients from the given model; r = 0 row always (1, 1).
SpectrumTable synth_spectrum(double T_max, double density_const,
                             const CoeffModel& model, std::uint64_t seed);

} // namespace ccb

#endif
