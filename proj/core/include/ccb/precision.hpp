#ifndef CCB_PRECISION_HPP
#define CCB_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>

#include "ccb/errors.hpp"

namespace ccb {

// Software big-float used by the extended-precision evaluation paths.
// MPFR's exponent range (beyond 2^60) comfortably absorbs the e^{pi t}
// dynamic range of unnormalized block values.
using BigReal = boost::multiprecision::mpfr_float;

enum class PrecisionMode { machine, extended };

struct PrecisionSpec {
    PrecisionMode mode = PrecisionMode::machine;
    unsigned digits = 50; // meaningful in extended mode only

    static PrecisionSpec machine() { return {PrecisionMode::machine, 0}; }
    static PrecisionSpec extended(unsigned digits) {
        if (digits < 30)
            throw DomainError("extended precision requires digits >= 30");
        return {PrecisionMode::extended, digits};
    }
    bool is_extended() const { return mode == PrecisionMode::extended; }
};

// Scoped working precision for BigReal temporaries.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits)
        : saved_(BigReal::default_precision()) {
        BigReal::default_precision(digits);
    }
    ~PrecisionGuard() { BigReal::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

} // namespace ccb

#endif
