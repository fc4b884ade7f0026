#include "ccb/scalar.hpp"

#include <cmath>
#include <vector>

#include <boost/math/constants/constants.hpp>

namespace ccb {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;

// B_{2n} / (2n (2n-1)), n = 1..10.
constexpr double kStirlingCoeff[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

bool is_nonpositive_integer(Complex w) {
    return w.imag() == 0.0 && w.real() <= 0.0 && w.real() == std::floor(w.real());
}

// Tangent numbers T_1..T_n by the Knuth-Buckholtz recurrence (exact
// positive-integer arithmetic, no cancellation).
std::vector<BigReal> tangent_numbers(unsigned n) {
    std::vector<BigReal> t(n + 1);
    if (n >= 1) t[1] = 1;
    for (unsigned k = 2; k <= n; ++k) t[k] = BigReal(k - 1) * t[k - 1];
    for (unsigned k = 2; k <= n; ++k)
        for (unsigned j = k; j <= n; ++j)
            t[j] = BigReal(j - k) * t[j - 1] + BigReal(j - k + 2) * t[j];
    return t;
}

// B_{2n} / (2n (2n-1)) for n = 1..count, at the current working precision.
std::vector<BigReal> stirling_coeff_big(unsigned count) {
    std::vector<BigReal> t = tangent_numbers(count);
    std::vector<BigReal> c(count + 1);
    BigReal four_n = 1;
    for (unsigned n = 1; n <= count; ++n) {
        four_n *= 4; // 4^n
        BigReal b2n_abs = BigReal(2 * n) * t[n] / (four_n * (four_n - 1));
        c[n] = b2n_abs / BigReal(2 * n * (2 * n - 1));
        if (n % 2 == 0) c[n] = -c[n];
    }
    return c;
}

} // namespace

bool on_log_cut(Complex z) { return z.imag() == 0.0 && z.real() <= 0.0; }

Complex principal_log(Complex z) {
    if (on_log_cut(z)) throw DomainError("principal_log: argument on the cut (-inf, 0]");
    return std::log(z);
}

Complex principal_pow(Complex z, Complex s) {
    if (z == Complex(0.0)) {
        if (s.real() > 0.0) return {0.0, 0.0};
        throw DomainError("principal_pow: 0^s with Re s <= 0");
    }
    if (on_log_cut(z)) throw DomainError("principal_pow: base on the cut (-inf, 0]");
    if (s == Complex(0.0)) return {1.0, 0.0};
    return std::exp(s * std::log(z));
}

Complex log_gamma(Complex w) {
    if (is_nonpositive_integer(w))
        throw PoleError("log_gamma: pole at nonpositive integer");
    // Shift until Re w >= 12, where the 10-term series is below 1e-16.
    Complex acc = 0.0;
    while (w.real() < 12.0) {
        acc += std::log(w);
        w += 1.0;
    }
    const Complex lw = std::log(w);
    Complex res = (w - 0.5) * lw - w + kHalfLog2Pi;
    const Complex inv = 1.0 / w;
    const Complex inv2 = inv * inv;
    Complex p = inv;
    for (double c : kStirlingCoeff) {
        res += c * p;
        p *= inv2;
    }
    return res - acc;
}

BigComplex log_gamma_ext(const BigComplex& w_in, unsigned digits) {
    if (digits < 30) throw DomainError("log_gamma_ext: digits >= 30 required");
    if (w_in.im == 0 && w_in.re <= 0 && w_in.re == floor(w_in.re))
        throw PoleError("log_gamma_ext: pole at nonpositive integer");
    PrecisionGuard guard(digits + 15);

    const double shift_target = std::max(12.0, 0.4 * digits + 8.0);
    BigComplex w{BigReal(w_in.re), BigReal(w_in.im)};
    BigComplex acc{BigReal(0), BigReal(0)};
    while (w.re < shift_target) {
        acc += log(w);
        w.re += 1;
    }

    // Enough series terms that the first omitted one is below 10^-(digits+5)
    // at |w| >= shift_target.  Term n decays like c_n / |w|^{2n-1} with
    // c_n ~ 2 (2n-2)! / (2 pi)^{2n}; solve crudely and cap at the divergence
    // point n ~ pi |w|.
    unsigned nterms = 2;
    {
        double lw = std::log(shift_target);
        double target = -(static_cast<double>(digits) + 5.0) * std::log(10.0);
        while (nterms < static_cast<unsigned>(kPi * shift_target)) {
            double n = nterms;
            double logterm = std::lgamma(2 * n - 1) - 2 * n * std::log(2 * kPi) +
                             std::log(2.0) - (2 * n - 1) * lw;
            if (logterm < target) break;
            ++nterms;
        }
    }
    std::vector<BigReal> coeff = stirling_coeff_big(nterms);

    BigComplex lw = log(w);
    BigComplex res = (w - BigComplex(0.5)) * lw - w;
    res.re += log(BigReal(2) * boost::math::constants::pi<BigReal>()) / 2;
    BigComplex inv = BigComplex(1.0) / w;
    BigComplex inv2 = inv * inv;
    BigComplex p = inv;
    for (unsigned n = 1; n <= nterms; ++n) {
        res += coeff[n] * p;
        p = p * inv2;
    }
    return res - acc;
}

namespace {

// Power/log series for K_nu at integer nu, evaluated in BigComplex with the
// working precision set by the caller (cancellation between the log term and
// the power series costs ~0.9|w| digits).
BigComplex bessel_k_series_big(unsigned nu, const BigComplex& w) {
    const BigComplex half_w = BigComplex(0.5) * w;
    const BigComplex q = half_w * half_w; // w^2/4
    const BigComplex lhw = log(half_w);

    // Finite sum (nu >= 1): (1/2)(w/2)^{-nu} sum_{m<nu} ((nu-m-1)!/m!) (-q)^m
    BigComplex finite{BigReal(0), BigReal(0)};
    if (nu >= 1) {
        BigReal fact = 1; // (nu-1)!
        for (unsigned j = 2; j < nu; ++j) fact *= j;
        BigComplex qm{BigReal(1), BigReal(0)};
        BigReal mfact = 1;
        for (unsigned m = 0; m < nu; ++m) {
            BigReal c = fact / mfact;
            if (m % 2 == 1) c = -c;
            finite += c * qm;
            qm = qm * q;
            mfact *= (m + 1);
            if (m + 1 < nu) fact /= (nu - m - 1);
        }
        BigComplex pref = exp(BigReal(-static_cast<int>(nu)) * lhw);
        finite = BigReal(0.5) * (pref * finite);
    }

    // I_nu(w) and the psi-weighted companion series, summed together.
    const BigReal euler = boost::math::constants::euler<BigReal>();
    BigReal psi_m = -euler;            // psi(1)
    BigReal psi_nm = -euler;           // psi(nu+1)
    BigReal hfact = 1;
    for (unsigned j = 1; j <= nu; ++j) {
        psi_nm += BigReal(1) / j;
        hfact *= j;
    }
    BigReal mfact = 1;        // m!
    BigReal nmfact = hfact;   // (nu+m)!
    BigComplex qm{BigReal(1), BigReal(0)};
    BigComplex i_sum{BigReal(0), BigReal(0)};
    BigComplex psi_sum{BigReal(0), BigReal(0)};
    const BigReal tol = pow(BigReal(10), -static_cast<int>(BigReal::default_precision() + 5));
    for (unsigned m = 0;; ++m) {
        BigReal denom = mfact * nmfact;
        BigComplex term = qm / denom;
        i_sum += term;
        psi_sum += (psi_m + psi_nm) * term;
        BigReal tsz = abs(term);
        if (m > 2 && tsz < tol * (abs(i_sum) + 1)) break;
        if (m > 100000) throw ConvergenceError("bessel_k: series did not converge");
        qm = qm * q;
        mfact *= (m + 1);
        nmfact *= (nu + m + 1);
        psi_m += BigReal(1) / (m + 1);
        psi_nm += BigReal(1) / (nu + m + 1);
    }
    BigComplex pow_nu = exp(BigReal(static_cast<int>(nu)) * lhw); // (w/2)^nu
    BigComplex i_nu = pow_nu * i_sum;
    BigComplex log_term = lhw * i_nu;
    BigComplex psi_term = BigReal(0.5) * (pow_nu * psi_sum);
    double sign = (nu % 2 == 0) ? 1.0 : -1.0;
    return finite + BigReal(-sign) * log_term + BigReal(sign) * psi_term;
}

Complex bessel_k_asymptotic(unsigned nu, Complex w) {
    // K_nu(w) ~ sqrt(pi/2w) e^{-w} sum_k a_k(nu) / w^k
    const double fournu2 = 4.0 * nu * nu;
    Complex sum = 1.0, term = 1.0;
    double last = 1.0;
    for (unsigned k = 1; k < 60; ++k) {
        double num = fournu2 - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        term *= num / (8.0 * k) / w;
        if (std::abs(term) > last) break; // divergence onset
        sum += term;
        last = std::abs(term);
        if (last < 1e-18 * std::abs(sum)) break;
    }
    return std::sqrt(kPi / (2.0 * w)) * std::exp(-w) * sum;
}

} // namespace

Complex bessel_k(unsigned nu, Complex w, PrecisionSpec prec) {
    if (on_log_cut(w)) throw DomainError("bessel_k: argument on the cut (-inf, 0]");
    const double aw = std::abs(w);
    if (prec.is_extended()) {
        unsigned guard = prec.digits + static_cast<unsigned>(std::ceil(0.9 * aw)) + 10;
        PrecisionGuard g(guard);
        return bessel_k_series_big(nu, BigComplex(w)).to_double();
    }
    // The pure-double series loses ~e^{2|w|} to cancellation and the
    // asymptotic floor is ~e^{-2|w|}; a guarded big-float series up to
    // |w| = 30 keeps both branches below 1e-12 relative at the crossover.
    if (aw < 30.0) {
        unsigned guard = 25 + static_cast<unsigned>(std::ceil(0.9 * aw));
        PrecisionGuard g(guard);
        return bessel_k_series_big(nu, BigComplex(w)).to_double();
    }
    return bessel_k_asymptotic(nu, w);
}

double gaussian_transform(double xi) {
    return std::sqrt(kPi) * std::exp(-0.25 * xi * xi);
}

double gaussian_transform_deriv(unsigned ell, double xi) {
    if (ell > 6) throw DomainError("gaussian_transform_deriv: ell <= 6");
    // g^(ell)(xi) = sqrt(pi) (-1/2)^ell H_ell(xi/2) exp(-xi^2/4)
    const double x = 0.5 * xi;
    double h;
    switch (ell) {
        case 0: h = 1.0; break;
        case 1: h = 2.0 * x; break;
        case 2: h = 4.0 * x * x - 2.0; break;
        case 3: h = x * (8.0 * x * x - 12.0); break;
        case 4: h = (16.0 * x * x - 48.0) * x * x + 12.0; break;
        case 5: h = x * ((32.0 * x * x - 160.0) * x * x + 120.0); break;
        default: h = ((64.0 * x * x - 480.0) * x * x + 720.0) * x * x - 120.0; break;
    }
    double sign = (ell % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(0.5, ell) * h * gaussian_transform(xi);
}

} // namespace ccb
