#ifndef CJONES_NUMKIT_HPP
#define CJONES_NUMKIT_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <utility>
#include <vector>

#include "cjones/errors.hpp"

namespace cjones::numkit {

// Arbitrary-precision real with runtime-selectable precision.  Expression
// templates are off so values behave like ordinary arithmetic types across
// module boundaries.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Evaluation contract shared by every numeric operation: `digits` significant
// decimal digits, `quad_tol` the absolute quadrature tolerance.
struct PrecisionCfg {
    int digits = 64;
    Real quad_tol;

    explicit PrecisionCfg(int digits_ = 64);
};

// Sets the working precision (plus guard digits) for the calling thread.
// Every public operation applies this on entry; worker threads must call it
// before touching Real values.
void apply_precision(const PrecisionCfg& cfg);

Real pi_value();

// ---------------------------------------------------------------------------
// Complex arithmetic over Real.

struct CNum {
    Real re{}, im{};

    CNum() = default;
    CNum(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit CNum(Real r) : re(std::move(r)) {}
    explicit CNum(int r) : re(r) {}

    CNum operator-() const { return {-re, -im}; }
    CNum operator+(const CNum& o) const { return {re + o.re, im + o.im}; }
    CNum operator-(const CNum& o) const { return {re - o.re, im - o.im}; }
    CNum operator*(const CNum& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CNum operator/(const CNum& o) const {
        Real d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    CNum operator*(const Real& s) const { return {re * s, im * s}; }
    CNum operator/(const Real& s) const { return {re / s, im / s}; }
    CNum& operator+=(const CNum& o) { re += o.re; im += o.im; return *this; }
    CNum& operator-=(const CNum& o) { re -= o.re; im -= o.im; return *this; }
};

inline Real abs(const CNum& z) { return sqrt(z.re * z.re + z.im * z.im); }
inline Real arg(const CNum& z) { return atan2(z.im, z.re); }
inline CNum conj(const CNum& z) { return {z.re, -z.im}; }

CNum exp(const CNum& z);
CNum log(const CNum& z);   // principal branch
CNum sqrt(const CNum& z);  // principal branch

// ---------------------------------------------------------------------------
// Log-domain complex values.
//
// A value z != 0 is stored as (log|z|, arg z) with the phase deliberately NOT
// reduced mod 2pi: producers that track a value along a path keep the
// argument continuous.  Exact zero is a distinguished marker, not a very
// negative log_mag.

struct LogComplex {
    Real log_mag{}, phase{};
    bool is_zero = false;

    static LogComplex zero() {
        LogComplex z;
        z.is_zero = true;
        return z;
    }
    static LogComplex one() { return LogComplex{}; }
    static LogComplex from_cnum(const CNum& z);
    static LogComplex from_positive(const Real& x) {
        LogComplex v;
        v.log_mag = log(x);
        return v;
    }

    CNum to_cnum() const;

    LogComplex operator*(const LogComplex& o) const {
        if (is_zero || o.is_zero) return zero();
        LogComplex r;
        r.log_mag = log_mag + o.log_mag;
        r.phase = phase + o.phase;
        return r;
    }
    LogComplex operator/(const LogComplex& o) const {
        if (o.is_zero)
            throw MathError(MathError::Kind::DegeneratePoint,
                            "log-domain division by exact zero");
        if (is_zero) return zero();
        LogComplex r;
        r.log_mag = log_mag - o.log_mag;
        r.phase = phase - o.phase;
        return r;
    }
};

// log(sum exp(z_i)) pivoted on the largest magnitude; exact zeros are skipped
// and an all-zero input yields the zero marker.
LogComplex log_sum_exp(const std::vector<LogComplex>& terms);

// ---------------------------------------------------------------------------
// Special functions, quadrature, regression.

// Lobachevsky function  L(theta) = -integral_0^theta log|2 sin t| dt,
// odd and pi-periodic.  The logarithmic endpoint is handled by a series on
// [0, min(theta, 1/10)] and Gauss-Legendre quadrature on the rest.
Real lobachevsky(const Real& theta, const PrecisionCfg& cfg);

// Integral of f along the straight segment z0 -> z1 (f analytic there).
// Composite Gauss-Legendre, interval-halving until two successive estimates
// agree within cfg.quad_tol; a bounded number of halvings, then failure.
CNum integrate_segment(const std::function<CNum(const CNum&)>& f,
                       const CNum& z0, const CNum& z1, const PrecisionCfg& cfg);

// Least-squares fit y ~ a*N + b*log N + c through 3x3 normal equations.
struct FitCoeffs {
    Real a, b, c, rms;
};
FitCoeffs fit_log_affine(const std::vector<std::pair<long long, Real>>& samples,
                         bool with_inv_n = false);

// Variant with the log-coefficient pinned (used by small-sample volume fits
// where only two or three N values are available).
FitCoeffs fit_log_affine_pinned_b(const std::vector<std::pair<long long, Real>>& samples,
                                  const Real& b);

// Gauss-Legendre nodes and weights on [-1, 1] at the current working
// precision (cached per precision).  Exposed for reuse by geometry.
const std::vector<std::pair<Real, Real>>& gauss_legendre(int n);

} // namespace cjones::numkit

#endif
