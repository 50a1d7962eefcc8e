#include "cjones/numkit.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace cjones::numkit {

namespace {
// Guard digits on top of the requested precision absorb the rounding of long
// product/sum chains so that results are trustworthy at `digits`.
constexpr int kGuardDigits = 8;
} // namespace

PrecisionCfg::PrecisionCfg(int digits_) : digits(digits_) {
    if (digits < 16)
        throw MathError(MathError::Kind::Domain, "precision must be at least 16 digits");
    Real::default_precision(digits + kGuardDigits);
    quad_tol = pow(Real(10), -(digits - 16));
}

void apply_precision(const PrecisionCfg& cfg) {
    Real::default_precision(cfg.digits + kGuardDigits);
}

Real pi_value() { return boost::math::constants::pi<Real>(); }

// ---------------------------------------------------------------------------
// Complex elementary functions.

CNum exp(const CNum& z) {
    Real m = boost::multiprecision::exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

CNum log(const CNum& z) {
    return {boost::multiprecision::log(abs(z)), arg(z)};
}

CNum sqrt(const CNum& z) {
    if (z.im == 0 && z.re >= 0) return CNum(boost::multiprecision::sqrt(z.re));
    CNum half_log = log(z) / Real(2);
    return exp(half_log);
}

// ---------------------------------------------------------------------------
// Log-domain values.

LogComplex LogComplex::from_cnum(const CNum& z) {
    if (z.re == 0 && z.im == 0) return zero();
    LogComplex v;
    v.log_mag = boost::multiprecision::log(abs(z));
    v.phase = arg(z);
    return v;
}

CNum LogComplex::to_cnum() const {
    if (is_zero) return CNum(0);
    Real m = boost::multiprecision::exp(log_mag);
    return {m * cos(phase), m * sin(phase)};
}

LogComplex log_sum_exp(const std::vector<LogComplex>& terms) {
    if (terms.empty())
        throw MathError(MathError::Kind::Domain, "log_sum_exp of empty term list");
    const LogComplex* pivot = nullptr;
    for (const auto& t : terms)
        if (!t.is_zero && (pivot == nullptr || t.log_mag > pivot->log_mag)) pivot = &t;
    if (pivot == nullptr) return LogComplex::zero();

    Real m = pivot->log_mag;
    CNum acc(0);
    for (const auto& t : terms) {
        if (t.is_zero) continue;
        Real scale = exp(t.log_mag - m);
        acc += CNum{scale * cos(t.phase), scale * sin(t.phase)};
    }
    if (acc.re == 0 && acc.im == 0) return LogComplex::zero();
    LogComplex r;
    r.log_mag = m + log(abs(acc));
    r.phase = arg(acc);
    return r;
}

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes.

namespace {

std::vector<std::pair<Real, Real>> compute_gl(int n) {
    // Newton iteration on P_n from the Chebyshev initial guess.
    std::vector<std::pair<Real, Real>> out;
    out.reserve(n);
    Real pi = pi_value();
    int newton_rounds = 4 + static_cast<int>(Real::default_precision() / 12);
    for (int i = 0; i < n; ++i) {
        Real x = cos(pi * (Real(i) + Real(3) / 4) / (Real(n) + Real(1) / 2));
        Real dp(0);
        for (int it = 0; it < newton_rounds; ++it) {
            Real p0(1), p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            x -= p1 / dp;
        }
        Real w = 2 / ((1 - x * x) * dp * dp);
        out.emplace_back(x, w);
    }
    return out;
}

std::mutex gl_mutex;
std::map<std::pair<int, unsigned>, std::vector<std::pair<Real, Real>>> gl_cache;

} // namespace

const std::vector<std::pair<Real, Real>>& gauss_legendre(int n) {
    std::scoped_lock lock(gl_mutex);
    auto key = std::make_pair(n, Real::default_precision());
    auto it = gl_cache.find(key);
    if (it == gl_cache.end()) it = gl_cache.emplace(key, compute_gl(n)).first;
    return it->second;
}

// ---------------------------------------------------------------------------
// Quadrature.

namespace {

constexpr int kGlOrder = 32;
constexpr int kMaxHalvings = 12;

CNum gl_pass(const std::function<CNum(const CNum&)>& f, const CNum& z0,
             const CNum& dz, int segments) {
    const auto& nodes = gauss_legendre(kGlOrder);
    CNum total(0);
    Real seg_count(segments);
    for (int s = 0; s < segments; ++s) {
        Real t0 = Real(s) / seg_count, t1 = Real(s + 1) / seg_count;
        Real mid = (t0 + t1) / 2, half = (t1 - t0) / 2;
        CNum acc(0);
        for (const auto& [x, w] : nodes) {
            Real t = mid + half * x;
            acc += f(z0 + dz * t) * w;
        }
        total += acc * half;
    }
    return total;
}

} // namespace

CNum integrate_segment(const std::function<CNum(const CNum&)>& f,
                       const CNum& z0, const CNum& z1, const PrecisionCfg& cfg) {
    CNum dz = z1 - z0;
    if (dz.re == 0 && dz.im == 0) return CNum(0);
    CNum prev = gl_pass(f, z0, dz, 1) * dz;
    for (int segments = 2; segments <= (1 << kMaxHalvings); segments *= 2) {
        CNum cur = gl_pass(f, z0, dz, segments) * dz;
        if (abs(cur - prev) <= cfg.quad_tol) return cur;
        prev = cur;
    }
    throw MathError(MathError::Kind::QuadratureFailure,
                    "segment integral did not converge within the halving budget");
}

// ---------------------------------------------------------------------------
// Lobachevsky function.

namespace {

// Exact rational coefficients c_n of the endpoint series
//   -int_0^h log(2 sin t) dt = h - h log(2h) + sum_{n>=1} c_n h^{2n+1},
//   c_n = |B_{2n}| 2^{2n-1} / (n (2n)! (2n+1)),
// from  log(sin t / t) = -sum_{n>=1} 2^{2n-1}|B_{2n}| / (n (2n)!) t^{2n}.
std::vector<BigRat> series_coeffs(std::size_t count) {
    static std::mutex mtx;
    static std::vector<BigRat> bernoulli{BigRat(1)}; // B_0, B_1, B_2, ...
    static std::vector<BigRat> coeffs;

    std::scoped_lock lock(mtx);
    while (coeffs.size() < count) {
        std::size_t n = coeffs.size() + 1; // next c_n uses B_{2n}
        while (bernoulli.size() <= 2 * n) {
            std::size_t m = bernoulli.size();
            // sum_{j=0}^{m} C(m+1, j) B_j = 0
            BigRat acc(0);
            BigInt binom(1); // C(m+1, 0)
            for (std::size_t j = 0; j < m; ++j) {
                acc += BigRat(binom) * bernoulli[j];
                binom = binom * BigInt(m + 1 - j) / BigInt(j + 1);
            }
            bernoulli.push_back(-acc / BigRat(binom)); // binom == C(m+1, m) = m+1
        }
        BigRat b2n = bernoulli[2 * n];
        if (b2n < 0) b2n = -b2n;
        BigInt fact(1);
        for (std::size_t k = 2; k <= 2 * n; ++k) fact *= k;
        BigRat c = b2n * BigRat(BigInt(1) << (2 * n - 1)) /
                   (BigRat(BigInt(n) * fact) * BigRat(2 * n + 1));
        coeffs.push_back(c);
    }
    return {coeffs.begin(), coeffs.begin() + count};
}

// Direct Real{BigRat} construction misrounds some values (e.g. 1/340200
// converts with a relative error near 2e-5), so split into two exact
// integer conversions and one correctly rounded division.
Real rat_to_real(const BigRat& q) {
    return Real(numerator(q)) / Real(denominator(q));
}

Real head_series(const Real& h, const PrecisionCfg& cfg) {
    if (h == 0) return Real(0);
    Real value = h - h * log(2 * h);
    Real cutoff = pow(Real(10), -(cfg.digits + kGuardDigits + 4));
    Real h2 = h * h, hp = h * h2;
    std::size_t have = 16;
    auto cs = series_coeffs(have);
    for (std::size_t n = 1;; ++n) {
        if (n > have) {
            have *= 2;
            cs = series_coeffs(have);
        }
        Real term = rat_to_real(cs[n - 1]) * hp;
        value += term;
        if (abs(term) < cutoff) break;
        hp *= h2;
    }
    return value;
}

} // namespace

Real lobachevsky(const Real& theta, const PrecisionCfg& cfg) {
    apply_precision(cfg);
    if (!isfinite(theta))
        throw MathError(MathError::Kind::Domain, "lobachevsky of non-finite argument");
    Real pi = pi_value();
    // Reduce by pi-periodicity to x in [-pi/2, pi/2], then use oddness.
    Real x = theta - pi * floor(theta / pi + Real(1) / 2);
    int sign = 1;
    if (x < 0) {
        sign = -1;
        x = -x;
    }
    if (x == 0) return Real(0);

    Real split = Real(1) / 10;
    if (x < split) split = x;
    Real value = head_series(split, cfg);
    if (x > split) {
        auto integrand = [](const CNum& z) {
            return CNum(-log(2 * sin(z.re)));
        };
        value += integrate_segment(integrand, CNum(split), CNum(x), cfg).re;
    }
    return sign * value;
}

// ---------------------------------------------------------------------------
// Regression.

namespace {

// Solves the k x k system in place; throws on a vanishing pivot.
std::vector<Real> solve_dense(std::vector<std::vector<Real>> a, std::vector<Real> rhs) {
    const std::size_t k = rhs.size();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
        std::swap(a[col], a[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        Real scale(0);
        for (std::size_t c = 0; c < k; ++c) {
            Real mag = abs(a[col][c]);
            if (mag > scale) scale = mag;
        }
        int prec = static_cast<int>(Real::default_precision());
        if (scale == 0 || abs(a[col][col]) < scale * pow(Real(10), 4 - prec))
            throw MathError(MathError::Kind::SingularFit, "rank-deficient least-squares design");
        for (std::size_t r = col + 1; r < k; ++r) {
            Real f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < k; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Real> out(k);
    for (std::size_t ri = k; ri-- > 0;) {
        Real v = rhs[ri];
        for (std::size_t c = ri + 1; c < k; ++c) v -= a[ri][c] * out[c];
        out[ri] = v / a[ri][ri];
    }
    return out;
}

Real fit_rms(const std::vector<std::pair<long long, Real>>& samples,
             const Real& a, const Real& b, const Real& c) {
    Real ss(0);
    for (const auto& [n, y] : samples) {
        Real resid = y - (a * n + b * log(Real(n)) + c);
        ss += resid * resid;
    }
    return sqrt(ss / samples.size());
}

} // namespace

FitCoeffs fit_log_affine(const std::vector<std::pair<long long, Real>>& samples,
                         bool with_inv_n) {
    const std::size_t k = with_inv_n ? 4 : 3;
    if (samples.size() < 4)
        throw MathError(MathError::Kind::SingularFit,
                        "log-affine fit needs at least 4 samples");
    std::set<long long> distinct;
    for (const auto& [n, y] : samples) distinct.insert(n);
    if (distinct.size() < k)
        throw MathError(MathError::Kind::SingularFit,
                        "log-affine fit needs as many distinct N as basis terms");

    std::vector<std::vector<Real>> ata(k, std::vector<Real>(k, Real(0)));
    std::vector<Real> aty(k, Real(0));
    for (const auto& [n, y] : samples) {
        std::vector<Real> basis{Real(n), log(Real(n)), Real(1)};
        if (with_inv_n) basis.push_back(Real(1) / n);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) ata[i][j] += basis[i] * basis[j];
            aty[i] += basis[i] * y;
        }
    }
    auto sol = solve_dense(std::move(ata), std::move(aty));
    Real rms(0);
    {
        Real ss(0);
        for (const auto& [n, y] : samples) {
            Real model = sol[0] * n + sol[1] * log(Real(n)) + sol[2];
            if (with_inv_n) model += sol[3] / n;
            Real resid = y - model;
            ss += resid * resid;
        }
        rms = sqrt(ss / samples.size());
    }
    return {sol[0], sol[1], sol[2], rms};
}

FitCoeffs fit_log_affine_pinned_b(const std::vector<std::pair<long long, Real>>& samples,
                                  const Real& b) {
    if (samples.size() < 2)
        throw MathError(MathError::Kind::SingularFit,
                        "pinned fit needs at least 2 samples");
    std::vector<std::vector<Real>> ata(2, std::vector<Real>(2, Real(0)));
    std::vector<Real> aty(2, Real(0));
    for (const auto& [n, y] : samples) {
        Real yy = y - b * log(Real(n));
        Real basis[2] = {Real(n), Real(1)};
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) ata[i][j] += basis[i] * basis[j];
            aty[i] += basis[i] * yy;
        }
    }
    auto sol = solve_dense(std::move(ata), std::move(aty));
    return {sol[0], b, sol[1], fit_rms(samples, sol[0], b, sol[1])};
}

} // namespace cjones::numkit
