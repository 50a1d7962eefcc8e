#include "cjones/jones.hpp"

namespace cjones::jones {

using numkit::CNum;

namespace {

// Values with magnitude below this are exact zeros of the trigonometric
// expressions at the working precision (sin of a rational multiple of pi).
// Tying the threshold to the requested digits keeps the truncation behaviour
// of fig8_reduced independent of the guard-digit count.
Real zero_threshold(const PrecisionCfg& cfg) {
    return pow(Real(10), -(cfg.digits - 8));
}

// sin(pi * t) with the argument reduced mod 2 first, so that large t (e.g.
// M = N^2 in the Hopf evaluation) does not lose absolute accuracy.
Real sin_pi(const Real& t) {
    Real reduced = fmod(t, Real(2));
    return sin(numkit::pi_value() * reduced);
}

LogComplex from_real(const Real& x, const Real& threshold) {
    if (abs(x) < threshold) return LogComplex::zero();
    LogComplex v;
    v.log_mag = log(abs(x));
    v.phase = x > 0 ? Real(0) : numkit::pi_value();
    return v;
}

} // namespace

EvalPoint::EvalPoint(long long N_, Real r_) : N(N_), r(std::move(r_)) {
    if (N < 1) throw MathError(MathError::Kind::Domain, "color N must be at least 1");
    if (!(r > 0)) throw MathError(MathError::Kind::Domain, "parameter r must be positive");
}

LogComplex quantum_int(long long M, const EvalPoint& p, const PrecisionCfg& cfg) {
    numkit::apply_precision(cfg);
    Real thr = zero_threshold(cfg);
    Real denom = sin_pi(p.r / p.N);
    if (abs(denom) < thr)
        throw MathError(MathError::Kind::DegeneratePoint,
                        "quantum integer undefined: q^{1/2} = +-1 at this point");
    Real numer = sin_pi(Real(M) * p.r / p.N);
    if (abs(numer) < thr) return LogComplex::zero();
    return from_real(numer, thr) / from_real(denom, thr);
}

LogComplex jones_unknot(const EvalPoint& p, const PrecisionCfg& cfg) {
    return quantum_int(p.N, p, cfg);
}

LogComplex jones_hopf(const EvalPoint& p, const PrecisionCfg& cfg) {
    return quantum_int(p.N * p.N, p, cfg);
}

LogComplex fig8_reduced(const EvalPoint& p, const PrecisionCfg& cfg) {
    numkit::apply_precision(cfg);
    Real thr = zero_threshold(cfg);
    Real two_pi_r = 2 * numkit::pi_value() * p.r;
    Real base = 2 * cos(two_pi_r);

    std::vector<LogComplex> terms;
    terms.reserve(p.N);
    terms.push_back(LogComplex::one()); // j = 0: empty product
    LogComplex partial = LogComplex::one();
    for (long long k = 1; k < p.N; ++k) {
        Real factor = base - 2 * cos(two_pi_r * k / p.N);
        // A vanishing factor kills this and every later partial product.
        if (abs(factor) < thr) break;
        partial = partial * from_real(factor, thr);
        terms.push_back(partial);
    }
    return numkit::log_sum_exp(terms);
}

namespace {

LogComplex reduced_hopf(const EvalPoint& p, const PrecisionCfg& cfg) {
    // [N^2]/[N] = sin(N pi r) / sin(pi r); the denominator vanishes at
    // integer r, where the reduced Hopf value has no finite evaluation here.
    Real thr = zero_threshold(cfg);
    Real denom = sin_pi(p.r);
    if (abs(denom) < thr)
        throw MathError(MathError::Kind::DegeneratePoint,
                        "reduced Hopf value undefined at integer r");
    Real numer = sin_pi(Real(p.N) * p.r);
    if (abs(numer) < thr) return LogComplex::zero();
    return from_real(numer, thr) / from_real(denom, thr);
}

[[noreturn]] void unsupported(const knotlang::KnotExpr& e) {
    throw MathError(MathError::Kind::Unsupported,
                    "no evaluation available for '" + knotlang::render(e) + "'");
}

} // namespace

LogComplex jones_eval_reduced(const knotlang::KnotExpr& expr, const EvalPoint& p,
                              const PrecisionCfg& cfg) {
    numkit::apply_precision(cfg);
    switch (expr.kind) {
    case knotlang::KnotExpr::Kind::Atom:
        switch (expr.atom) {
        case knotlang::Atom::Unknot: return LogComplex::one();
        case knotlang::Atom::FigureEight: return fig8_reduced(p, cfg);
        case knotlang::Atom::Hopf: return reduced_hopf(p, cfg);
        default: unsupported(expr);
        }
    case knotlang::KnotExpr::Kind::Sum: {
        LogComplex acc = LogComplex::one();
        for (const auto& part : expr.parts) {
            if (knotlang::is_link_atom(*part))
                throw MathError(MathError::Kind::Structural,
                                "links cannot appear in a connected sum");
            acc = acc * jones_eval_reduced(*part, p, cfg);
        }
        return acc;
    }
    default: unsupported(expr);
    }
}

LogComplex jones_eval(const knotlang::KnotExpr& expr, const EvalPoint& p,
                      const PrecisionCfg& cfg) {
    numkit::apply_precision(cfg);
    switch (expr.kind) {
    case knotlang::KnotExpr::Kind::Atom:
        switch (expr.atom) {
        case knotlang::Atom::Unknot: return jones_unknot(p, cfg);
        case knotlang::Atom::FigureEight:
            return jones_unknot(p, cfg) * fig8_reduced(p, cfg);
        case knotlang::Atom::Hopf: return jones_hopf(p, cfg);
        default: unsupported(expr);
        }
    case knotlang::KnotExpr::Kind::Sum: {
        LogComplex un = jones_unknot(p, cfg);
        if (un.is_zero)
            throw MathError(MathError::Kind::DegeneratePoint,
                            "connected sum divides by [N] = 0 here; "
                            "evaluate the reduced invariant instead");
        LogComplex acc = un;
        for (const auto& part : expr.parts) {
            if (knotlang::is_link_atom(*part))
                throw MathError(MathError::Kind::Structural,
                                "links cannot appear in a connected sum");
            acc = acc * jones_eval_reduced(*part, p, cfg);
        }
        return acc;
    }
    default: unsupported(expr);
    }
}

Real kashaev_fig8(long long N, const PrecisionCfg& cfg) {
    if (N < 2) throw MathError(MathError::Kind::Domain, "Kashaev invariant needs N >= 2");
    LogComplex v = fig8_reduced(EvalPoint(N, Real(1)), cfg);
    CNum z = v.to_cnum();
    return z.re;
}

} // namespace cjones::jones
