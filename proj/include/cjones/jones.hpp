#pragma once

#include "cjones/knotlang.hpp"
#include "cjones/numkit.hpp"

namespace cjones::jones {

using numkit::LogComplex;
using numkit::PrecisionCfg;
using numkit::Real;

// Evaluation point on (or near) the unit circle: q = exp(2*pi*i*r/N) with the
// fixed half-power convention q^{1/2} = exp(pi*i*r/N).  r = N/k, so r = 1 is
// the root of unity of the volume conjecture.
struct EvalPoint {
    long long N;
    Real r;

    EvalPoint(long long N_, Real r_);
};

// Quantum integer [M] = sin(M*pi*r/N) / sin(pi*r/N) in log domain.  Throws
// a degenerate-point error when q^{1/2} = +-1 collapses the denominator.
LogComplex quantum_int(long long M, const EvalPoint& p, const PrecisionCfg& cfg);

// J_N(unknot) = [N].
LogComplex jones_unknot(const EvalPoint& p, const PrecisionCfg& cfg);

// J_N(Hopf link) = [N^2].
LogComplex jones_hopf(const EvalPoint& p, const PrecisionCfg& cfg);

// Reduced invariant of the figure-eight knot via the cyclotomic sum
//   V_N = sum_{j=0}^{N-1} prod_{k=1}^{j} f_k,
//   f_k = (q^{(N-k)/2} - q^{-(N-k)/2})(q^{(N+k)/2} - q^{-(N+k)/2})
//       = 2 cos(2 pi r) - 2 cos(2 pi r k / N),
// accumulated incrementally in log domain (O(N) factor updates).  A factor
// that vanishes to working precision truncates the sum exactly.
LogComplex fig8_reduced(const EvalPoint& p, const PrecisionCfg& cfg);

// Unreduced J_N for expressions over the evaluable atoms {U, 4_1, hopf}
// (hopf standalone only).  Connected sums use multiplicativity
// J(K1 # K2) = J(K1) J(K2) / [N].
LogComplex jones_eval(const knotlang::KnotExpr& expr, const EvalPoint& p,
                      const PrecisionCfg& cfg);

// Reduced counterpart V_N = J_N / [N]; products over '#' need no division,
// so this is the form that stays finite at r = 1.
LogComplex jones_eval_reduced(const knotlang::KnotExpr& expr, const EvalPoint& p,
                              const PrecisionCfg& cfg);

// V_N(4_1) at q = exp(2*pi*i/N): real and positive; the growth rate
// (2*pi/N) log of it approaches the hyperbolic volume.
Real kashaev_fig8(long long N, const PrecisionCfg& cfg);

} // namespace cjones::jones
