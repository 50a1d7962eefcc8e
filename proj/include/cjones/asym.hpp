#pragma once

#include "cjones/numkit.hpp"

#include <string>
#include <vector>

namespace cjones::asym {

using numkit::PrecisionCfg;
using numkit::Real;

// One measurement of the expansion defect at (N, r):
//   residual = Re log(invariant) - [ (N/r) Im S(u) + (3/2) log(N/r)
//                                    + (1/2) log(T/(2 pi^2)) ]
// with u = 2 pi i (r - 1).  At r = 1 the reduced invariant V_N and the
// cusp torsion constant are used; elsewhere the unreduced J_N and the
// cone-angle torsion at alpha = 2 pi |r - 1|.
struct ResidualRow {
    long long N = 0;
    Real r;
    Real log_jones;
    Real prediction;
    Real residual;
    std::string error; // empty on success; row numerics are NaN otherwise
};

ResidualRow residual(long long N, const Real& r, const PrecisionCfg& cfg);

// Evenly spaced inclusive grid over [r_min, r_max]; per-point failures are
// recorded in the row's error field and the sweep continues.  jobs > 1 maps
// rows over a worker pool; output order is independent of scheduling.
std::vector<ResidualRow> sweep(long long N, const Real& r_min, const Real& r_max,
                               long steps, const PrecisionCfg& cfg, int jobs = 1);

enum class FitKnot { Unknot, FigureEight, Hopf };

// Least-squares decomposition of Re log into a*N + b*log N + c and the
// mapped physical estimates.
struct FitReport {
    Real a, b, c;
    Real vol_est;           // 2 pi a r
    Real delta_est;         // 2 b
    Real torsion_const_est; // 2 pi^2 exp(2c)
    Real rms;
};

FitReport fit_expansion(const std::vector<long long>& N_list, const Real& r,
                        FitKnot knot, const PrecisionCfg& cfg,
                        bool with_inv_n = false);

// Growth-rate extraction from the N-th-root-of-unity values over
// N in {100, 200, ..., N_max}: returns 2 pi times the fitted linear
// coefficient, which targets the hyperbolic volume 2.029883...
Real volume_conjecture_check(long long N_max, const PrecisionCfg& cfg);

} // namespace cjones::asym
