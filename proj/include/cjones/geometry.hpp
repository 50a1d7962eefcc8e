#pragma once

#include "cjones/numkit.hpp"

namespace cjones::geometry {

using numkit::CNum;
using numkit::PrecisionCfg;
using numkit::Real;

// A point on the geometric branch of the figure-eight A-polynomial curve:
// m = exp(u/2), l the tracked root with l(0) = -1, and v the continuous
// longitude parameter with l = -exp(-v/2), v(0) = 0.
struct HolonomyPoint {
    CNum u;
    CNum v;
    CNum m;
    CNum l;
};

struct ActionValue {
    CNum u;
    CNum s_prime;
    CNum s;
    Real vol;
    Real cs;
};

// A(l, m) = -m^4 + l (1 - m^2 - 2 m^4 - m^6 + m^8) - l^2 m^4.
CNum a_poly_fig8(const CNum& l, const CNum& m);

// Hyperbolic volume of the figure-eight complement, 6 * Lobachevsky(pi/3).
Real fig8_volume(const PrecisionCfg& cfg);

// Tracks the geometric branch from u = 0 to u along the straight segment,
// solving the quadratic in l at each step and matching the nearest root.
// Throws a branch-degeneration error if the two roots collide on the way,
// and an out-of-domain error outside the search box |Re u| <= 1.2,
// |Im u| <= 2.2.
HolonomyPoint holonomy_branch(const CNum& u, const PrecisionCfg& cfg);

// Longitude parameter of the tracked branch.
CNum v_of_u(const CNum& u, const PrecisionCfg& cfg);

// S'(u) = i Vol/(2 pi) + (1/4 pi) * integral of (v(z) + 2 pi i) along 0 -> u.
CNum action_Sprime(const CNum& u, const PrecisionCfg& cfg);

// Same integral taken along the two-segment path 0 -> waypoint -> u;
// agreement with action_Sprime witnesses path independence.
CNum action_Sprime_via(const CNum& waypoint, const CNum& u, const PrecisionCfg& cfg);

// S = S' + (1/pi)(u~ Re(v~) - pi i v~) with u~ = -v/2, v~ = u/2.
CNum action_S(const CNum& u, const PrecisionCfg& cfg);

// Vol = 2 pi Im S' - pi Re u - (1/2) Re u Im v  (= 2 pi Im S).
Real volume(const CNum& u, const PrecisionCfg& cfg);

// CS = -Re(S)/pi.
Real chern_simons(const CNum& u, const PrecisionCfg& cfg);

// Max over the two coordinate directions of the central-difference defect in
// d Vol = -(1/2)(Re(u) d Im(v) - Re(v) d Im(u)).
Real schlafli_residual(const CNum& u, const Real& h, const PrecisionCfg& cfg);

// Twisted torsion on the cone-angle axis, 1/sqrt((3/2 - cos a)(1/2 + cos a))
// for 0 <= alpha < 2 pi / 3; the cusp (alpha = 0, trivial deformation) case
// carries an extra pi^2: torsion_fig8_zero() = 2 pi^2 / sqrt(3).
Real torsion_fig8(const Real& alpha);
Real torsion_fig8_zero();

} // namespace cjones::geometry
