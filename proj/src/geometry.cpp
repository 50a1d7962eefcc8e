#include "cjones/geometry.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace cjones::geometry {

using numkit::LogComplex;

CNum a_poly_fig8(const CNum& l, const CNum& m) {
    CNum m2 = m * m;
    CNum m4 = m2 * m2;
    CNum m6 = m4 * m2;
    CNum m8 = m4 * m4;
    CNum p = CNum(1) - m2 - m4 * Real(2) - m6 + m8;
    return -m4 + l * p - (l * l) * m4;
}

Real fig8_volume(const PrecisionCfg& cfg) {
    return 6 * numkit::lobachevsky(numkit::pi_value() / 3, cfg);
}

// ---------------------------------------------------------------------------
// Geometric-branch continuation.

namespace {

constexpr double kSearchBoxRe = 1.2;
constexpr double kSearchBoxIm = 2.2;

void check_box(const CNum& u) {
    if (abs(u.re) > Real(kSearchBoxRe) || abs(u.im) > Real(kSearchBoxIm))
        throw MathError(MathError::Kind::OutOfDomain,
                        "u outside the tracked branch search box");
}

std::string point_str(const CNum& z) {
    std::ostringstream out;
    out << "(" << static_cast<double>(z.re) << ", " << static_cast<double>(z.im) << "i)";
    return out.str();
}

// Walks the geometric branch of the l-quadratic
//   l^2 - (P(m)/m^4) l + 1 = 0,  m = exp(u/2),
// from (u, l, v) = (0, -1, 0).  Each hop solves the quadratic at the target
// and matches the root nearest the current l; hops are split until the jump
// |delta l| is small, and failure to separate the two roots is reported as a
// branch degeneration.
class BranchTracker {
public:
    BranchTracker() : u_(0), l_(-1), v_(0) {}

    const CNum& u() const { return u_; }
    const CNum& l() const { return l_; }
    const CNum& v() const { return v_; }

    void advance(const CNum& target) {
        std::vector<CNum> pending{target};
        long budget = 200000;
        while (!pending.empty()) {
            const CNum z = pending.back();
            if (try_hop(z)) {
                pending.pop_back();
                continue;
            }
            if (pending.size() > 72 || --budget <= 0)
                throw MathError(MathError::Kind::BranchDegeneration,
                                "branch roots collide near u = " + point_str(z));
            pending.push_back((u_ + z) / Real(2));
        }
    }

private:
    bool try_hop(const CNum& z) {
        CNum step = z - u_;
        if (step.re == 0 && step.im == 0) return true;

        CNum m2 = numkit::exp(z);          // m^2 = exp(u)
        CNum m4 = m2 * m2;
        CNum p = CNum(1) - m2 - m4 * Real(2) - m4 * m2 + m4 * m4;
        CNum disc = p * p - m4 * m4 * Real(4);
        CNum s = numkit::sqrt(disc);
        // The two roots multiply to 1; take the better-conditioned branch of
        // the quadratic formula and invert it for the other root.
        CNum big_num = abs(p + s) >= abs(p - s) ? p + s : p - s;
        CNum r_big = big_num / (m4 * Real(2));
        CNum r_other = CNum(1) / r_big;
        if (abs(r_big - r_other) < Real(1) / 1000000)
            throw MathError(MathError::Kind::BranchDegeneration,
                            "branch roots collide near u = " + point_str(z));

        // Reference point for nearest-root matching; the initial double root
        // l(0) = -1 opens linearly as l = -1 + sqrt(3) i u.
        bool first = u_.re == 0 && u_.im == 0;
        Real hop_limit = Real(1) / 10;
        CNum ref = l_;
        if (first) {
            if (abs(step) > Real(1) / 20) return false;
            ref = CNum(-1) + CNum(0, sqrt(Real(3))) * z;
            hop_limit = Real(1) / 20;
        }
        Real d_big = abs(r_big - ref), d_other = abs(r_other - ref);
        CNum near = d_big <= d_other ? r_big : r_other;
        Real d_min = std::min(d_big, d_other);
        Real d_max = std::max(d_big, d_other);
        if (d_min >= hop_limit) return false;
        if (d_max < 2 * d_min) return false; // ambiguous match: refine

        v_ = v_ - numkit::log(near / l_) * Real(2);
        l_ = near;
        u_ = z;
        return true;
    }

    CNum u_, l_, v_;
};

} // namespace

HolonomyPoint holonomy_branch(const CNum& u, const PrecisionCfg& cfg) {
    numkit::apply_precision(cfg);
    check_box(u);
    BranchTracker t;
    t.advance(u);
    return {u, t.v(), numkit::exp(u / Real(2)), t.l()};
}

CNum v_of_u(const CNum& u, const PrecisionCfg& cfg) {
    return holonomy_branch(u, cfg).v;
}

// ---------------------------------------------------------------------------
// Actions.

namespace {

// Composite Gauss-Legendre integration of v(z) + 2 pi i along the straight
// segment a -> b, with the branch walked once per refinement pass in node
// order (prefix gives the continuation path from 0 to a).
CNum integrate_v(const std::vector<CNum>& prefix, const CNum& a, const CNum& b,
                 const PrecisionCfg& cfg) {
    CNum dz = b - a;
    if (dz.re == 0 && dz.im == 0) return CNum(0);
    CNum two_pi_i(0, 2 * numkit::pi_value());

    auto pass = [&](int segments) {
        const auto& nodes = numkit::gauss_legendre(32);
        std::vector<std::pair<Real, Real>> pts; // (t, scaled weight)
        pts.reserve(nodes.size() * segments);
        for (int s = 0; s < segments; ++s) {
            Real mid = (Real(2 * s + 1)) / (2 * segments);
            Real half = Real(1) / (2 * segments);
            for (const auto& [x, w] : nodes) pts.emplace_back(mid + half * x, w * half);
        }
        std::sort(pts.begin(), pts.end(),
                  [](const auto& p1, const auto& p2) { return p1.first < p2.first; });
        BranchTracker t;
        for (const auto& wp : prefix) t.advance(wp);
        CNum acc(0);
        for (const auto& [tt, w] : pts) {
            t.advance(a + dz * tt);
            acc += (t.v() + two_pi_i) * w;
        }
        return acc * dz;
    };

    CNum prev = pass(1);
    for (int segments = 2; segments <= 4096; segments *= 2) {
        CNum cur = pass(segments);
        if (abs(cur - prev) <= cfg.quad_tol) return cur;
        prev = cur;
    }
    throw MathError(MathError::Kind::QuadratureFailure,
                    "action integral did not converge within the refinement budget");
}

CNum sprime_base(const PrecisionCfg& cfg) {
    return CNum(0, fig8_volume(cfg) / (2 * numkit::pi_value()));
}

} // namespace

CNum action_Sprime(const CNum& u, const PrecisionCfg& cfg) {
    numkit::apply_precision(cfg);
    check_box(u);
    CNum base = sprime_base(cfg);
    if (u.re == 0 && u.im == 0) return base;
    CNum integral = integrate_v({}, CNum(0), u, cfg);
    return base + integral / (4 * numkit::pi_value());
}

CNum action_Sprime_via(const CNum& waypoint, const CNum& u, const PrecisionCfg& cfg) {
    numkit::apply_precision(cfg);
    check_box(waypoint);
    check_box(u);
    CNum integral = integrate_v({}, CNum(0), waypoint, cfg) +
                    integrate_v({waypoint}, waypoint, u, cfg);
    return sprime_base(cfg) + integral / (4 * numkit::pi_value());
}

CNum action_S(const CNum& u, const PrecisionCfg& cfg) {
    numkit::apply_precision(cfg);
    CNum sp = action_Sprime(u, cfg);
    CNum v = v_of_u(u, cfg);
    Real pi = numkit::pi_value();
    CNum u_tilde = -v / Real(2);
    CNum v_tilde = u / Real(2);
    return sp + (u_tilde * v_tilde.re - CNum(0, pi) * v_tilde) / pi;
}

Real volume(const CNum& u, const PrecisionCfg& cfg) {
    numkit::apply_precision(cfg);
    CNum sp = action_Sprime(u, cfg);
    CNum v = v_of_u(u, cfg);
    Real pi = numkit::pi_value();
    return 2 * pi * sp.im - pi * u.re - u.re * v.im / 2;
}

Real chern_simons(const CNum& u, const PrecisionCfg& cfg) {
    return -action_S(u, cfg).re / numkit::pi_value();
}

Real schlafli_residual(const CNum& u, const Real& h, const PrecisionCfg& cfg) {
    numkit::apply_precision(cfg);
    CNum v0 = v_of_u(u, cfg);
    CNum re_step(h, Real(0)), im_step(Real(0), h);

    Real vol_pr = volume(u + re_step, cfg), vol_mr = volume(u - re_step, cfg);
    CNum v_pr = v_of_u(u + re_step, cfg), v_mr = v_of_u(u - re_step, cfg);
    Real vol_pi = volume(u + im_step, cfg), vol_mi = volume(u - im_step, cfg);
    CNum v_pi = v_of_u(u + im_step, cfg), v_mi = v_of_u(u - im_step, cfg);

    // d Vol = -(1/2)(Re(u) d Im(v) - Re(v) d Im(u)) against central
    // differences in the Re(u) and Im(u) directions.
    Real lhs_re = (vol_pr - vol_mr) / (2 * h);
    Real rhs_re = -u.re * ((v_pr.im - v_mr.im) / (2 * h)) / 2;
    Real lhs_im = (vol_pi - vol_mi) / (2 * h);
    Real rhs_im = -(u.re * ((v_pi.im - v_mi.im) / (2 * h)) - v0.re) / 2;
    Real defect_re = abs(lhs_re - rhs_re), defect_im = abs(lhs_im - rhs_im);
    return std::max(defect_re, defect_im);
}

// ---------------------------------------------------------------------------
// Torsion on the cone-angle axis.

Real torsion_fig8(const Real& alpha) {
    Real two_thirds_pi = 2 * numkit::pi_value() / 3;
    if (alpha < 0 || alpha >= two_thirds_pi)
        throw MathError(MathError::Kind::Domain,
                        "cone angle outside [0, 2*pi/3): torsion degenerates");
    Real c = cos(alpha);
    return 1 / sqrt((Real(3) / 2 - c) * (Real(1) / 2 + c));
}

Real torsion_fig8_zero() {
    Real pi = numkit::pi_value();
    return 2 * pi * pi / sqrt(Real(3));
}

} // namespace cjones::geometry
