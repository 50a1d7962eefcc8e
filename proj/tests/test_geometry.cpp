#include "doctest.h"

#include "cjones/geometry.hpp"

#include <complex>
#include <vector>

using namespace cjones::geometry;
using cjones::MathError;
namespace numkit = cjones::numkit;

namespace {

Real R(const char* s) { return Real(s); }

CNum C(const char* re, const char* im) { return CNum{Real(re), Real(im)}; }

// Independent branch-continuation oracle in plain double precision: march
// along the straight segment 0 -> u, at each step solve the quadratic in l
// and keep the root closest to the previous one (closest to the tangent
// prediction -1 + sqrt(3) i z on the very first step, where the two roots
// are still equidistant from the double root -1).
std::complex<double> track_double(std::complex<double> u, int steps) {
    std::complex<double> l = -1.0;
    const std::complex<double> i(0.0, 1.0);
    for (int s = 1; s <= steps; ++s) {
        std::complex<double> z = u * (double(s) / steps);
        std::complex<double> m2 = std::exp(z);
        std::complex<double> m4 = m2 * m2;
        std::complex<double> P = 1.0 - m2 - 2.0 * m4 - m4 * m2 + m4 * m4;
        std::complex<double> b = P / m4;
        std::complex<double> disc = std::sqrt(b * b - 4.0);
        std::complex<double> r1 = (std::abs(b + disc) > std::abs(b - disc))
                                      ? (b + disc) / 2.0
                                      : (b - disc) / 2.0;
        std::complex<double> r2 = 1.0 / r1;
        std::complex<double> ref = (s == 1) ? (-1.0 + std::sqrt(3.0) * i * z) : l;
        l = (std::abs(r1 - ref) <= std::abs(r2 - ref)) ? r1 : r2;
    }
    return l;
}

} // namespace

TEST_SUITE("geometry") {

TEST_CASE("defining polynomial") {
    PrecisionCfg cfg(64);
    numkit::apply_precision(cfg);

    // double root of the quadratic in l at the complete structure
    CHECK(abs(a_poly_fig8(CNum(-1), CNum(1))) < R("1e-70"));
    CHECK(abs(a_poly_fig8(CNum(1), CNum(1)) - CNum(-4)) < R("1e-70"));
    // at m = 1 the polynomial collapses to -(l+1)^2
    CNum l{R("0.7"), Real(0)};
    CHECK(abs(a_poly_fig8(l, CNum(1)) - CNum(R("-2.89"))) < R("1e-64"));
}

TEST_CASE("complete volume constant") {
    PrecisionCfg cfg(64);
    numkit::apply_precision(cfg);
    CHECK(abs(fig8_volume(cfg) - R("2.029883212819307250042405108549040571883")) < R("1e-38"));
}

TEST_CASE("branch tracking") {
    PrecisionCfg cfg(64);
    numkit::apply_precision(cfg);

    SUBCASE("base point") {
        HolonomyPoint h = holonomy_branch(CNum(0), cfg);
        CHECK(abs(h.l - CNum(-1)) < R("1e-60"));
        CHECK(abs(h.v) < R("1e-60"));
        CHECK(abs(h.m - CNum(1)) < R("1e-60"));
    }

    SUBCASE("closed form at u = i pi / 3") {
        CNum u{Real(0), numkit::pi_value() / 3};
        HolonomyPoint h = holonomy_branch(u, cfg);
        Real l_exact = -(2 + sqrt(Real(3)));
        Real v_exact = -2 * log(2 + sqrt(Real(3)));
        CHECK(abs(h.l.re - l_exact) < R("1e-50"));
        CHECK(abs(h.l.im) < R("1e-50"));
        CHECK(abs(h.v.re - v_exact) < R("1e-50"));
        CHECK(abs(h.v.im) < R("1e-50"));
    }

    SUBCASE("tracked point stays on the curve") {
        std::vector<CNum> grid = {
            C("0", "0.1"),  C("0", "0.5"),   C("0", "1.5"),   C("0.3", "0.4"),
            C("-0.2", "0.3"), C("0.2", "-0.3"), C("0.8", "0"), C("-0.8", "0"),
            C("0.25", "0.1"), C("0", "1.9"),
        };
        for (const CNum& u : grid) {
            HolonomyPoint h = holonomy_branch(u, cfg);
            CHECK(abs(a_poly_fig8(h.l, h.m)) < R("1e-56"));
            // m and l are tied to u and v by definition
            CHECK(abs(h.m - numkit::exp(u / Real(2))) < R("1e-60"));
            CHECK(abs(h.l + numkit::exp(-h.v / Real(2))) < R("1e-54"));
        }
    }

    SUBCASE("reflection symmetry across the imaginary axis") {
        CNum u = C("0.2", "0.3");
        CNum v1 = v_of_u(u, cfg);
        CNum v2 = v_of_u(CNum(0) - conj(u), cfg);
        CHECK(abs(v1 - conj(v2)) < R("1e-52"));
        // pure imaginary u gives real v
        CHECK(abs(v_of_u(C("0", "0.4"), cfg).im) < R("1e-52"));
    }

    SUBCASE("agrees with the double-precision march") {
        for (std::complex<double> u : {std::complex<double>(0.0, 0.3),
                                       std::complex<double>(0.2, 0.3),
                                       std::complex<double>(0.8, 0.0),
                                       std::complex<double>(-0.5, 0.2),
                                       std::complex<double>(0.0, 1.5)}) {
            std::complex<double> lo = track_double(u, 4000);
            HolonomyPoint h = holonomy_branch(CNum{Real(u.real()), Real(u.imag())}, cfg);
            double lre = static_cast<double>(h.l.re);
            double lim = static_cast<double>(h.l.im);
            CHECK(std::abs(std::complex<double>(lre, lim) - lo) < 1e-9);
        }
    }

    SUBCASE("branch collisions are reported") {
        CNum collide{Real(0), 2 * numkit::pi_value() / 3};
        CHECK_THROWS_AS(holonomy_branch(collide, cfg), MathError);
        CHECK_THROWS_AS(holonomy_branch(C("1.0", "0"), cfg), MathError);
        CHECK_NOTHROW(holonomy_branch(C("0.9", "0"), cfg));
        try {
            holonomy_branch(C("1.0", "0"), cfg);
        } catch (const MathError& e) {
            CHECK(e.kind() == MathError::Kind::BranchDegeneration);
        }
    }

    SUBCASE("search box") {
        CHECK_THROWS_AS(holonomy_branch(C("1.3", "0"), cfg), MathError);
        CHECK_THROWS_AS(holonomy_branch(C("-1.25", "0.1"), cfg), MathError);
        CHECK_THROWS_AS(holonomy_branch(C("0", "2.5"), cfg), MathError);
        try {
            holonomy_branch(C("0", "-2.5"), cfg);
        } catch (const MathError& e) {
            CHECK(e.kind() == MathError::Kind::OutOfDomain);
        }
    }
}

TEST_CASE("action integral") {
    PrecisionCfg cfg(64);
    numkit::apply_precision(cfg);

    SUBCASE("value at the complete structure") {
        CNum s0 = action_Sprime(CNum(0), cfg);
        CHECK(abs(s0.re) < R("1e-55"));
        CHECK(abs(s0.im - fig8_volume(cfg) / (2 * numkit::pi_value())) < R("1e-55"));
        CHECK(abs(action_S(CNum(0), cfg) - s0) < R("1e-55"));
    }

    SUBCASE("frozen value on the cone axis") {
        CNum s = action_Sprime(C("0", "0.1"), cfg);
        // on the axis the real part is exactly -Im(u)/2
        CHECK(abs(s.re + R("0.05")) < R("1e-40"));
        CHECK(abs(s.im - R("0.32168991634222847")) < R("1e-13"));
        CHECK(abs(v_of_u(C("0", "0.1"), cfg).re + R("0.34525985898491761")) < R("1e-13"));
    }

    SUBCASE("derivative recovers the longitude parameter") {
        CNum u = C("0", "0.1");
        Real h = R("1e-4");
        CNum up = action_Sprime(CNum{u.re + h, u.im}, cfg);
        CNum dn = action_Sprime(CNum{u.re - h, u.im}, cfg);
        CNum deriv = (up - dn) / (2 * h);
        CNum recovered = deriv * (4 * numkit::pi_value()) - CNum{Real(0), 2 * numkit::pi_value()};
        CHECK(abs(recovered - v_of_u(u, cfg)) < R("1e-6"));
    }

    SUBCASE("path independence") {
        CNum u = C("0.2", "0.3");
        CNum direct = action_Sprime(u, cfg);
        CHECK(abs(action_Sprime_via(C("0.05", "0.15"), u, cfg) - direct) < R("1e-30"));
        CHECK(abs(action_Sprime_via(C("0.18", "0.02"), u, cfg) - direct) < R("1e-30"));
    }
}

TEST_CASE("volume and chern-simons") {
    PrecisionCfg cfg(64);
    numkit::apply_precision(cfg);

    SUBCASE("frozen values") {
        CHECK(abs(volume(CNum(0), cfg) - R("2.029883212819307250042405108549")) < R("1e-29"));
        CHECK(abs(volume(C("0", "0.3"), cfg) - R("1.953084283893774")) < R("1e-12"));
        CHECK(abs(volume(C("0.2", "0.3"), cfg) - R("1.9208976904015448")) < R("1e-12"));
        CNum v = v_of_u(C("0.2", "0.3"), cfg);
        CHECK(abs(v.re + R("1.0471167997245242")) < R("1e-12"));
        CHECK(abs(v.im - R("0.64041328854834514")) < R("1e-12"));
    }

    SUBCASE("chern-simons vanishes on the cone axis") {
        CHECK(abs(chern_simons(CNum(0), cfg)) < R("1e-40"));
        CHECK(abs(chern_simons(C("0", "0.3"), cfg)) < R("1e-40"));
        CHECK(abs(chern_simons(C("0", "1.0"), cfg)) < R("1e-40"));
        // off the axis it picks up a nonzero value
        CHECK(abs(chern_simons(C("0.2", "0.3"), cfg)) > R("1e-6"));
    }

    SUBCASE("volume decreases along the cone axis") {
        Real prev = fig8_volume(cfg);
        for (const char* a : {"0.3", "0.9", "1.5", "1.8"}) {
            Real cur = volume(C("0", a), cfg);
            CHECK(cur < prev);
            CHECK(cur > 0);
            prev = cur;
        }
    }

    SUBCASE("two volume formulas agree") {
        for (const CNum& u : {C("0.2", "0.3"), C("-0.2", "0.3"), C("0.25", "0.1")}) {
            Real direct = volume(u, cfg);
            Real via_s = 2 * numkit::pi_value() * action_S(u, cfg).im;
            CHECK(abs(direct - via_s) < R("1e-40"));
        }
        // with Re u = 0 the correction terms vanish identically
        CNum axis = C("0", "0.5");
        Real via_sprime = 2 * numkit::pi_value() * action_Sprime(axis, cfg).im;
        CHECK(abs(volume(axis, cfg) - via_sprime) < R("1e-50"));
    }
}

TEST_CASE("schlafli defect") {
    PrecisionCfg cfg(32); // 1e-5 scale test; lower precision keeps it quick
    numkit::apply_precision(cfg);
    CNum u = C("0.2", "0.3");
    Real res_h = schlafli_residual(u, R("1e-4"), cfg);
    CHECK(res_h < R("1e-5"));
    Real res_h2 = schlafli_residual(u, R("5e-5"), cfg);
    CHECK(res_h2 < res_h);
    // central differences: defect shrinks like h^2
    CHECK(res_h / res_h2 > R("3"));
    CHECK(res_h / res_h2 < R("5"));
}

TEST_CASE("torsion on the cone axis") {
    PrecisionCfg cfg(64);
    numkit::apply_precision(cfg);
    Real pi = numkit::pi_value();

    Real at0 = torsion_fig8(Real(0));
    CHECK(abs(at0 - 2 / sqrt(Real(3))) < R("1e-60"));
    CHECK(abs(torsion_fig8(pi / 2) - at0) < R("1e-60"));
    CHECK(abs(torsion_fig8_zero() - pi * pi * at0) < R("1e-58"));

    // generic angle against the closed form
    Real a = R("0.5");
    Real expect = 1 / sqrt((Real(3) / 2 - cos(a)) * (Real(1) / 2 + cos(a)));
    CHECK(abs(torsion_fig8(a) - expect) < R("1e-60"));

    CHECK_THROWS_AS(torsion_fig8(2 * pi / 3), MathError);
    CHECK_THROWS_AS(torsion_fig8(R("2.2")), MathError);
    CHECK_THROWS_AS(torsion_fig8(R("-0.1")), MathError);
}

} // TEST_SUITE
