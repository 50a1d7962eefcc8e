#include "cjones/asym.hpp"

#include "cjones/geometry.hpp"
#include "cjones/jones.hpp"

#include <atomic>
#include <limits>
#include <thread>

namespace cjones::asym {

using numkit::CNum;
using numkit::LogComplex;

namespace {

Real log_magnitude(const LogComplex& v) {
    if (v.is_zero)
        throw MathError(MathError::Kind::DegeneratePoint,
                        "invariant vanishes: its logarithm is undefined here");
    return v.log_mag;
}

} // namespace

ResidualRow residual(long long N, const Real& r, const PrecisionCfg& cfg) {
    numkit::apply_precision(cfg);
    jones::EvalPoint p(N, r);
    Real pi = numkit::pi_value();

    Real log_jones, torsion;
    CNum s;
    if (r == 1) {
        log_jones = log_magnitude(jones::fig8_reduced(p, cfg));
        torsion = geometry::torsion_fig8_zero();
        s = CNum(0, geometry::fig8_volume(cfg) / (2 * pi));
    } else {
        Real alpha = 2 * pi * abs(r - 1);
        torsion = geometry::torsion_fig8(alpha); // rejects alpha >= 2 pi / 3
        LogComplex j = jones::jones_unknot(p, cfg) * jones::fig8_reduced(p, cfg);
        log_jones = log_magnitude(j);
        s = geometry::action_S(CNum(Real(0), 2 * pi * (r - 1)), cfg);
    }

    Real prediction = (N / r) * s.im + Real(3) / 2 * log(N / r) +
                      log(torsion / (2 * pi * pi)) / 2;

    ResidualRow row;
    row.N = N;
    row.r = r;
    row.log_jones = log_jones;
    row.prediction = prediction;
    row.residual = log_jones - prediction;
    return row;
}

std::vector<ResidualRow> sweep(long long N, const Real& r_min, const Real& r_max,
                               long steps, const PrecisionCfg& cfg, int jobs) {
    if (steps < 1)
        throw MathError(MathError::Kind::Domain, "sweep needs at least one step");
    if (r_max < r_min)
        throw MathError(MathError::Kind::Domain, "empty sweep range");

    std::vector<Real> grid;
    grid.reserve(steps);
    for (long i = 0; i < steps; ++i)
        grid.push_back(steps == 1 ? r_min
                                  : r_min + (r_max - r_min) * i / (steps - 1));

    std::vector<ResidualRow> rows(grid.size());
    auto compute = [&](std::size_t i) {
        try {
            rows[i] = residual(N, grid[i], cfg);
        } catch (const MathError& e) {
            ResidualRow& row = rows[i];
            row.N = N;
            row.r = grid[i];
            Real nan = std::numeric_limits<Real>::quiet_NaN();
            row.log_jones = row.prediction = row.residual = nan;
            row.error = e.what();
        }
    };

    if (jobs <= 1 || rows.size() <= 1) {
        for (std::size_t i = 0; i < rows.size(); ++i) compute(i);
        return rows;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    int workers = std::min<std::size_t>(jobs, rows.size());
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            numkit::apply_precision(cfg);
            for (std::size_t i = next.fetch_add(1); i < rows.size();
                 i = next.fetch_add(1))
                compute(i);
        });
    for (auto& t : pool) t.join();
    return rows;
}

FitReport fit_expansion(const std::vector<long long>& N_list, const Real& r,
                        FitKnot knot, const PrecisionCfg& cfg, bool with_inv_n) {
    numkit::apply_precision(cfg);
    std::vector<std::pair<long long, Real>> samples;
    samples.reserve(N_list.size());
    for (long long N : N_list) {
        jones::EvalPoint p(N, r);
        LogComplex value;
        // At r = 1 the unknot-normalized invariant is the one that stays
        // finite; away from it the unreduced J_N carries the expansion.
        switch (knot) {
        case FitKnot::Unknot:
            value = r == 1 ? LogComplex::one() : jones::jones_unknot(p, cfg);
            break;
        case FitKnot::FigureEight:
            value = jones::fig8_reduced(p, cfg);
            if (r != 1) value = value * jones::jones_unknot(p, cfg);
            break;
        case FitKnot::Hopf:
            value = r == 1 ? jones::jones_hopf(p, cfg) / jones::jones_unknot(p, cfg)
                           : jones::jones_hopf(p, cfg);
            break;
        }
        samples.emplace_back(N, log_magnitude(value));
    }

    numkit::FitCoeffs fc = numkit::fit_log_affine(samples, with_inv_n);
    Real pi = numkit::pi_value();
    FitReport report;
    report.a = fc.a;
    report.b = fc.b;
    report.c = fc.c;
    report.vol_est = 2 * pi * fc.a * r;
    report.delta_est = 2 * fc.b;
    report.torsion_const_est = 2 * pi * pi * exp(2 * fc.c);
    report.rms = fc.rms;
    return report;
}

Real volume_conjecture_check(long long N_max, const PrecisionCfg& cfg) {
    numkit::apply_precision(cfg);
    if (N_max < 100)
        throw MathError(MathError::Kind::Domain,
                        "volume check needs N_max of at least 100");
    std::vector<std::pair<long long, Real>> samples;
    for (long long N = 100; N <= N_max; N += 100)
        samples.emplace_back(N, log_magnitude(jones::fig8_reduced(
                                    jones::EvalPoint(N, Real(1)), cfg)));

    // With fewer than four sample points the three-parameter fit is
    // underdetermined; pin the log coefficient at its known value 3/2.
    numkit::FitCoeffs fc =
        samples.size() >= 4
            ? numkit::fit_log_affine(samples)
            : numkit::fit_log_affine_pinned_b(samples, Real(3) / 2);
    return 2 * numkit::pi_value() * fc.a;
}

} // namespace cjones::asym
