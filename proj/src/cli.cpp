#include "cjones/cli.hpp"

#include "cjones/alexander.hpp"
#include "cjones/asym.hpp"
#include "cjones/deltacalc.hpp"
#include "cjones/geometry.hpp"
#include "cjones/jones.hpp"
#include "cjones/knotlang.hpp"
#include "cjones/numkit.hpp"

#include "CLI11.hpp"

#include <sstream>
#include <thread>

namespace cjones::cli {

using numkit::CNum;
using numkit::PrecisionCfg;
using numkit::Real;

namespace {

std::string fmt_real(const Real& x) {
    if (isnan(x)) return "nan";
    if (isinf(x)) return x > 0 ? "inf" : "-inf";
    return x.str(17);
}

struct Cell {
    enum class Kind { Num, Int, Str };
    std::string name;
    std::string value;
    Kind kind;
};

Cell num(std::string name, const Real& x) {
    return {std::move(name), fmt_real(x), Cell::Kind::Num};
}
Cell cell_int(std::string name, long long v) {
    return {std::move(name), std::to_string(v), Cell::Kind::Int};
}
Cell cell_int(std::string name, const numkit::BigInt& v) {
    return {std::move(name), v.str(), Cell::Kind::Int};
}
Cell str(std::string name, std::string v) {
    return {std::move(name), std::move(v), Cell::Kind::Str};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out;
}

// CSV (header once, then data lines) or newline-delimited JSON objects.
class Emitter {
public:
    Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}

    void row(const std::vector<Cell>& cells) {
        if (json_) {
            out_ << '{';
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) out_ << ',';
                out_ << '"' << cells[i].name << "\":" << json_value(cells[i]);
            }
            out_ << "}\n";
            return;
        }
        if (!header_done_) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                out_ << (i ? "," : "") << cells[i].name;
            out_ << '\n';
            header_done_ = true;
        }
        for (std::size_t i = 0; i < cells.size(); ++i)
            out_ << (i ? "," : "") << csv_escape(cells[i].value);
        out_ << '\n';
    }

private:
    static std::string json_value(const Cell& c) {
        switch (c.kind) {
        case Cell::Kind::Str: return '"' + json_escape(c.value) + '"';
        case Cell::Kind::Int: return c.value;
        case Cell::Kind::Num:
            if (c.value == "nan" || c.value == "inf" || c.value == "-inf") return "null";
            return c.value;
        }
        return "null";
    }

    std::ostream& out_;
    bool json_;
    bool header_done_ = false;
};

// Thrown for option values CLI11's validators cannot see (cross-option
// constraints, list syntax); mapped to the usage exit code.
struct UsageError {
    std::string message;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<long long> parse_n_list(const std::string& text) {
    std::vector<long long> out;
    for (const std::string& tok : split(text, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError{"--N-list expects comma-separated positive integers, got '" +
                             tok + "'"};
        }
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

void emit_log_value(Emitter& em, long long N, const Real& r,
                    const numkit::LogComplex& v) {
    Real log_mag = v.is_zero ? -std::numeric_limits<Real>::infinity() : v.log_mag;
    Real phase = v.is_zero ? Real(0) : v.phase;
    em.row({cell_int("N", N), num("r", r), num("log_mag", log_mag),
            num("phase", phase)});
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"colored Jones asymptotics against Chern-Simons predictions"};
    app.name("cjones");

    int digits = 64;
    bool json = false;
    app.add_option("--digits", digits, "working precision in decimal digits")
        ->envname("CJONES_DIGITS")
        ->check(CLI::Range(16, 4096))
        ->capture_default_str();
    app.add_flag("--json", json, "emit one JSON object per row instead of CSV");
    app.require_subcommand(1);
    app.fallthrough();

    // ---- jones ----
    auto* cmd_jones = app.add_subcommand("jones", "evaluate J_N (or reduced V_N)");
    std::string jones_knot, jones_r;
    long long jones_N = 0;
    bool jones_reduced = false;
    cmd_jones->add_option("--knot", jones_knot, "knot expression")->required();
    cmd_jones->add_option("--N", jones_N, "color")->required()->check(CLI::Range(1LL, 1000000LL));
    cmd_jones->add_option("--r", jones_r, "evaluation parameter r = N/k")
        ->required()
        ->check(CLI::Number);
    cmd_jones->add_flag("--reduced", jones_reduced, "evaluate V_N = J_N/[N]");

    // ---- kashaev ----
    auto* cmd_kashaev = app.add_subcommand("kashaev", "figure-eight value at exp(2 pi i/N)");
    long long kashaev_N = 0;
    cmd_kashaev->add_option("--N", kashaev_N, "color")->required()->check(CLI::Range(2LL, 1000000LL));

    // ---- action ----
    auto* cmd_action = app.add_subcommand("action", "Chern-Simons actions at u");
    std::string u_re = "0", u_im = "0";
    cmd_action->add_option("--u-re", u_re, "Re u")->check(CLI::Number);
    cmd_action->add_option("--u-im", u_im, "Im u")->check(CLI::Number);

    // ---- torsion ----
    auto* cmd_torsion = app.add_subcommand("torsion", "twisted torsion on the cone axis");
    std::string torsion_alpha;
    bool torsion_zero = false;
    cmd_torsion->add_option("--alpha", torsion_alpha, "cone angle")->check(CLI::Number);
    cmd_torsion->add_flag("--zero", torsion_zero, "cusp (trivial deformation) constant");

    // ---- delta ----
    auto* cmd_delta = app.add_subcommand("delta", "log-term coefficient rule engine");
    std::string delta_knot, delta_rep_name, delta_hyp;
    bool delta_central = false;
    cmd_delta->add_option("--knot", delta_knot, "knot expression")->required();
    cmd_delta->add_option("--rep", delta_rep_name, "representation class")
        ->required()
        ->check(CLI::IsMember({"abelian", "nonabelian", "holonomy"}));
    cmd_delta->add_flag("--annulus-central", delta_central,
                        "the connected-sum annulus representation is +-identity");
    cmd_delta->add_option("--satellite-hyp", delta_hyp,
                          "asserted satellite hypotheses, e.g. i,ii,iii,iv");

    // ---- alexander ----
    auto* cmd_alex = app.add_subcommand("alexander", "Alexander polynomial of a braid closure");
    std::string alex_braid;
    cmd_alex->add_option("--braid", alex_braid, "braid word, e.g. \"s1 s2^-1 s1 s2^-1\"")
        ->required();

    // ---- residual ----
    auto* cmd_residual = app.add_subcommand("residual", "expansion residual sweep");
    long long res_N = 0;
    long res_steps = 0;
    std::string res_rmin, res_rmax;
    int res_jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    cmd_residual->add_option("--N", res_N, "color")->required()->check(CLI::Range(1LL, 1000000LL));
    cmd_residual->add_option("--r-min", res_rmin, "sweep start")->required()->check(CLI::Number);
    cmd_residual->add_option("--r-max", res_rmax, "sweep end")->required()->check(CLI::Number);
    cmd_residual->add_option("--steps", res_steps, "grid points (endpoints included)")
        ->required()
        ->check(CLI::Range(1L, 1000000L));
    cmd_residual->add_option("--jobs", res_jobs, "worker threads")
        ->check(CLI::Range(1, 4096))
        ->capture_default_str();

    // ---- fit ----
    auto* cmd_fit = app.add_subcommand("fit", "fit Re log to a*N + b*log N + c");
    std::string fit_r, fit_nlist, fit_knot = "4_1";
    bool fit_inv_n = false;
    cmd_fit->add_option("--r", fit_r, "evaluation parameter")->required()->check(CLI::Number);
    cmd_fit->add_option("--N-list", fit_nlist, "comma-separated colors")->required();
    cmd_fit->add_option("--knot", fit_knot, "invariant to fit")
        ->check(CLI::IsMember({"U", "4_1", "hopf"}))
        ->capture_default_str();
    cmd_fit->add_flag("--inv-n-term", fit_inv_n, "include a d/N term in the model");

    // ---- volcheck ----
    auto* cmd_volcheck = app.add_subcommand("volcheck", "volume growth-rate extraction");
    long long vol_nmax = 0;
    cmd_volcheck->add_option("--N-max", vol_nmax, "largest color (multiples of 100 sampled)")
        ->required()
        ->check(CLI::Range(100LL, 1000000LL));

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        PrecisionCfg cfg(digits);
        numkit::apply_precision(cfg);
        Emitter em(out, json);

        if (app.got_subcommand(cmd_jones)) {
            auto expr = knotlang::parse_knot(jones_knot);
            jones::EvalPoint p(jones_N, Real(jones_r));
            numkit::LogComplex v = jones_reduced ? jones::jones_eval_reduced(*expr, p, cfg)
                                                 : jones::jones_eval(*expr, p, cfg);
            emit_log_value(em, jones_N, p.r, v);
        } else if (app.got_subcommand(cmd_kashaev)) {
            numkit::LogComplex v =
                jones::fig8_reduced(jones::EvalPoint(kashaev_N, Real(1)), cfg);
            Real value = v.to_cnum().re;
            Real growth = 2 * numkit::pi_value() / kashaev_N * v.log_mag;
            em.row({cell_int("N", kashaev_N), num("value", value), num("growth", growth)});
        } else if (app.got_subcommand(cmd_action)) {
            CNum u{Real(u_re), Real(u_im)};
            CNum sp = geometry::action_Sprime(u, cfg);
            CNum s = geometry::action_S(u, cfg);
            CNum v = geometry::v_of_u(u, cfg);
            em.row({num("u_re", u.re), num("u_im", u.im), num("sprime_re", sp.re),
                    num("sprime_im", sp.im), num("s_re", s.re), num("s_im", s.im),
                    num("vol", geometry::volume(u, cfg)),
                    num("cs", geometry::chern_simons(u, cfg)), num("v_re", v.re),
                    num("v_im", v.im)});
        } else if (app.got_subcommand(cmd_torsion)) {
            if (torsion_zero == !torsion_alpha.empty())
                throw UsageError{"torsion needs exactly one of --alpha or --zero"};
            if (torsion_zero) {
                em.row({str("kind", "zero"), num("alpha", Real(0)),
                        num("value", geometry::torsion_fig8_zero())});
            } else {
                Real alpha(torsion_alpha);
                em.row({str("kind", "cone"), num("alpha", alpha),
                        num("value", geometry::torsion_fig8(alpha))});
            }
        } else if (app.got_subcommand(cmd_delta)) {
            auto expr = knotlang::parse_knot(delta_knot);
            deltacalc::RepClass rep;
            if (delta_rep_name == "abelian") rep.kind = deltacalc::RepKind::AbelianNearIdentity;
            else if (delta_rep_name == "holonomy") rep.kind = deltacalc::RepKind::Holonomy;
            else rep.kind = deltacalc::RepKind::NonAbelian;
            rep.annulus_central = delta_central;
            if (!delta_hyp.empty()) {
                for (const std::string& tok : split(delta_hyp, ',')) {
                    if (tok == "i") rep.sat_i = true;
                    else if (tok == "ii") rep.sat_ii = true;
                    else if (tok == "iii") rep.sat_iii = true;
                    else if (tok == "iv") rep.sat_iv = true;
                    else throw UsageError{"--satellite-hyp tokens must be among i,ii,iii,iv"};
                }
            }
            deltacalc::DeltaResult d = deltacalc::delta_rep(*expr, rep);
            em.row({cell_int("delta", d.delta), cell_int("h0", d.h0),
                    cell_int("h1_ker", d.h1_ker), str("trace", join(d.trace, ";"))});
        } else if (app.got_subcommand(cmd_alex)) {
            auto braid = knotlang::parse_braid(alex_braid);
            auto pres = knotlang::presentation_from_braid(braid);
            alexander::LaurentPoly poly = alexander::alexander_poly(pres);
            em.row({str("poly", poly.to_string()), cell_int("at_1", poly.eval_pm1(1)),
                    cell_int("at_minus1", poly.eval_pm1(-1))});
        } else if (app.got_subcommand(cmd_residual)) {
            auto rows = asym::sweep(res_N, Real(res_rmin), Real(res_rmax), res_steps,
                                    cfg, res_jobs);
            for (const auto& row : rows)
                em.row({cell_int("N", row.N), num("r", row.r),
                        num("log_jones", row.log_jones),
                        num("prediction", row.prediction),
                        num("residual", row.residual), str("error", row.error)});
        } else if (app.got_subcommand(cmd_fit)) {
            asym::FitKnot knot = asym::FitKnot::FigureEight;
            if (fit_knot == "U") knot = asym::FitKnot::Unknot;
            else if (fit_knot == "hopf") knot = asym::FitKnot::Hopf;
            asym::FitReport rep = asym::fit_expansion(parse_n_list(fit_nlist), Real(fit_r),
                                                      knot, cfg, fit_inv_n);
            em.row({num("a", rep.a), num("b", rep.b), num("c", rep.c),
                    num("vol_est", rep.vol_est), num("delta_est", rep.delta_est),
                    num("torsion_const_est", rep.torsion_const_est), num("rms", rep.rms)});
        } else if (app.got_subcommand(cmd_volcheck)) {
            em.row({cell_int("n_max", vol_nmax),
                    num("vol_est", asym::volume_conjecture_check(vol_nmax, cfg))});
        }
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.message << '\n';
        return 2;
    } catch (const cjones::ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 4;
    } catch (const MathError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

} // namespace cjones::cli
