// Command-line front end: point evaluation, identity-suite runner, limit
// sweeps, pole scans. Exit codes: 0 ok, 1 verify failure, 2 pole hit,
// 64 parse error, 65 domain error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "qbarnes/classical.hpp"
#include "qbarnes/io.hpp"
#include "qbarnes/limits.hpp"
#include "qbarnes/qgamma.hpp"
#include "qbarnes/qzeta.hpp"
#include "qbarnes/special.hpp"
#include "qbarnes/verify.hpp"

using namespace qbarnes;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_pole = 2;
constexpr int exit_parse = 64;
constexpr int exit_domain = 65;

struct CommonOpts {
    std::string format = "text";
    double tol = 1e-12;
    std::size_t max_terms = 0; // 0 = default / env
};

TruncationPolicy make_policy(const CommonOpts& c) {
    TruncationPolicy pol;
    pol.tol = c.tol;
    pol.quad_tol = c.tol;
    if (c.max_terms > 0) {
        pol.max_terms = c.max_terms;
    } else if (const char* env = std::getenv("QBARNES_MAX_TERMS")) {
        pol.max_terms = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
    }
    return pol;
}

void print_result(const EvalResult& r, const std::string& format, const std::string& function) {
    if (format == "json") {
        io::JsonLine line;
        line.str("function", function)
            .num("value_re", r.value.real())
            .num("value_im", r.value.imag())
            .num("abs_error", r.abs_error)
            .str("method", method_name(r.method))
            .num("terms", static_cast<double>(r.terms));
        std::cout << line.done() << "\n";
    } else if (format == "csv") {
        std::cout << io::csv_row({"function", "value_re", "value_im", "abs_error", "method"});
        std::cout << io::csv_row({function, io::format_double(r.value.real()),
                                  io::format_double(r.value.imag()),
                                  io::format_double(r.abs_error), method_name(r.method)});
    } else {
        std::cout << function << " = " << io::format_complex(r.value)
                  << "  (abs error <= " << io::format_double(r.abs_error)
                  << ", method " << method_name(r.method) << ")\n";
    }
}

struct EvalArgs {
    std::string function;
    int r = 1;
    int nu = 1;
    int m = 0;
    double q = 0.5;
    std::string s = "2";
    std::string t;
    std::string z = "1";
    std::string omega;
    std::string route = "auto";
};

int run_eval(const EvalArgs& a, const CommonOpts& common) {
    const TruncationPolicy pol = make_policy(common);
    const Complex s = io::parse_complex(a.s);
    const Complex z = io::parse_complex(a.z);
    const Weights om = a.omega.empty() ? Weights::ones(a.r) : io::parse_weights(a.omega);

    EvalResult res;
    if (a.function == "hurwitz") {
        if (a.route == "direct") {
            res = classical::hurwitz_direct(s, z, pol);
        } else {
            classical::EMConfig cfg;
            cfg.M = std::max(8, static_cast<int>(std::ceil(-s.real())) + 4);
            cfg.policy = pol;
            res = classical::hurwitz_em(s, z, cfg);
        }
    } else if (a.function == "barnes") {
        res = classical::barnes_zeta(a.r, s, z);
    } else if (a.function == "qzeta") {
        const QParam q(a.q);
        if (a.t.empty()) throw DomainError("eval qzeta: --t is required");
        const Complex t = io::parse_complex(a.t);
        if (a.route == "direct")
            res = qzeta::qzeta_direct(a.r, q, s, t, z, om, pol);
        else if (a.route == "qbinom")
            res = qzeta::qzeta_qbinom(a.r, q, s, t, z, pol);
        else if (a.route == "reduce")
            res = qzeta::qzeta_reduce(a.r, q, s, t, z, qzeta::depth1_binomial_ac(q, z, pol), pol);
        else if (a.route == "em") {
            if (a.r != 1) throw DomainError("eval qzeta --route em: depth-1 only (use reduce)");
            qzeta::ContinuationParams cp;
            cp.policy = pol;
            res = qzeta::qzeta1_em(q, s, t, z, cp);
        } else {
            res = qzeta::qzeta_binomial_ac(a.r, q, s, t, z, om, pol);
        }
    } else if (a.function == "qzeta-nu") {
        res = qzeta::qzeta_nu(a.r, QParam(a.q), s, z, a.nu, om, pol);
    } else if (a.function == "qgamma") {
        const qgamma::QGammaContext ctx{QParam(a.q)};
        const Complex v = qgamma::qgamma(ctx, z);
        res = {v, 1e-13 * std::abs(v), Method::closed_form, 0};
    } else if (a.function == "gamma-q") {
        const Complex v = qgamma::gamma_q_euler(QParam(a.q), z, pol);
        res = {v, pol.tol, Method::closed_form, 0};
    } else if (a.function == "special-value") {
        const Complex v = qzeta::qzeta_special_value(a.r, QParam(a.q), a.m, z, a.nu, om);
        res = {v, 1e-13 * std::abs(v), Method::special_value, 0};
    } else {
        throw DomainError("eval: unknown function \"" + a.function + "\"");
    }
    print_result(res, common.format, a.function);
    return exit_ok;
}

struct SweepArgs {
    int r = 1;
    std::optional<int> nu;
    std::string phi;
    double q_lo_k = 3, q_hi_k = 13;
    std::string s = "2";
    std::string z = "1";
    std::string omega;
    bool dterms = false;
    bool conjecture = false;
    int N = 2, M = 4;
    std::string t;
};

std::vector<double> grid_from(double lo_k, double hi_k) {
    std::vector<double> g;
    for (int k = static_cast<int>(lo_k); k <= static_cast<int>(hi_k); ++k)
        g.push_back(1.0 - std::pow(2.0, -k));
    return g;
}

limits::SweepRule parse_rule(const std::string& phi) {
    // affine t-rules "s-0.5", "2s-1", "0.5*s+1", "s"
    std::string txt;
    for (char c : phi)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') txt += c;
    const std::size_t spos = txt.find('s');
    if (spos == std::string::npos)
        throw DomainError("sweep: --phi must be an affine rule in s, like \"s-0.5\"");
    double a = 1.0;
    const std::string apart = txt.substr(0, spos);
    if (apart == "-") a = -1.0;
    else if (!apart.empty()) a = std::strtod(apart.c_str(), nullptr);
    double b = 0.0;
    const std::string bpart = txt.substr(spos + 1);
    if (!bpart.empty()) b = std::strtod(bpart.c_str(), nullptr);
    return limits::SweepRule::affine(a, b);
}

void emit_sweep_rows(const limits::SweepReport& rep, const std::string& format) {
    if (format == "csv")
        std::cout << io::csv_row({"q", "value_re", "value_im", "target_re", "target_im", "gap"});
    for (const limits::SweepPoint& pt : rep.rows) {
        if (format == "json") {
            io::JsonLine line;
            line.num("q", pt.q)
                .num("value_re", pt.value.real())
                .num("value_im", pt.value.imag())
                .num("target_re", pt.target.real())
                .num("target_im", pt.target.imag())
                .num("gap", pt.gap);
            if (pt.pole) line.str("pole", pt.note);
            std::cout << line.done() << "\n";
        } else if (format == "csv") {
            std::cout << io::csv_row({io::format_double(pt.q), io::format_double(pt.value.real()),
                                      io::format_double(pt.value.imag()),
                                      io::format_double(pt.target.real()),
                                      io::format_double(pt.target.imag()),
                                      pt.pole ? "pole" : io::format_double(pt.gap)});
        } else {
            std::cout << "q=" << io::format_double(pt.q) << "  value=" << io::format_complex(pt.value)
                      << "  gap=" << (pt.pole ? "pole: " + pt.note : io::format_double(pt.gap)) << "\n";
        }
    }
    if (format == "json") {
        io::JsonLine line;
        line.str("classification", limits::sweep_class_name(rep.classification))
            .num("fitted_slope", rep.fitted_slope)
            .num("probe_s_re", rep.probe_s.real())
            .num("probe_s_im", rep.probe_s.imag());
        if (!rep.note.empty()) line.str("note", rep.note);
        std::cout << line.done() << "\n";
    } else if (format == "csv") {
        std::cout << io::csv_row({"classification", limits::sweep_class_name(rep.classification),
                                  "slope", io::format_double(rep.fitted_slope), "", ""});
    } else {
        std::cout << "classification: " << limits::sweep_class_name(rep.classification)
                  << "  (fitted log-gap slope " << io::format_double(rep.fitted_slope) << ")\n";
        if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
    }
}

int run_sweep(const SweepArgs& a, const CommonOpts& common) {
    const Complex s = io::parse_complex(a.s);
    const Complex z = io::parse_complex(a.z);
    const std::vector<double> grid = grid_from(a.q_lo_k, a.q_hi_k);

    if (a.dterms) {
        const Complex t = a.t.empty() ? s - 1.0 : io::parse_complex(a.t);
        const limits::DtermReport rep = limits::dterm_limit_check(s, t, z, a.N, a.M, grid);
        if (common.format == "csv")
            std::cout << io::csv_row({"q", "d1_gap", "d2_gap", "d3_gap"});
        for (const limits::DtermRow& row : rep.rows) {
            if (common.format == "json") {
                io::JsonLine line;
                line.num("q", row.q).num("d1_gap", row.d1_gap).num("d2_gap", row.d2_gap).num(
                    "d3_gap", row.d3_gap);
                std::cout << line.done() << "\n";
            } else if (common.format == "csv") {
                std::cout << io::csv_row({io::format_double(row.q), io::format_double(row.d1_gap),
                                          io::format_double(row.d2_gap),
                                          io::format_double(row.d3_gap)});
            } else {
                std::cout << "q=" << io::format_double(row.q) << "  D1 gap " << row.d1_gap
                          << "  D2 gap " << row.d2_gap << "  D3 gap " << row.d3_gap << "\n";
            }
        }
        return exit_ok;
    }

    if (a.conjecture) {
        const Weights om = a.omega.empty() ? Weights::ones(a.r) : io::parse_weights(a.omega);
        const limits::ConjectureReport rep =
            limits::conjecture_probe(a.r, om, a.nu.value_or(1), s, z, grid);
        std::cout << "# " << rep.mode_note << "\n";
        if (common.format == "csv") std::cout << io::csv_row({"q", "value_re", "value_im", "gap"});
        for (const limits::ConjectureRow& row : rep.rows) {
            if (common.format == "json") {
                io::JsonLine line;
                line.num("q", row.q)
                    .num("value_re", row.value.real())
                    .num("value_im", row.value.imag())
                    .num("gap", row.gap);
                std::cout << line.done() << "\n";
            } else if (common.format == "csv") {
                std::cout << io::csv_row({io::format_double(row.q),
                                          io::format_double(row.value.real()),
                                          io::format_double(row.value.imag()),
                                          io::format_double(row.gap)});
            } else {
                std::cout << "q=" << io::format_double(row.q)
                          << "  value=" << io::format_complex(row.value) << "  gap=" << row.gap
                          << "\n";
            }
        }
        return exit_ok;
    }

    limits::SweepSpec spec;
    spec.q_grid = grid;
    spec.r = a.r;
    spec.s = s;
    spec.z = z;
    spec.omega = a.omega.empty() ? Weights::ones(a.r) : io::parse_weights(a.omega);
    spec.rule = a.phi.empty() ? limits::SweepRule::shift(a.nu.value_or(1)) : parse_rule(a.phi);
    spec.policy = make_policy(common);
    emit_sweep_rows(limits::limit_sweep(spec), common.format);
    return exit_ok;
}

int run_poles(int r, int nu, double qv, double smin, double smax, const std::string& format) {
    const QParam q(qv);
    TruncationPolicy pol;
    if (format == "csv") std::cout << io::csv_row({"s", "pole", "what"});
    int found = 0;
    for (int ss = static_cast<int>(std::ceil(smin)); ss <= static_cast<int>(std::floor(smax)); ++ss) {
        bool hit = false;
        std::string what = "regular";
        try {
            qzeta::qzeta_nu(r, q, Complex(static_cast<double>(ss)), 1.0, nu, Weights::ones(r), pol);
        } catch (const PoleError& e) {
            hit = true;
            what = e.what();
            ++found;
        }
        if (format == "csv")
            std::cout << io::csv_row({std::to_string(ss), hit ? "1" : "0", what});
        else if (format == "json") {
            io::JsonLine line;
            line.num("s", ss).num("pole", hit ? 1 : 0).str("what", what);
            std::cout << line.done() << "\n";
        } else if (hit)
            std::cout << "pole at s = " << ss << ": " << what << "\n";
    }
    if (format == "text")
        std::cout << "expected real-axis poles: s = 1.." << (r + nu - 1) << " (" << found
                  << " found in scan range)\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-analogues of the Barnes multiple zeta functions and the associated q-gamma function"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--format", common.format, "output format: text, csv, json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--tol", common.tol, "truncation tolerance");
    app.add_option("--max-terms", common.max_terms, "series term cap (or env QBARNES_MAX_TERMS)");

    EvalArgs ev;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one function at a point");
    eval->add_option("function", ev.function,
                     "hurwitz | barnes | qzeta | qzeta-nu | qgamma | gamma-q | special-value")
        ->required();
    eval->add_option("--r", ev.r, "depth r >= 1")->check(CLI::PositiveNumber);
    eval->add_option("--nu", ev.nu, "shift nu >= 1")->check(CLI::PositiveNumber);
    eval->add_option("--m", ev.m, "special-value order m >= 0");
    eval->add_option("--q", ev.q, "q in (0,1)")->check(CLI::Range(1e-12, 1.0));
    eval->add_option("--s", ev.s, "complex s, e.g. 2 or 1.5+0.5i");
    eval->add_option("--t", ev.t, "complex t");
    eval->add_option("--z", ev.z, "complex z");
    eval->add_option("--omega", ev.omega, "weights, comma list of positive reals");
    eval->add_option("--route", ev.route, "qzeta route: auto | direct | qbinom | reduce | em");

    verify::Options vopt;
    std::string suite = "all";
    CLI::App* ver = app.add_subcommand("verify", "run named identity suites");
    ver->add_option("--suite", suite, "suite name or 'all'");
    ver->add_option("--seed", vopt.seed, "seed for randomized grids");
    ver->add_option("--q", vopt.q, "q used by single-q suites")->check(CLI::Range(1e-12, 1.0));
    ver->add_option("--N", vopt.N, "order for gauss-legendre");
    ver->add_flag("--quick", vopt.quick, "reduced ranges");
    ver->add_flag("--list", "list suite names");

    SweepArgs sw;
    CLI::App* sweep = app.add_subcommand("sweep", "q->1 limit sweeps and D-term tables");
    sweep->add_option("--r", sw.r)->check(CLI::PositiveNumber);
    int nu_val = 0;
    sweep->add_option("--nu", nu_val, "use the rule t = s - nu");
    sweep->add_option("--phi", sw.phi, "affine t-rule, e.g. \"s-0.5\" or \"2s-1\"");
    sweep->add_option("--s", sw.s);
    sweep->add_option("--t", sw.t, "t for --dterms (default s-1)");
    sweep->add_option("--z", sw.z);
    sweep->add_option("--omega", sw.omega);
    sweep->add_option("--kmin", sw.q_lo_k, "grid starts at q = 1-2^-kmin");
    sweep->add_option("--kmax", sw.q_hi_k, "grid ends at q = 1-2^-kmax");
    sweep->add_flag("--dterms", sw.dterms, "tabulate D-term limits instead");
    sweep->add_flag("--conjecture", sw.conjecture, "general-weight evidence table");
    sweep->add_option("--N", sw.N);
    sweep->add_option("--M", sw.M);

    int pr = 2, pnu = 1;
    double pq = 0.5, psmin = -3, psmax = 8;
    CLI::App* poles = app.add_subcommand("poles", "scan the real s-axis for poles of qzeta-nu");
    poles->add_option("--r", pr)->check(CLI::PositiveNumber);
    poles->add_option("--nu", pnu)->check(CLI::PositiveNumber);
    poles->add_option("--q", pq)->check(CLI::Range(1e-12, 1.0));
    poles->add_option("--smin", psmin);
    poles->add_option("--smax", psmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return exit_parse;
    }

    try {
        if (eval->parsed()) return run_eval(ev, common);
        if (ver->parsed()) {
            if (ver->count("--list")) {
                for (const std::string& n : verify::suite_names()) std::cout << n << "\n";
                return exit_ok;
            }
            std::vector<verify::SuiteResult> results;
            if (suite == "all")
                results = verify::run_all(vopt);
            else
                results.push_back(verify::run_suite(suite, vopt));
            bool all_pass = true;
            for (const verify::SuiteResult& r : results) {
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
                if (!r.pass) std::cout << "  [" << r.detail << "]";
                std::cout << "\n";
                all_pass = all_pass && r.pass;
            }
            return all_pass ? exit_ok : exit_fail;
        }
        if (sweep->parsed()) {
            if (sweep->count("--nu")) sw.nu = nu_val;
            return run_sweep(sw, common);
        }
        if (poles->parsed()) return run_poles(pr, pnu, pq, psmin, psmax, common.format);
    } catch (const PoleError& e) {
        std::cerr << "pole: " << e.what() << " (location " << io::format_complex(e.location)
                  << " in " << e.var << ")\n";
        return exit_pole;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return exit_domain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    }
    return exit_ok;
}
