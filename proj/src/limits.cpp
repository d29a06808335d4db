#include "qbarnes/limits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qbarnes/classical.hpp"
#include "qbarnes/grid.hpp"
#include "qbarnes/qnum.hpp"
#include "qbarnes/qzeta.hpp"

namespace qbarnes::limits {

std::string SweepRule::str() const {
    std::ostringstream os;
    if (is_shift) {
        os << "s-" << nu;
    } else {
        os << a << "*s" << (b < 0 ? "" : "+") << b;
    }
    return os.str();
}

std::vector<double> SweepSpec::default_grid() {
    std::vector<double> g;
    for (int k = 3; k <= 13; ++k) g.push_back(1.0 - std::pow(2.0, -k));
    return g;
}

const char* sweep_class_name(SweepClass c) {
    switch (c) {
        case SweepClass::converging: return "converging";
        case SweepClass::diverging: return "diverging";
        default: return "inconclusive";
    }
}

namespace {
Complex classical_target(int r, Complex s, Complex z, const Weights& omega) {
    if (omega.all_ones()) {
        if (r == 1) {
            classical::EMConfig cfg;
            cfg.M = std::max(8, static_cast<int>(std::ceil(-s.real())) + 4);
            return classical::hurwitz_em(s, z, cfg).value;
        }
        return classical::barnes_zeta(r, s, z).value;
    }
    if (r == 1) {
        classical::EMConfig cfg;
        cfg.M = std::max(8, static_cast<int>(std::ceil(-s.real())) + 4);
        return classical::barnes_r1_scaled(s, z, omega[0], cfg).value;
    }
    throw DomainError("limit_sweep: no classical target for r >= 2 with general weights "
                      "(use conjecture_probe)");
}

// series length needed for the binomial continuation at this q
TruncationPolicy point_policy(const TruncationPolicy& base, double q, Complex s, Complex z) {
    TruncationPolicy p = base;
    p.tol = std::max(base.tol, 1e-11);
    const double need =
        (30.0 + 2.0 * std::abs(s)) / std::max(1e-9, std::min(z.real(), 1.0) * (1.0 - q));
    p.max_terms = std::min<std::size_t>(5000000, std::max<std::size_t>(base.max_terms,
                                                                       static_cast<std::size_t>(need)));
    return p;
}

// does the rule's t sit on the real pole lattice t in {r-1, r-2, ...} - Z_{>=0}?
bool hits_real_lattice(int r, Complex t) {
    if (std::abs(t.imag()) > 1e-8) return false;
    const double tr = std::round(t.real());
    return std::abs(t.real() - tr) < 1e-8 && tr <= static_cast<double>(r - 1) + 0.5;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double d = n * sxx - sx * sx;
    return d == 0.0 ? 0.0 : (n * sxy - sx * sy) / d;
}
} // namespace

SweepReport limit_sweep(const SweepSpec& spec) {
    SweepReport rep;
    Complex s = spec.s;

    // a necessity rule can land exactly on the pole lattice (e.g. t = s - 0.5
    // at s = 0.5 gives t = 0); probe the rule at the nearest regular offset
    if (!spec.rule.is_shift && hits_real_lattice(spec.r, spec.rule.t_of(s))) {
        bool moved = false;
        for (double eta : {1.0 / 64, -1.0 / 64, 1.0 / 32, -1.0 / 32, 1.0 / 16}) {
            if (!hits_real_lattice(spec.r, spec.rule.t_of(s + eta))) {
                s += eta;
                moved = true;
                rep.note = "rule hits the t pole lattice at the requested s; probed at s + " +
                           std::to_string(eta);
                break;
            }
        }
        if (!moved)
            throw DomainError("limit_sweep: could not move the probe off the pole lattice");
    }
    rep.probe_s = s;
    rep.target = classical_target(spec.r, s, spec.z, spec.omega);

    const std::size_t n = spec.q_grid.size();
    rep.rows = par::map_indexed<SweepPoint>(n, [&](std::size_t i) {
        SweepPoint pt;
        pt.q = spec.q_grid[i];
        pt.target = rep.target;
        try {
            const QParam q(pt.q);
            const EvalResult v = qzeta::qzeta_binomial_ac(
                spec.r, q, s, spec.rule.t_of(s), spec.z, spec.omega,
                point_policy(spec.policy, pt.q, s, spec.z));
            pt.value = v.value;
            pt.gap = std::abs(v.value - rep.target);
        } catch (const Error& e) {
            pt.pole = true;
            pt.note = e.what();
        }
        return pt;
    });

    std::vector<double> xs, ys;
    for (const SweepPoint& pt : rep.rows) {
        if (pt.pole || pt.gap <= 0.0) continue;
        xs.push_back(-std::log(1.0 - pt.q));
        ys.push_back(std::log(pt.gap));
    }
    if (xs.size() >= 4) {
        const std::size_t k = std::min<std::size_t>(5, xs.size());
        rep.fitted_slope = fit_slope({xs.end() - k, xs.end()}, {ys.end() - k, ys.end()});
        const double g1 = std::exp(ys[ys.size() - 3]), g2 = std::exp(ys[ys.size() - 2]),
                     g3 = std::exp(ys[ys.size() - 1]);
        if (g1 > g2 && g2 > g3 && g3 < spec.conv_gap)
            rep.classification = SweepClass::converging;
        else if (g1 < g2 && g2 < g3 && rep.fitted_slope > 0.05)
            rep.classification = SweepClass::diverging;
    }
    return rep;
}

DtermReport dterm_limit_check(Complex s, Complex t, Complex z, int N, int M,
                              const std::vector<double>& q_grid) {
    if (!(t.real() > 0.0))
        throw DomainError("dterm_limit_check: needs Re(t) > 0 for the residual's direct series");
    DtermReport rep;

    // classical limits of the D-terms
    auto bpoch = [&](int k) {
        Complex p = 1.0;
        for (int i = 0; i < k; ++i) p *= (s + static_cast<double>(i));
        return p;
    };
    auto dfact = [](int k) {
        double f = 1.0;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    for (int k = 1; k <= N; ++k)
        rep.d1_target += to_double(qnum::bernoulli_number(k + 1)) / dfact(k + 1) * bpoch(k) *
                         std::exp(-(s + static_cast<double>(k)) * std::log(z));
    for (int l = N + 1; l <= M; ++l)
        rep.d2_target += to_double(qnum::bernoulli_number(l + 1)) / dfact(l + 1) * bpoch(l) *
                         std::exp(-(s + static_cast<double>(l)) * std::log(z));
    rep.d3_target = -bpoch(M + 1) / dfact(M + 1) * classical::em_tail_integral(s, z, M, 1e-13);

    rep.rows = par::map_indexed<DtermRow>(q_grid.size(), [&](std::size_t i) {
        DtermRow row;
        row.q = q_grid[i];
        const QParam q(row.q);
        qzeta::ContinuationParams cp;
        cp.N = N;
        cp.M = M;
        cp.n_max = 60;
        const qzeta::EmParts parts = qzeta::qzeta1_em_parts(q, s, t, z, cp);
        TruncationPolicy pol;
        pol.max_terms = 5000000;
        const EvalResult direct = qzeta::qzeta_direct(1, q, s, t, z, Weights::ones(1), pol);
        row.d1 = parts.d1;
        row.d2 = parts.d2;
        row.d3_resid = direct.value - parts.lead - parts.half - parts.d1 - parts.d2;
        row.d1_gap = std::abs(row.d1 - rep.d1_target);
        row.d2_gap = std::abs(row.d2 - rep.d2_target);
        row.d3_gap = std::abs(row.d3_resid - rep.d3_target);
        return row;
    });

    auto shrinking = [&](auto get) {
        for (std::size_t i = rep.rows.size() >= 3 ? rep.rows.size() - 3 : 0; i + 1 < rep.rows.size(); ++i)
            if (get(rep.rows[i]) <= get(rep.rows[i + 1])) return false;
        return rep.rows.size() >= 2;
    };
    rep.d1_shrinking = shrinking([](const DtermRow& r) { return r.d1_gap; });
    rep.d2_shrinking = shrinking([](const DtermRow& r) { return r.d2_gap; });
    rep.d3_shrinking = shrinking([](const DtermRow& r) { return r.d3_gap; });
    return rep;
}

ConjectureReport conjecture_probe(int r, const Weights& omega, int nu, Complex s, Complex z,
                                  const std::vector<double>& q_grid) {
    if (r < 2)
        throw DomainError("conjecture_probe: the open case is r >= 2 with non-unit weights");
    ConjectureReport rep;
    rep.has_target = s.real() > static_cast<double>(r);
    if (rep.has_target) {
        // brute-force lattice target; box size from the 1e-6 tail target
        const double p = s.real() - r;
        long N = static_cast<long>(std::ceil(std::pow(1e-6 * p, -1.0 / p))) + 8;
        N = std::min<long>(N, r >= 3 ? 400 : 4000);
        const EvalResult tgt = par::lattice_zeta(omega, z, s, N);
        rep.target = tgt.value;
        rep.target_err = tgt.abs_error;
        rep.mode_note = "gap against brute-force lattice sum";
    } else {
        rep.mode_note = "q-side Cauchy diagnostic only (no classical target in this artifact)";
    }

    std::vector<Complex> vals = par::map_indexed<Complex>(q_grid.size(), [&](std::size_t i) {
        const QParam q(q_grid[i]);
        TruncationPolicy pol;
        pol.tol = 1e-10;
        const double need = (30.0 + 2.0 * std::abs(s)) /
                            std::max(1e-9, std::min(z.real(), 1.0) * (1.0 - q_grid[i]));
        pol.max_terms = std::min<std::size_t>(5000000, static_cast<std::size_t>(need));
        return qzeta::qzeta_nu(r, q, s, z, nu, omega, pol).value;
    });
    for (std::size_t i = 0; i < vals.size(); ++i) {
        ConjectureRow row;
        row.q = q_grid[i];
        row.value = vals[i];
        row.gap = rep.has_target ? std::abs(vals[i] - rep.target)
                                 : (i == 0 ? 0.0 : std::abs(vals[i] - vals[i - 1]));
        rep.rows.push_back(row);
    }
    return rep;
}

std::vector<ConjectureReport> conjecture_probe(int r, const Weights& omega, int nu,
                                               const std::vector<Complex>& s_list, Complex z,
                                               const std::vector<double>& q_grid) {
    std::vector<ConjectureReport> out;
    out.reserve(s_list.size());
    for (Complex s : s_list) out.push_back(conjecture_probe(r, omega, nu, s, z, q_grid));
    return out;
}

} // namespace qbarnes::limits
