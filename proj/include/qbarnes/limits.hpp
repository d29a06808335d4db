#ifndef QBARNES_LIMITS_HPP
#define QBARNES_LIMITS_HPP

#include <string>
#include <vector>

#include "qbarnes/types.hpp"

namespace qbarnes::limits {

// t-rule for a sweep: the true-analogue shift t = s - nu, or an arbitrary
// affine rule t = a s + b for necessity probes.
struct SweepRule {
    bool is_shift = true;
    int nu = 1;
    double a = 1.0, b = -1.0;

    Complex t_of(Complex s) const {
        return is_shift ? s - static_cast<double>(nu) : a * s + b;
    }
    static SweepRule shift(int nu) { return {true, nu, 1.0, -static_cast<double>(nu)}; }
    static SweepRule affine(double a, double b) { return {false, 0, a, b}; }
    std::string str() const;
};

struct SweepSpec {
    std::vector<double> q_grid = default_grid();
    int r = 1;
    Complex s{};
    Complex z{1.0};
    Weights omega = Weights::ones(1);
    SweepRule rule = SweepRule::shift(1);
    double conv_gap = 1e-2; // final-gap gate for "converging"
    TruncationPolicy policy;

    static std::vector<double> default_grid(); // 1 - 2^{-k}, k = 3..13
};

enum class SweepClass { converging, diverging, inconclusive };
const char* sweep_class_name(SweepClass c);

struct SweepPoint {
    double q = 0.0;
    Complex value{};
    Complex target{};
    double gap = 0.0;
    bool pole = false;
    std::string note;
};

struct SweepReport {
    std::vector<SweepPoint> rows;
    SweepClass classification = SweepClass::inconclusive;
    double fitted_slope = 0.0; // slope of log gap against -log(1-q); positive = growing
    Complex target{};
    Complex probe_s{};         // s actually probed (offset when the rule hits the pole lattice)
    std::string note;
};

// Evaluates zeta_{q,r}(s, rule(s), z; omega) against the classical target
// across the q-grid and classifies the trend. Classical target requires
// omega = 1 or r = 1.
SweepReport limit_sweep(const SweepSpec& spec);

struct DtermRow {
    double q = 0.0;
    Complex d1{}, d2{}, d3_resid{};
    double d1_gap = 0.0, d2_gap = 0.0, d3_gap = 0.0;
};

struct DtermReport {
    Complex d1_target{}, d2_target{}, d3_target{};
    std::vector<DtermRow> rows;
    bool d1_shrinking = false, d2_shrinking = false, d3_shrinking = false;
};

// Tabulates D1, D2 against their classical limits and D3 via the residual
// zeta_q - (all other terms) against the Euler-Maclaurin tail integral.
// Needs Re(t) > 0 so the residual's direct series converges.
DtermReport dterm_limit_check(Complex s, Complex t, Complex z, int N, int M,
                              const std::vector<double>& q_grid);

struct ConjectureRow {
    double q = 0.0;
    Complex value{};
    double gap = 0.0; // |value - target|, or |value - previous| in Cauchy mode
};

struct ConjectureReport {
    bool has_target = false;
    Complex target{};
    double target_err = 0.0;
    std::vector<ConjectureRow> rows;
    std::string mode_note;
};

// Evidence table for the general-weight conjecture: against the brute-force
// lattice sum when Re(s) > r, otherwise a self-convergence (Cauchy)
// diagnostic of the q-side only. Emits evidence, never a verdict.
ConjectureReport conjecture_probe(int r, const Weights& omega, int nu, Complex s, Complex z,
                                  const std::vector<double>& q_grid);

std::vector<ConjectureReport> conjecture_probe(int r, const Weights& omega, int nu,
                                               const std::vector<Complex>& s_list, Complex z,
                                               const std::vector<double>& q_grid);

} // namespace qbarnes::limits

#endif
