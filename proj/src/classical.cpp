#include "qbarnes/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qbarnes/qnum.hpp"
#include "qbarnes/quadrature.hpp"
#include "qbarnes/special.hpp"

namespace qbarnes::classical {

using special::cpow;

namespace {
bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// sup_x |B~_m(x)|  <=  2 m! zeta(m) / (2 pi)^m, zeta(m) < 1.65 for m >= 2
double periodic_bernoulli_bound(int m) {
    return 2.0 * factorial(m) * 1.65 / std::pow(2.0 * std::numbers::pi, m);
}
} // namespace

EvalResult hurwitz_direct(Complex s, Complex z, const TruncationPolicy& policy) {
    if (!(s.real() > 1.0))
        throw DomainError("hurwitz_direct: needs Re(s) > 1; use hurwitz_em for the continuation");
    if (is_nonpositive_integer(z))
        throw DomainError("hurwitz_direct: z must avoid the nonpositive integers");

    // error of sum + integral tail + half endpoint is ~ |s| (N+z)^{-s-1} / 12
    const double want = std::pow(std::abs(s) / (12.0 * policy.tol), 1.0 / (s.real() + 1.0));
    const std::size_t N =
        std::min<std::size_t>(policy.max_terms, static_cast<std::size_t>(std::max(16.0, std::ceil(want))));

    Complex sum = 0.0;
    for (std::size_t n = 0; n < N; ++n)
        sum += cpow(static_cast<double>(n) + z, -s);
    const Complex Nz = static_cast<double>(N) + z;
    sum += cpow(Nz, 1.0 - s) / (s - 1.0) + 0.5 * cpow(Nz, -s);

    const double err = std::abs(s) * std::abs(cpow(Nz, -s - 1.0)) / 12.0 +
                       static_cast<double>(N) * 1e-16 * std::abs(sum);
    return {sum, err, Method::direct_series, N};
}

Complex em_tail_integral(Complex s, Complex z, int M, double tol, double cutoff) {
    const double bmax = periodic_bernoulli_bound(M + 1);
    const double decay = s.real() + M; // (x+z)^{-s-M-1} tail integrates to (X+Re z)^{-s-M}/(s+M)
    Complex acc = 0.0;
    const double xcap = cutoff > 0.0 ? cutoff : 1e6;
    for (double a = 0.0; a < xcap; a += 1.0) {
        acc += quad::panel(
            [&](double x) {
                return qnum::bernoulli_poly(M + 1, x - a) *
                       cpow(x + z, -s - static_cast<double>(M + 1));
            },
            a, a + 1.0);
        const double rest = bmax * std::pow(a + 1.0 + z.real(), -decay) / decay;
        if (rest < tol) break;
    }
    return acc;
}

EvalResult hurwitz_em(Complex s, Complex z, const EMConfig& cfg) {
    if (!(z.real() > 0.0))
        throw DomainError("hurwitz_em: needs Re(z) > 0 (shift with the ladder first)");
    if (cfg.M < 0 || !(s.real() > -cfg.M))
        throw DomainError("hurwitz_em: continuation requires Re(s) > -M");
    if (std::abs(s - 1.0) < 1e-8)
        throw PoleError("hurwitz_em: simple pole at s = 1 (residue 1)", Complex(1.0), "s");

    const int M = cfg.M;
    Complex val = cpow(z, 1.0 - s) / (s - 1.0) + 0.5 * cpow(z, -s);
    Complex poch = 1.0; // (s)_k
    for (int k = 1; k <= M; ++k) {
        poch *= (s + static_cast<double>(k - 1));
        val += to_double(qnum::bernoulli_number(k + 1)) / factorial(k + 1) * poch *
               cpow(z, -s - static_cast<double>(k));
    }
    poch *= (s + static_cast<double>(M)); // (s)_{M+1}
    val -= poch / factorial(M + 1) * em_tail_integral(s, z, M, cfg.policy.quad_tol, cfg.quad_cutoff);

    const double err = cfg.policy.quad_tol * (1.0 + std::abs(poch) / factorial(M + 1)) +
                       1e-15 * std::abs(val);
    return {val, err, Method::euler_maclaurin, static_cast<std::size_t>(M)};
}

BarnesPolys::BarnesPolys(int r) : r_(r) {
    if (r < 1) throw DomainError("barnes_polys: needs r >= 1");
    Rational rfact(1);
    for (int i = 2; i <= r - 1; ++i) rfact *= i;
    polys_.reserve(static_cast<std::size_t>(r));
    for (int l = 0; l < r; ++l) {
        // coefficient of z^i: binom(l+i, l) s(r, l+i+1) (-1)^i / (r-1)!
        std::vector<Rational> c(static_cast<std::size_t>(r - l), Rational(0));
        for (int i = 0; i <= r - 1 - l; ++i) {
            Int binom = 1;
            for (int k = 1; k <= i; ++k) binom = binom * (l + k) / k; // binom(l+i, i)
            Rational coeff = Rational(binom * qnum::stirling_first(r, l + i + 1)) / rfact;
            c[static_cast<std::size_t>(i)] = (i % 2 == 0) ? coeff : -coeff;
        }
        polys_.emplace_back(std::move(c));
    }
}

const RationalPoly& BarnesPolys::poly(int l) const {
    if (l < 0 || l >= r_) throw DomainError("BarnesPolys: level out of range");
    return polys_[static_cast<std::size_t>(l)];
}

Complex BarnesPolys::eval(int l, Complex z) const { return poly(l).eval(z); }

std::vector<Complex> BarnesPolys::eval_all(Complex z) const {
    std::vector<Complex> v(polys_.size());
    for (std::size_t l = 0; l < polys_.size(); ++l) v[l] = polys_[l].eval(z);
    return v;
}

namespace {
EvalResult barnes_positive_z(int r, Complex s, Complex z, const std::vector<EMConfig>& cfgs) {
    const BarnesPolys polys(r);
    Complex val = 0.0;
    double err = 0.0;
    for (int l = 0; l < r; ++l) {
        const EMConfig& cfg = cfgs[static_cast<std::size_t>(std::min<int>(l, static_cast<int>(cfgs.size()) - 1))];
        EvalResult part;
        try {
            part = hurwitz_em(s - static_cast<double>(l), z, cfg);
        } catch (const PoleError&) {
            throw PoleError("barnes_zeta: pole at s = " + std::to_string(l + 1) +
                                " produced by level l = " + std::to_string(l),
                            Complex(static_cast<double>(l + 1)), "s");
        }
        const Complex p = polys.eval(l, z);
        val += p * part.value;
        err += std::abs(p) * part.abs_error;
    }
    return {val, err, Method::reduction, static_cast<std::size_t>(r)};
}

EvalResult barnes_ladder(int r, Complex s, Complex z, const std::vector<EMConfig>& cfgs) {
    if (r == 0) {
        if (std::abs(z) < 1e-12)
            throw SingularTermError("barnes_zeta: ladder reached z = 0 (z in -Z_{<=0})");
        return {cpow(z, -s), 1e-15 * std::abs(cpow(z, -s)), Method::ladder, 1};
    }
    if (z.real() > 0.0) return barnes_positive_z(r, s, z, cfgs);
    // zeta_r(s,z) = zeta_r(s,z+1) + zeta_{r-1}(s,z)
    const EvalResult up = barnes_ladder(r, s, z + 1.0, cfgs);
    const EvalResult down = barnes_ladder(r - 1, s, z, cfgs);
    return {up.value + down.value, up.abs_error + down.abs_error, Method::ladder,
            up.terms + down.terms};
}
} // namespace

EvalResult barnes_zeta(int r, Complex s, Complex z, std::vector<EMConfig> cfgs) {
    if (r < 1) throw DomainError("barnes_zeta: needs r >= 1");
    if (cfgs.empty()) {
        // each level l needs Re(s-l) > -M_l
        for (int l = 0; l < r; ++l) {
            EMConfig cfg;
            cfg.M = std::max(8, static_cast<int>(std::ceil(static_cast<double>(l) - s.real())) + 4);
            cfgs.push_back(cfg);
        }
    }
    return barnes_ladder(r, s, z, cfgs);
}

EvalResult barnes_r1_scaled(Complex s, Complex z, double omega, const EMConfig& cfg) {
    if (!(omega > 0.0)) throw DomainError("barnes_r1_scaled: needs omega > 0");
    EvalResult base = hurwitz_em(s, z / omega, cfg);
    const Complex scale = cpow(Complex(omega), -s);
    return {scale * base.value, std::abs(scale) * base.abs_error, Method::scaled, base.terms};
}

} // namespace qbarnes::classical
