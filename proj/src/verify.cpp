#include "qbarnes/verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "qbarnes/classical.hpp"
#include "qbarnes/grid.hpp"
#include "qbarnes/limits.hpp"
#include "qbarnes/qgamma.hpp"
#include "qbarnes/qnum.hpp"
#include "qbarnes/qzeta.hpp"
#include "qbarnes/special.hpp"

namespace qbarnes::verify {

namespace {

struct Check {
    bool pass = true;
    std::string detail = "ok";
    void fail(const std::string& counterexample) {
        if (pass) {
            pass = false;
            detail = counterexample;
        }
    }
    template <typename... Args>
    void require(bool cond, Args&&... parts) {
        if (!cond && pass) {
            std::ostringstream os;
            (os << ... << parts);
            fail(os.str());
        }
    }
};

std::string cstr(Complex v) {
    std::ostringstream os;
    os << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
    return os.str();
}

// ---- exact layer ----

Check q_binom1(const Options& opt) {
    Check c;
    const int cap = opt.quick ? 8 : 15;
    for (int l = 0; l <= cap && c.pass; ++l)
        for (int m = 1; m <= cap && c.pass; ++m)
            c.require(qnum::q_vandermonde_sum(l, m) == qnum::q_binomial_exact(m + l, m),
                      "q-binom1 fails at l=", l, " m=", m);
    return c;
}

Check q_binom2(const Options& opt) {
    Check c;
    const int ncap = opt.quick ? 8 : 12, rcap = opt.quick ? 4 : 5;
    for (int n = 0; n <= ncap && c.pass; ++n)
        for (int r = 1; r <= rcap && c.pass; ++r)
            c.require(qnum::q_composition_sum(n, r) ==
                          qnum::q_binomial_exact(n + r - 1, r - 1).shifted(static_cast<std::size_t>(n)),
                      "q-binom2 fails at n=", n, " r=", r);
    return c;
}

Check pascal(const Options& opt) {
    Check c;
    const int cap = opt.quick ? 16 : 30;
    for (int m = 1; m <= cap && c.pass; ++m)
        for (int n = 0; n <= m && c.pass; ++n) {
            const RationalPoly p = qnum::q_binomial_exact(m, n);
            c.require(p.is_palindromic(), "not palindromic at m=", m, " n=", n);
            for (const Rational& co : p.coeffs())
                c.require(co >= 0 && boost::multiprecision::denominator(co) == 1,
                          "coefficient not a nonnegative integer at m=", m, " n=", n);
            if (n >= 1 && n <= m - 1)
                c.require(p == qnum::q_binomial_exact(m - 1, n - 1) +
                                   qnum::q_binomial_exact(m - 1, n).shifted(static_cast<std::size_t>(n)),
                          "Pascal recurrence fails at m=", m, " n=", n);
        }
    return c;
}

Check inversion(const Options&) {
    Check c;
    // [n+r-1, r-1]_{1/q} = q^{-n(r-1)} [n+r-1, r-1]_q at sample rationals
    for (const Rational& q : {Rational(1, 2), Rational(1, 3), Rational(2, 3)})
        for (int n = 0; n <= 6 && c.pass; ++n)
            for (int r = 1; r <= 4 && c.pass; ++r) {
                const RationalPoly b = qnum::q_binomial_exact(n + r - 1, r - 1);
                const Rational lhs = b.eval(Rational(1) / q);
                Rational scale = 1;
                for (int i = 0; i < n * (r - 1); ++i) scale /= q;
                c.require(lhs == scale * b.eval(q), "inversion fails at n=", n, " r=", r);
            }
    return c;
}

Check stirling(const Options&) {
    Check c;
    for (int l = 0; l <= 10 && c.pass; ++l) {
        Int rowsum = 0;
        for (int j = 0; j <= l; ++j) rowsum += qnum::stirling_first(l, j);
        Int lfact = 1;
        for (int i = 2; i <= l; ++i) lfact *= i;
        c.require(rowsum == lfact, "row sum != l! at l=", l);
        for (int x = -5; x <= 5 && c.pass; ++x) {
            Int expect = 1;
            for (int i = 0; i < l; ++i) expect *= Int(x + i);
            Int got = 0;
            Int xp = 1;
            for (int j = 0; j <= l; ++j) {
                got += qnum::stirling_first(l, j) * xp;
                xp *= x;
            }
            c.require(got == expect, "(x)_l expansion fails at l=", l, " x=", x);
        }
    }
    return c;
}

Check bernoulli_fourier(const Options&) {
    Check c;
    c.require(std::abs(qnum::periodic_bernoulli_fourier(2, 0.0, 10000) - 1.0 / 6.0) < 1e-4,
              "B2(0) via Fourier off");
    c.require(std::abs(qnum::periodic_bernoulli_fourier(3, 0.5, 1000)) < 1e-6, "B3(1/2) != 0");
    c.require(std::abs(qnum::periodic_bernoulli_fourier(4, 0.3, 1000) -
                       qnum::periodic_bernoulli(4, 0.3)) < 1e-8,
              "B4(0.3) Fourier vs polynomial");
    return c;
}

// ---- special ----

Check beta_suite(const Options& opt) {
    Check c;
    TruncationPolicy pol;
    using namespace special;
    // w -> 1 limit toward B(a,b)
    const Complex a{1.5}, b{2.5};
    const Complex target = special::beta(a, b);
    double prev = 1e300;
    for (double w : {0.9, 0.99, 0.999}) {
        const double gap = std::abs(incomplete_beta_direct({Complex(w), a, b}, pol).value - target);
        c.require(gap < prev, "b_w -> B not monotone at w=", w);
        prev = gap;
    }
    c.require(prev < 1e-6, "b_w(0.999) too far from B: ", prev);
    // N' consistency on random draws
    std::mt19937 rng(opt.seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const int reps = opt.quick ? 12 : 50;
    for (int i = 0; i < reps && c.pass; ++i) {
        const Complex w{0.1 + 0.8 * U(rng)};
        const Complex al{0.2 + 2.8 * U(rng), U(rng) - 0.5};
        const Complex be{ -1.0 + 4.0 * U(rng), U(rng) - 0.5};
        Complex vals[3];
        int k = 0;
        for (int np : {2, 3, 4})
            vals[k++] = incomplete_beta_continued({w, al, be}, np, pol).value;
        c.require(std::abs(vals[0] - vals[1]) < 1e-9 && std::abs(vals[1] - vals[2]) < 1e-9,
                  "N' inconsistency at w=", cstr(w), " a=", cstr(al), " b=", cstr(be));
    }
    // Cauchy-Riemann probe in alpha
    const double h = 1e-4;
    auto f = [&](Complex al2) { return incomplete_beta_direct({Complex(0.4), al2, Complex(1.7)}, pol).value; };
    const Complex dre = (f(Complex(1.3 + h, 0.2)) - f(Complex(1.3 - h, 0.2))) / (2 * h);
    const Complex dim = (f(Complex(1.3, 0.2 + h)) - f(Complex(1.3, 0.2 - h))) / (2 * h);
    c.require(std::abs(dre - dim / Complex(0, 1)) < 1e-6, "holomorphy probe failed");
    return c;
}

// ---- classical ----

Check hurwitz_suite(const Options&) {
    Check c;
    TruncationPolicy pol;
    classical::EMConfig cfg;
    const Complex direct = classical::hurwitz_direct(2.0, 1.0, pol).value;
    const Complex em = classical::hurwitz_em(2.0, 1.0, cfg).value;
    c.require(std::abs(direct - em) < 1e-10, "EM/direct overlap at s=2,z=1");
    classical::EMConfig deep;
    deep.M = 6;
    c.require(std::abs(classical::hurwitz_em(-1.0, 1.0, deep).value - (-1.0 / 12.0)) < 1e-9,
              "zeta(-1,1) != -1/12");
    for (double z : {0.3, 0.7, 1.4})
        c.require(std::abs(classical::hurwitz_em(0.0, z, deep).value - (0.5 - z)) < 1e-10,
                  "zeta(0,z) != 1/2 - z at z=", z);
    // depth independence
    classical::EMConfig m1, m2;
    m1.M = 5;
    m2.M = 7;
    const Complex s{0.25, 1.0};
    c.require(std::abs(classical::hurwitz_em(s, 1.3, m1).value -
                       classical::hurwitz_em(s, 1.3, m2).value) < 1e-9,
              "EM depth dependence at s=", cstr(s));
    return c;
}

Check barnes_ladder(const Options&) {
    Check c;
    for (int r = 1; r <= 3 && c.pass; ++r)
        for (const Complex s : {Complex(4.5), Complex(-1.5), Complex(2.5, 1.0)})
            for (const Complex z : {Complex(0.8), Complex(1.5, 0.5)}) {
                const Complex lhs = classical::barnes_zeta(r, s, z).value;
                const Complex a = classical::barnes_zeta(r, s, z + 1.0).value;
                const Complex b = r == 1 ? special::cpow(z, -s)
                                         : classical::barnes_zeta(r - 1, s, z).value;
                c.require(std::abs(lhs - a - b) < 1e-10, "ladder residual r=", r, " s=", cstr(s),
                          " z=", cstr(z));
            }
    return c;
}

Check barnes_collapse(const Options&) {
    Check c;
    const Complex s{4.0}, z{1.3};
    const Complex brute = par::lattice_zeta(Weights::ones(2), z, s, 3000).value;
    const Complex viaem = classical::barnes_zeta(2, s, z).value;
    c.require(std::abs(brute - viaem) < 1e-6, "collapse identity: brute=", cstr(brute),
              " reduction=", cstr(viaem));
    return c;
}

// ---- qzeta ----

Check qbarnes_polys_suite(const Options& opt) {
    Check c;
    const QParam q(opt.q);
    for (int r = 1; r <= 4 && c.pass; ++r) {
        const qzeta::QBarnesPolys polys(r, q);
        for (const Complex z : {Complex(0.7), Complex(1.0, 0.4), Complex(2.2)}) {
            const std::vector<Complex> p = polys.eval_all(z);
            for (int n = 0; n <= 20 && c.pass; ++n) {
                Complex lhs = 0.0;
                for (int l = 0; l < r; ++l)
                    lhs += q.pow(static_cast<double>(n * (r - 1 - l))) * p[static_cast<std::size_t>(l)] *
                           special::cpow(qnum::q_number(q, static_cast<double>(n) + z),
                                         Complex(static_cast<double>(l)));
                const double rhs = qnum::q_binomial_eval(q, n + r - 1, r - 1);
                c.require(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, rhs),
                          "defining identity fails r=", r, " n=", n, " z=", cstr(z));
            }
        }
    }
    return c;
}

Check route_equiv(const Options& opt) {
    Check c;
    std::mt19937 rng(opt.seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const int npoints = opt.quick ? 24 : 100;
    const double qs[3] = {0.3, 0.5, 0.9};

    struct Point {
        int r;
        double q;
        Complex s, t, z;
    };
    std::vector<Point> grid;
    for (int i = 0; i < npoints; ++i) {
        Point p;
        const double pick = U(rng);
        p.r = pick < 0.40 ? 1 : (pick < 0.75 ? 2 : 3);
        p.q = qs[i % 3];
        if (p.r == 3 && p.q > 0.8 && U(rng) < 0.7) p.q = 0.5; // keep the box oracle affordable
        p.s = Complex(-1.0 + 5.0 * U(rng), U(rng) < 0.5 ? 0.0 : (2.0 * U(rng) - 1.0));
        const double off = p.r == 3 ? 1.2 + 1.2 * U(rng) : 0.8 + 1.6 * U(rng);
        p.t = Complex(p.r - 1 + off, U(rng) < 0.5 ? 0.0 : (U(rng) - 0.5));
        p.z = Complex(0.4 + 1.8 * U(rng), U(rng) < 0.3 ? (U(rng) - 0.5) : 0.0);
        grid.push_back(p);
    }

    struct Row {
        bool ok = true;
        std::string msg;
    };
    std::vector<Row> rows = par::map_indexed<Row>(grid.size(), [&](std::size_t i) {
        const Point& p = grid[i];
        Row row;
        try {
            const QParam q(p.q);
            TruncationPolicy pol;
            pol.tol = 1e-11;
            pol.max_terms = 8000000;
            const Complex a = qzeta::qzeta_direct(p.r, q, p.s, p.t, p.z, Weights::ones(p.r), pol).value;
            const Complex b = qzeta::qzeta_qbinom(p.r, q, p.s, p.t, p.z, pol).value;
            const Complex d =
                qzeta::qzeta_reduce(p.r, q, p.s, p.t, p.z, qzeta::depth1_binomial_ac(q, p.z, pol), pol).value;
            const Complex e = qzeta::qzeta_binomial_ac(p.r, q, p.s, p.t, p.z, Weights::ones(p.r), pol).value;
            const double scale = std::max(1.0, std::abs(a));
            const double worst = std::max({std::abs(a - b), std::abs(a - d), std::abs(a - e),
                                           std::abs(b - d), std::abs(b - e), std::abs(d - e)});
            if (worst > 1e-9 * scale) {
                row.ok = false;
                std::ostringstream os;
                os << "route divergence " << worst << " at r=" << p.r << " q=" << p.q
                   << " s=" << cstr(p.s) << " t=" << cstr(p.t) << " z=" << cstr(p.z);
                row.msg = os.str();
            }
        } catch (const Error& err) {
            row.ok = false;
            row.msg = err.what();
        }
        return row;
    });
    for (const Row& r : rows)
        c.require(r.ok, r.msg);
    return c;
}

Check ladder_zqr(const Options& opt) {
    Check c;
    const QParam q(opt.q);
    TruncationPolicy pol;
    // all three terms directly summable: residual vanishes
    for (int r = 1; r <= 3 && c.pass; ++r) {
        const Complex s{2.0, 0.5}, t{static_cast<double>(r) + 1.0}, z{1.2};
        const Complex lhs = qzeta::qzeta_direct(r, q, s, t, z, Weights::ones(r), pol).value;
        const Complex up = qzeta::qzeta_direct(r, q, s, t, z + 1.0, Weights::ones(r), pol).value;
        const Complex down =
            r == 1 ? special::cpow(qnum::q_number(q, z), -s)
                   : qzeta::qzeta_direct(r - 1, q, s, t, z, Weights::ones(r - 1), pol).value;
        const Complex res = lhs - q.pow(t - static_cast<double>(r) + 1.0) * up - down;
        c.require(std::abs(res) < 1e-12 * std::max(1.0, std::abs(lhs)),
                  "ladder residual ", std::abs(res), " at r=", r);
    }
    // one step expanded by hand at Re(z) < 0
    const Complex s{2.0}, t{2.0}, z{-0.5};
    const Complex lhs = qzeta::qzeta_ladder(1, q, s, t, z, pol).value;
    const Complex rhs = q.pow(t) * qzeta::qzeta_binomial_ac(1, q, s, t, Complex(0.5), Weights::ones(1), pol).value +
                        special::cpow(qnum::q_number(q, z), -s);
    c.require(std::abs(lhs - rhs) < 1e-10, "one-step ladder mismatch at z=-0.5");
    return c;
}

Check leibniz(const Options& opt) {
    Check c;
    const Complex s{1.3, 0.4}, t{0.9};
    const qzeta::LeibnizCoeffs lc = qzeta::leibniz_coeffs(s, t, 6);
    c.require(std::abs(lc.b[1][1] - s) < 1e-14, "b^1_1 != s");
    c.require(std::abs(lc.b[1][0] + s) < 1e-14, "b^0_1 != -s");
    for (int k = 0; k <= 6 && c.pass; ++k) {
        Complex poch = 1.0;
        for (int i = 0; i < k; ++i) poch *= (s + static_cast<double>(i));
        c.require(std::abs(lc.c[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] - poch) <
                      1e-12 * std::max(1.0, std::abs(poch)),
                  "c^k_k != (s)_k at k=", k);
    }
    // finite-difference oracle for d^j/dx^j (1-q^{x+z})^{-s}
    const QParam q(opt.q);
    const double lnq = q.log();
    const Complex z{1.1};
    auto g = [&](double x) { return special::cpow(1.0 - q.pow(x + z), -s); };
    const double x0 = 0.7;
    auto nth_diff = [&](int j, double h) {
        // central differences of order j
        Complex acc = 0.0;
        double binom = 1.0;
        for (int i = 0; i <= j; ++i) {
            acc += ((j - i) % 2 == 0 ? 1.0 : -1.0) * binom * g(x0 + (static_cast<double>(i) - j / 2.0) * h);
            binom = binom * (j - i) / (i + 1.0);
        }
        return acc / std::pow(h, j);
    };
    for (int j = 1; j <= 4 && c.pass; ++j) {
        const Complex fd1 = nth_diff(j, 1e-2), fd2 = nth_diff(j, 5e-3);
        const Complex fd = (4.0 * fd2 - fd1) / 3.0;
        Complex formula = 0.0;
        for (int e = 0; e <= j; ++e)
            formula += lc.b[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)] *
                       special::cpow(1.0 - q.pow(x0 + z), -s - static_cast<double>(e));
        formula *= std::pow(lnq, j);
        c.require(std::abs(fd - formula) < 1e-6 * std::max(1.0, std::abs(formula)),
                  "derivative oracle fails at j=", j, " diff=", std::abs(fd - formula));
    }
    return c;
}

Check em_overlap(const Options& opt) {
    Check c;
    const QParam q(opt.q);
    qzeta::ContinuationParams cp;
    TruncationPolicy pol;
    for (const Complex s : {Complex(2.0), Complex(0.0), Complex(1.0, 1.0)})
        for (const Complex t : {Complex(1.5), Complex(2.0)}) {
            const Complex em = qzeta::qzeta1_em(q, s, t, 1.0, cp).value;
            const Complex direct = qzeta::qzeta_direct(1, q, s, t, 1.0, Weights::ones(1), pol).value;
            c.require(std::abs(em - direct) < 1e-6, "EM/direct gap ", std::abs(em - direct),
                      " at s=", cstr(s), " t=", cstr(t));
        }
    // s=0 closed form 1/(1-q^t)
    const Complex t0{2.0};
    const Complex closed = 1.0 / (1.0 - q.pow(t0));
    c.require(std::abs(qzeta::qzeta1_em(q, 0.0, t0, 1.0, cp).value - closed) < 1e-8,
              "s=0 collapse fails");
    return c;
}

Check em_continued(const Options& opt) {
    Check c;
    const QParam q(opt.q);
    qzeta::ContinuationParams cp;
    TruncationPolicy pol;
    for (const Complex t : {Complex(-0.5), Complex(-1.5), Complex(-0.25)})
        for (const Complex s : {Complex(2.0), Complex(-1.5), Complex(1.0, 1.0)}) {
            const Complex em = qzeta::qzeta1_em(q, s, t, 1.0, cp).value;
            const Complex ac = qzeta::qzeta_binomial_ac(1, q, s, t, 1.0, Weights::ones(1), pol).value;
            c.require(std::abs(em - ac) < 1e-6, "EM/AC gap ", std::abs(em - ac), " at s=",
                      cstr(s), " t=", cstr(t));
        }
    return c;
}

Check pole_lattice(const Options& opt) {
    Check c;
    const QParam q(opt.q);
    TruncationPolicy pol;
    // r=2, omega=(1,1): real t poles are exactly Z_{<=1}
    for (int tt = -3; tt <= 4 && c.pass; ++tt) {
        bool hit = false;
        try {
            qzeta::qzeta_binomial_ac(2, q, Complex(2.5), Complex(static_cast<double>(tt)), 1.0,
                                     Weights::ones(2), pol);
        } catch (const PoleError&) {
            hit = true;
        }
        c.require(hit == (tt <= 1), "t-lattice mismatch at t=", tt, " hit=", hit);
    }
    // qzeta_nu real-axis poles are exactly {1, ..., r+nu-1}
    const int r = 2, nu = 2;
    for (int ss = -2; ss <= r + nu + 1 && c.pass; ++ss) {
        bool hit = false;
        try {
            qzeta::qzeta_nu(r, q, Complex(static_cast<double>(ss)), 1.0, nu, Weights::ones(r), pol);
        } catch (const PoleError&) {
            hit = true;
        }
        c.require(hit == (ss >= 1 && ss <= r + nu - 1), "s-pole mismatch at s=", ss);
    }
    return c;
}

Check special_value(const Options&) {
    Check c;
    TruncationPolicy pol;
    struct Case {
        int r, nu, m;
        std::vector<double> w;
        double q;
    };
    for (const Case& k : {Case{1, 1, 0, {1.0}, 0.5}, Case{2, 1, 1, {1.0, 1.0}, 0.5},
                          Case{2, 2, 0, {1.0, 2.0}, 0.9}, Case{1, 2, 1, {1.0}, 0.9}}) {
        const QParam q(k.q);
        const Weights om(k.w);
        const Complex z{1.0};
        const Complex closed = qzeta::qzeta_special_value(k.r, q, k.m, z, k.nu, om);
        auto f = [&](double h) {
            const Complex up = qzeta::qzeta_nu(k.r, q, Complex(-k.m + h), z, k.nu, om, pol).value;
            const Complex dn = qzeta::qzeta_nu(k.r, q, Complex(-k.m - h), z, k.nu, om, pol).value;
            return 0.5 * (up + dn);
        };
        const Complex rich = (100.0 * f(1e-4) - f(1e-3)) / 99.0;
        c.require(std::abs(closed - rich) < 1e-6, "special value vs limit gap ",
                  std::abs(closed - rich), " at r=", k.r, " nu=", k.nu, " m=", k.m);
    }
    // the driving fact: (s+m)/(1-q^{w(s+m)}) -> -1/(w ln q)
    const QParam q(0.5);
    for (double h : {1e-4, 1e-5}) {
        const double w = 2.0;
        const Complex lim = Complex(h) / (1.0 - q.pow(w * h));
        c.require(std::abs(lim - (-1.0 / (w * q.log()))) < 1e-3, "pole residue fact at h=", h);
    }
    return c;
}

Check lemma33(const Options&) {
    Check c;
    for (int r = 2; r <= 4 && c.pass; ++r)
        for (const Complex z : {Complex(0.5), Complex(1.0), Complex(2.0, 1.0)}) {
            const classical::BarnesPolys classic(r);
            for (int l = 0; l < r && c.pass; ++l) {
                double prev = 1e300;
                double final_gap = 0.0;
                for (double qq : {0.9, 0.99, 0.999, 0.9999}) {
                    const QParam q(qq);
                    const qzeta::QBarnesPolys qp(r, q);
                    final_gap = std::abs(qp.eval(l, z) - classic.eval(l, z));
                    c.require(final_gap < prev * 1.2, "P_qr gap not shrinking r=", r, " l=", l,
                              " q=", qq);
                    prev = final_gap;
                }
                c.require(final_gap < 1e-3, "P_qr final gap ", final_gap, " at r=", r, " l=", l);
            }
        }
    return c;
}

Check dterm_limits(const Options& opt) {
    Check c;
    std::vector<double> grid;
    for (int k = 3; k <= (opt.quick ? 8 : 10); ++k) grid.push_back(1.0 - std::pow(2.0, -k));
    const limits::DtermReport rep = limits::dterm_limit_check(2.0, 1.0, 1.0, 2, 4, grid);
    c.require(rep.d1_shrinking, "D1 gaps not shrinking");
    c.require(rep.d2_shrinking, "D2 gaps not shrinking");
    c.require(rep.d3_shrinking, "D3 residual gaps not shrinking");
    c.require(rep.rows.back().d1_gap < 1e-3, "final D1 gap ", rep.rows.back().d1_gap);
    return c;
}

// ---- qgamma ----

Check a1_suite(const Options& opt) {
    Check c;
    const QParam q(opt.q);
    TruncationPolicy pol;
    for (const Complex z : {Complex(1.0), Complex(1.7), Complex(0.8, 0.3)}) {
        auto f = [&](double h) {
            const Complex up = qgamma::qzeta_tilde(q, Complex(h), z, pol).value;
            const Complex dn = qgamma::qzeta_tilde(q, Complex(-h), z, pol).value;
            return (up - dn) / (2.0 * h);
        };
        const Complex rich = (4.0 * f(5e-5) - f(1e-4)) / 3.0;
        c.require(std::abs(qgamma::a1(q, z) - rich) < 1e-7,
                  "a1 derivative oracle gap ", std::abs(qgamma::a1(q, z) - rich), " at z=", cstr(z));
    }
    return c;
}

Check tzq_ladder(const Options& opt) {
    Check c;
    const QParam q(opt.q);
    TruncationPolicy pol;
    for (const Complex s : {Complex(2.0), Complex(1.4, 0.6), Complex(-0.7)})
        for (const Complex z : {Complex(1.0), Complex(0.6, 0.2)}) {
            const Complex lhs = qgamma::qzeta_tilde(q, s, z, pol).value;
            const Complex rhs = qgamma::qzeta_tilde(q, s, z + 1.0, pol).value +
                                q.pow(z * (s - 1.0)) /
                                    special::cpow(qnum::q_number(q, z), s);
            c.require(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)),
                      "tilde-zeta ladder residual at s=", cstr(s), " z=", cstr(z));
        }
    // holomorphic at s=0
    const Complex v = qgamma::qzeta_tilde(q, 0.0, 1.3, pol).value;
    c.require(std::isfinite(v.real()) && std::isfinite(v.imag()), "tilde-zeta not finite at s=0");
    return c;
}

Check tGqn(const Options&) {
    Check c;
    for (double qq : {0.3, 0.5, 0.9}) {
        const QParam q(qq);
        const qgamma::QGammaContext ctx(q);
        for (int n = 1; n <= 8 && c.pass; ++n) {
            const Complex lhs = qgamma::qgamma(ctx, Complex(static_cast<double>(n + 1)));
            double expo = 0.0;
            Complex prod = 1.0;
            for (int k = 1; k <= n; ++k) {
                expo += k * std::pow(qq, -k);
                prod *= std::pow(qnum::q_number(q, static_cast<double>(k)).real(),
                                 std::pow(qq, -k));
            }
            const Complex rhs = std::pow(qq, -expo) * prod;
            c.require(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs), "tGqn fails at q=", qq, " n=", n,
                      " rel=", std::abs(lhs - rhs) / std::abs(rhs));
        }
    }
    return c;
}

Check qgamma_ladder(const Options& opt) {
    Check c;
    const QParam q(opt.q);
    const qgamma::QGammaContext ctx(q);
    for (double zr = 0.25; zr < 5.0; zr += 0.5) {
        const Complex z{zr, 0.3};
        const Complex lhs = qgamma::qgamma(ctx, z + 1.0);
        const Complex base = q.pow(-z) * qnum::q_number(q, z);
        const Complex rhs = special::cpow(base, q.pow(-z)) * qgamma::qgamma(ctx, z);
        c.require(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)),
                  "ladder residual at z=", cstr(z));
    }
    return c;
}

Check log_convexity(const Options&) {
    Check c;
    for (double qq : {0.2, 0.5, 0.9}) {
        const QParam q(qq);
        const qgamma::QGammaContext ctx(q);
        const double h = 0.05;
        for (double z = 0.0; z <= 10.0 - 2 * h && c.pass; z += h) {
            const double d2 = (qgamma::log_qgamma(ctx, Complex(z + 2 * h + 1.0)).real() -
                               2.0 * qgamma::log_qgamma(ctx, Complex(z + h + 1.0)).real() +
                               qgamma::log_qgamma(ctx, Complex(z + 1.0)).real());
            c.require(d2 >= -1e-9, "convexity violated at q=", qq, " z=", z, " d2=", d2);
        }
    }
    return c;
}

Check eta_q_suite(const Options&) {
    Check c;
    for (double qq = 0.05; qq < 1.0; qq += 0.05) {
        const QParam q(qq);
        for (double z = 0.0; z <= 20.0 && c.pass; z += 0.5)
            c.require(qgamma::eta_q(q, z) >= 0.0, "eta_q negative at q=", qq, " z=", z);
    }
    return c;
}

Check lim_q_gamma(const Options&) {
    Check c;
    for (const Complex z : {Complex(0.5), Complex(1.5), Complex(2.5), Complex(1.0, 1.0)}) {
        const Complex target = special::gamma(z);
        double prev = 1e300;
        for (int k = 1; k <= 4; ++k) {
            const QParam q(1.0 - std::pow(10.0, -k));
            const qgamma::QGammaContext ctx(q);
            const double gap = std::abs(qgamma::qgamma(ctx, z) - target);
            c.require(gap < prev, "q-gamma limit gap not decreasing at z=", cstr(z), " k=", k);
            prev = gap;
        }
    }
    return c;
}

Check q_lerch(const Options& opt) {
    Check c;
    std::mt19937 rng(opt.seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    TruncationPolicy pol;
    for (int i = 0; i < 20 && c.pass; ++i) {
        const QParam q(0.15 + 0.8 * U(rng));
        const Complex z{0.3 + 2.5 * U(rng)};
        const qgamma::QGammaContext ctx(q);
        const Complex res = qgamma::gamma_q_euler(q, z, pol) +
                            (q.value() - 1.0) / q.log() * qgamma::qgamma_log_deriv(ctx, z) -
                            qgamma::c_q(q, z);
        c.require(std::abs(res) < 1e-10, "q-Lerch residual ", std::abs(res), " at q=", q.value(),
                  " z=", cstr(z));
    }
    // gamma_q(1) approaches the Euler constant
    const QParam qe(0.9999);
    const double gq = qgamma::gamma_q_euler(qe, 1.0, pol).real();
    c.require(std::abs(gq - 0.5772156649) < 5e-3, "gamma_q(1) at q=0.9999: ", gq);
    // C_q(1) decreasing toward 0
    double prev = 1e300;
    for (double qq : {0.9, 0.99, 0.999}) {
        const double ccq = std::abs(qgamma::c_q(QParam(qq), 1.0));
        c.require(ccq < prev, "C_q(1) not decreasing at q=", qq);
        prev = ccq;
    }
    c.require(prev < 1e-3, "C_q(1) did not fall under 1e-3: ", prev);
    return c;
}

Check gamma_q_laurent(const Options& opt) {
    Check c;
    const QParam q(opt.q);
    TruncationPolicy pol;
    for (const Complex z : {Complex(1.0), Complex(1.6)}) {
        auto cterm = [&](double h) {
            const Complex up = qgamma::qzeta_tilde(q, Complex(1.0 + h), z, pol).value -
                               (q.value() - 1.0) / q.log() / h;
            const Complex dn = qgamma::qzeta_tilde(q, Complex(1.0 - h), z, pol).value +
                               (q.value() - 1.0) / q.log() / h;
            return 0.5 * (up + dn);
        };
        const Complex rich = (100.0 * cterm(1e-4) - cterm(1e-3)) / 99.0;
        const Complex direct = qgamma::gamma_q_euler(q, z, pol);
        c.require(std::abs(rich - direct) < 1e-6, "Laurent constant gap ", std::abs(rich - direct),
                  " at z=", cstr(z));
    }
    return c;
}

Check gauss_legendre(const Options& opt) {
    Check c;
    const QParam q(opt.q);
    c.require(qgamma::gauss_legendre_check(q, 1, Complex(1.3)) == 0.0, "N=1 residual not exactly 0");
    c.require(qgamma::gauss_legendre_check(QParam(0.5), 2, Complex(1.0)) < 1e-10, "N=2 residual");
    c.require(qgamma::gauss_legendre_check(QParam(0.8), 3, Complex(0.7)) < 1e-9, "N=3 residual");
    if (opt.N >= 2 && opt.N <= 6)
        c.require(qgamma::gauss_legendre_check(q, opt.N, Complex(1.1)) < 1e-9,
                  "requested N residual");
    return c;
}

// ---- limits ----

Check limit_suff(const Options& opt) {
    Check c;
    struct Case {
        int r, nu;
        Complex s;
    };
    std::vector<Case> cases = {{1, 1, Complex(3.5)}, {1, 1, Complex(-0.5)},
                               {1, 2, Complex(0.5, 1.0)}, {2, 1, Complex(3.5)}};
    if (!opt.quick) {
        cases.push_back({2, 2, Complex(3.5)});
        cases.push_back({3, 1, Complex(3.5)});
        cases.push_back({3, 2, Complex(3.5)});
    }
    for (const Case& k : cases) {
        limits::SweepSpec spec;
        spec.r = k.r;
        spec.s = k.s;
        spec.z = 1.0;
        spec.omega = Weights::ones(k.r);
        spec.rule = limits::SweepRule::shift(k.nu);
        const limits::SweepReport rep = limits::limit_sweep(spec);
        c.require(rep.classification == limits::SweepClass::converging,
                  "not converging at r=", k.r, " nu=", k.nu, " s=", cstr(k.s), " (",
                  limits::sweep_class_name(rep.classification), ", final gap ",
                  rep.rows.empty() ? -1.0 : rep.rows.back().gap, ")");
    }
    return c;
}

Check limit_necessity(const Options&) {
    Check c;
    for (const auto& [a, b] : {std::pair{1.0, -0.5}, std::pair{2.0, -1.0}}) {
        limits::SweepSpec spec;
        spec.r = 1;
        spec.s = 0.5;
        spec.z = 1.0;
        spec.rule = limits::SweepRule::affine(a, b);
        const limits::SweepReport rep = limits::limit_sweep(spec);
        c.require(rep.classification == limits::SweepClass::diverging,
                  "rule t=", a, "s", b, " classified ", limits::sweep_class_name(rep.classification));
        c.require(rep.fitted_slope > 0.0, "rule t=", a, "s", b, " slope ", rep.fitted_slope);
    }
    return c;
}

using SuiteFn = std::function<Check(const Options&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"q-binom1", q_binom1},
        {"q-binom2", q_binom2},
        {"pascal", pascal},
        {"inversion", inversion},
        {"stirling", stirling},
        {"bernoulli-fourier", bernoulli_fourier},
        {"beta", beta_suite},
        {"hurwitz", hurwitz_suite},
        {"barnes-ladder", barnes_ladder},
        {"barnes-collapse", barnes_collapse},
        {"qbarnes-polys", qbarnes_polys_suite},
        {"route-equiv", route_equiv},
        {"ladder-zqr", ladder_zqr},
        {"leibniz", leibniz},
        {"em-overlap", em_overlap},
        {"em-continued", em_continued},
        {"pole-lattice", pole_lattice},
        {"special-value", special_value},
        {"lemma33", lemma33},
        {"dterm-limits", dterm_limits},
        {"a1", a1_suite},
        {"tzq-ladder", tzq_ladder},
        {"tGqn", tGqn},
        {"qgamma-ladder", qgamma_ladder},
        {"log-convexity", log_convexity},
        {"eta-q", eta_q_suite},
        {"lim-q-gamma", lim_q_gamma},
        {"q-lerch", q_lerch},
        {"gamma-q", gamma_q_laurent},
        {"gauss-legendre", gauss_legendre},
        {"limit-suff", limit_suff},
        {"limit-necessity", limit_necessity},
    };
    return reg;
}

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

SuiteResult run_suite(const std::string& name, const Options& opt) {
    for (const auto& [n, fn] : registry()) {
        if (n == name) {
            try {
                const Check c = fn(opt);
                return {name, c.pass, c.detail};
            } catch (const Error& e) {
                return {name, false, std::string("error: ") + e.what()};
            }
        }
    }
    throw DomainError("verify: unknown suite \"" + name + "\"");
}

std::vector<SuiteResult> run_all(const Options& opt) {
    std::vector<SuiteResult> out;
    for (const auto& [name, fn] : registry()) out.push_back(run_suite(name, opt));
    return out;
}

} // namespace qbarnes::verify
