#include "qbarnes/qzeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qbarnes/qnum.hpp"
#include "qbarnes/quadrature.hpp"
#include "qbarnes/special.hpp"

namespace qbarnes::qzeta {

using special::cpow;

namespace {
constexpr double pole_guard = 1e-8;   // |1 - q^{w_j(t-j+1+l)}| threshold
constexpr double dterm_guard = 1e-6;  // |delta n + t + i| threshold in (delta n + t)_l

Complex pochhammer(Complex x, int n) {
    Complex v = 1.0;
    for (int i = 0; i < n; ++i) v *= (x + static_cast<double>(i));
    return v;
}

Complex int_power(Complex x, int n) {
    Complex v = 1.0;
    for (int i = 0; i < n; ++i) v *= x;
    return v;
}

// (delta n + t)_l with proximity guard on each factor
Complex dterm_poch(Complex dn_t, int l) {
    Complex v = 1.0;
    for (int i = 0; i < l; ++i) {
        const Complex f = dn_t + static_cast<double>(i);
        if (std::abs(f) < dterm_guard)
            throw PoleError("qzeta1_em: (delta n + t)_l factor within guard distance of zero", f, "t");
        v *= f;
    }
    return v;
}

// magnitude bound for |[x+z]_q^{-s}| over the lattice x >= 0
double power_bound(const QParam& q, Complex s, Complex z) {
    double umin = 1e300, umax = 0.0;
    for (double x : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 256.0, 4096.0, 1e9}) {
        const double au = std::abs(qnum::q_number(q, x + z));
        umin = std::min(umin, au);
        umax = std::max(umax, au);
    }
    umin = std::max(umin, 1e-12);
    const double b = std::max(std::pow(umin, -s.real()), std::pow(umax, -s.real()));
    return 2.0 * b * std::exp(std::abs(s.imag()) * std::numbers::pi);
}

Complex lattice_power(const QParam& q, Complex qz, double x, Complex z, Complex s) {
    // [x+z]_q^{-s} with q^{x+z} = q^x q^z
    const Complex u = (1.0 - qz * q.pow(x)) / (1.0 - q.value());
    if (std::abs(u) < 1e-12)
        throw SingularTermError("qzeta: [n.w+z]_q vanishes at lattice value " + std::to_string(x));
    if (u.imag() == 0.0 && u.real() < 0.0)
        throw BranchError("qzeta: [n.w+z]_q on the negative real axis");
    (void)z;
    return std::exp(-s * std::log(u));
}
} // namespace

EvalResult qzeta_direct(int r, const QParam& q, Complex s, Complex t, Complex z,
                        const Weights& omega, const TruncationPolicy& policy) {
    if (r < 1 || omega.r() != r)
        throw DomainError("qzeta_direct: weights must have r components");
    if (!(t.real() > static_cast<double>(r - 1)))
        throw DomainError("qzeta_direct: series needs Re(t) > r-1; use a continuation route");
    if (!(z.real() > 0.0))
        throw DomainError("qzeta_direct: needs Re(z) > 0");

    const double lnq = q.log();
    std::vector<double> rho(static_cast<std::size_t>(r));
    double prod_inv = 1.0;
    for (int j = 0; j < r; ++j) {
        const double aj = t.real() - j;
        rho[static_cast<std::size_t>(j)] = std::exp(omega[j] * aj * lnq);
        prod_inv /= (1.0 - rho[static_cast<std::size_t>(j)]);
    }
    const double bnd = power_bound(q, s, z);

    // per-dimension caps from the geometric tail budget tol/r per axis
    std::vector<long> cap(static_cast<std::size_t>(r));
    double total = 1.0;
    for (int j = 0; j < r; ++j) {
        const double rhs = policy.tol / (r * prod_inv * bnd);
        long nj = 4;
        if (rhs < 1.0)
            nj = static_cast<long>(std::ceil(std::log(rhs) / std::log(rho[static_cast<std::size_t>(j)])));
        cap[static_cast<std::size_t>(j)] = std::max<long>(nj, 2);
        total *= static_cast<double>(cap[static_cast<std::size_t>(j)] + 1);
    }
    if (total > static_cast<double>(policy.max_terms)) {
        const double shrink = std::pow(static_cast<double>(policy.max_terms) / total, 1.0 / r);
        for (auto& c : cap)
            c = std::max<long>(2, static_cast<long>(static_cast<double>(c + 1) * shrink) - 1);
    }
    double tail = 0.0;
    for (int j = 0; j < r; ++j)
        tail += std::pow(rho[static_cast<std::size_t>(j)],
                         static_cast<double>(cap[static_cast<std::size_t>(j)] + 1)) *
                prod_inv * bnd;

    const Complex qz = q.pow(z);
    std::vector<Complex> step(static_cast<std::size_t>(r)), fac(static_cast<std::size_t>(r), 1.0);
    for (int j = 0; j < r; ++j)
        step[static_cast<std::size_t>(j)] = q.pow(omega[j] * (t - static_cast<double>(j)));

    std::vector<long> idx(static_cast<std::size_t>(r), 0);
    Complex acc = 0.0;
    std::size_t terms = 0;
    const int inner = r - 1;
    while (true) {
        // numerator prod_j q^{n_j w_j (t-j)} and lattice value sum n_j w_j
        Complex numer = 1.0;
        double lat = 0.0;
        for (int j = 0; j < r; ++j) {
            numer *= fac[static_cast<std::size_t>(j)];
            lat += static_cast<double>(idx[static_cast<std::size_t>(j)]) * omega[j];
        }
        acc += numer * lattice_power(q, qz, lat, z, s);
        ++terms;

        // odometer
        int k = inner;
        while (k >= 0) {
            ++idx[static_cast<std::size_t>(k)];
            if (idx[static_cast<std::size_t>(k)] <= cap[static_cast<std::size_t>(k)]) {
                if (k == inner && idx[static_cast<std::size_t>(k)] % 1024 != 0)
                    fac[static_cast<std::size_t>(k)] *= step[static_cast<std::size_t>(k)];
                else
                    fac[static_cast<std::size_t>(k)] =
                        q.pow(static_cast<double>(idx[static_cast<std::size_t>(k)]) * omega[k] *
                              (t - static_cast<double>(k)));
                break;
            }
            idx[static_cast<std::size_t>(k)] = 0;
            fac[static_cast<std::size_t>(k)] = 1.0;
            --k;
        }
        if (k < 0) break;
    }
    return {acc, tail + static_cast<double>(terms) * 1e-16 * std::abs(acc), Method::direct_series, terms};
}

EvalResult qzeta_qbinom(int r, const QParam& q, Complex s, Complex t, Complex z,
                        const TruncationPolicy& policy) {
    if (r < 1) throw DomainError("qzeta_qbinom: needs r >= 1");
    if (!(t.real() > static_cast<double>(r - 1)))
        throw DomainError("qzeta_qbinom: series needs Re(t) > r-1");
    if (!(z.real() > 0.0))
        throw DomainError("qzeta_qbinom: needs Re(z) > 0");

    const double qq = q.value();
    double cmax = 1.0;
    for (int i = 1; i <= r - 1; ++i) cmax /= (1.0 - std::pow(qq, i));
    const double rho = std::exp((t.real() - r + 1) * q.log());
    const double bnd = power_bound(q, s, z);

    const Complex qz = q.pow(z);
    const Complex pstep = q.pow(t - static_cast<double>(r - 1));
    double coeff = 1.0; // [n+r-1 brack r-1]_q
    Complex phase = 1.0;
    Complex acc = 0.0;
    std::size_t n = 0;
    double tail = cmax * bnd;
    while (n < policy.max_terms) {
        acc += coeff * phase * lattice_power(q, qz, static_cast<double>(n), z, s);
        tail = cmax * bnd * std::pow(rho, static_cast<double>(n + 1)) / (1.0 - rho);
        if (tail < policy.tol && n > 4) {
            ++n;
            break;
        }
        ++n;
        coeff *= (1.0 - std::pow(qq, static_cast<double>(n + r - 1))) /
                 (1.0 - std::pow(qq, static_cast<double>(n)));
        if (n % 4096 == 0)
            phase = q.pow(static_cast<double>(n) * (t - static_cast<double>(r - 1)));
        else
            phase *= pstep;
    }
    return {acc, tail + static_cast<double>(n) * 1e-16 * std::abs(acc), Method::qbinom_series, n};
}

QBarnesPolys::QBarnesPolys(int r, const QParam& q) : r_(r), q_(q), qfact_(qnum::q_factorial(q, r - 1)) {
    if (r < 1) throw DomainError("qbarnes_polys: needs r >= 1");
}

std::vector<Complex> QBarnesPolys::eval_all(Complex z) const {
    // elementary symmetric functions of v_m = q^m [z-m]_q, 1 <= m <= r-1
    std::vector<Complex> e(static_cast<std::size_t>(r_), 0.0);
    e[0] = 1.0;
    for (int m = 1; m <= r_ - 1; ++m) {
        const Complex v = q_.pow(static_cast<double>(m)) * qnum::q_number(q_, z - static_cast<double>(m));
        for (int k = std::min(m, r_ - 1); k >= 1; --k)
            e[static_cast<std::size_t>(k)] += v * e[static_cast<std::size_t>(k - 1)];
    }
    std::vector<Complex> p(static_cast<std::size_t>(r_));
    for (int l = 0; l < r_; ++l) {
        const int k = r_ - 1 - l;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        p[static_cast<std::size_t>(l)] = sign * e[static_cast<std::size_t>(k)] / qfact_;
    }
    return p;
}

Complex QBarnesPolys::eval(int l, Complex z) const {
    if (l < 0 || l >= r_) throw DomainError("QBarnesPolys: level out of range");
    return eval_all(z)[static_cast<std::size_t>(l)];
}

EvalResult qzeta_reduce(int r, const QParam& q, Complex s, Complex t, Complex z,
                        const Depth1Evaluator& depth1, const TruncationPolicy& policy) {
    if (r < 1) throw DomainError("qzeta_reduce: needs r >= 1");
    if (!(z.real() > 0.0))
        throw DomainError("qzeta_reduce: needs Re(z) > 0");
    (void)policy;
    const QBarnesPolys polys(r, q);
    const std::vector<Complex> p = polys.eval_all(z);
    Complex acc = 0.0;
    double err = 0.0;
    std::size_t terms = 0;
    for (int l = 0; l < r; ++l) {
        const EvalResult part = depth1(s - static_cast<double>(l), t - static_cast<double>(l));
        acc += p[static_cast<std::size_t>(l)] * part.value;
        err += std::abs(p[static_cast<std::size_t>(l)]) * part.abs_error;
        terms += part.terms;
    }
    return {acc, err, Method::reduction, terms};
}

LeibnizCoeffs leibniz_coeffs(Complex s, Complex t, int K) {
    if (K < 0) throw DomainError("leibniz_coeffs: needs K >= 0");
    LeibnizCoeffs lc;
    lc.K = K;
    lc.b.assign(static_cast<std::size_t>(K + 1), {});
    for (int j = 0; j <= K; ++j)
        lc.b[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(j + 1), 0.0);
    lc.b[0][0] = 1.0;
    for (int j = 0; j < K; ++j)
        for (int e = 0; e <= j + 1; ++e) {
            const Complex prev = (e >= 1) ? lc.b[static_cast<std::size_t>(j)][static_cast<std::size_t>(e - 1)] : 0.0;
            const Complex cur = (e <= j) ? lc.b[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)] : 0.0;
            lc.b[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(e)] =
                (s + static_cast<double>(e - 1)) * prev - (s + static_cast<double>(e)) * cur;
        }
    lc.c.assign(static_cast<std::size_t>(K + 1), {});
    for (int k = 0; k <= K; ++k) {
        lc.c[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(k + 1), 0.0);
        for (int e = 0; e <= k; ++e) {
            Complex acc = 0.0;
            double binom = 1.0; // binom(k, j), walked from j = k downward
            for (int j = k; j >= e; --j) {
                acc += binom * int_power(t, k - j) *
                       lc.b[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)];
                binom = binom * j / (k - j + 1);
            }
            lc.c[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)] = acc;
        }
    }
    return lc;
}

EmParts qzeta1_em_parts(const QParam& q, Complex s, Complex t, Complex z,
                        const ContinuationParams& cp) {
    if (!(z.real() > 0.0)) throw DomainError("qzeta1_em: needs Re(z) > 0");
    if (cp.N < 1 || cp.M < cp.N + 1)
        throw DomainError("qzeta1_em: needs N >= 1 and M >= N+1");
    if (cp.n_max < 1) throw DomainError("qzeta1_em: needs n_max >= 1");
    const int N = cp.N, M = cp.M;
    if (!(t.real() + M - N > 0.0))
        throw DomainError("qzeta1_em: region requires Re(t) > N - M");

    const double qq = q.value();
    const double lnq = q.log();
    const Complex delta = Complex(0.0, 2.0 * std::numbers::pi) / lnq;
    const Complex A = qnum::q_number(q, z);
    const Complex Ainv = 1.0 / A;
    const Complex Ams = cpow(A, -s);
    const LeibnizCoeffs lc = leibniz_coeffs(s, t, N + 1);

    EmParts parts{};
    double err = 0.0;

    // leading incomplete-beta term
    {
        const special::IncompleteBetaArgs args{q.pow(z), t, -s + 1.0};
        const EvalResult ib = special::incomplete_beta(args, cp.policy);
        const Complex pref = -q.pow(-z * t) * cpow(Complex(1.0 - qq), s) / lnq;
        parts.lead = pref * ib.value;
        err += std::abs(pref) * ib.abs_error;
    }
    parts.half = 0.5 * Ams;

    // D1
    {
        Complex d1 = 0.0;
        for (int k = 1; k <= N; ++k) {
            const double bk = to_double(qnum::bernoulli_number(k + 1));
            double fact = 1.0;
            for (int i = 2; i <= k + 1; ++i) fact *= i;
            Complex Amse = Ams;
            for (int e = 0; e <= k; ++e) {
                d1 -= bk / fact * lc.c[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)] * Amse *
                      std::pow(lnq, k) / std::pow(1.0 - qq, e);
                Amse *= Ainv;
            }
        }
        parts.d1 = d1;
    }

    // D2
    {
        Complex d2 = 0.0;
        double last_pair = 0.0;
        Complex Amse = Ams; // A^{-s-e}
        for (int e = 0; e <= N + 1; ++e) {
            const Complex ce = lc.c[static_cast<std::size_t>(N + 1)][static_cast<std::size_t>(e)];
            Complex A1ml = 1.0; // A^{1-l}
            for (int l = 1; l <= M - N; ++l) {
                const double sign = ((N + l - 1) % 2 == 0) ? 1.0 : -1.0;
                const Complex common = sign * ce * pochhammer(s + static_cast<double>(e), l - 1) *
                                       q.pow(z * static_cast<double>(l - 1)) /
                                       std::pow(1.0 - qq, l) * Amse * A1ml *
                                       std::pow(lnq, N) / std::pow(1.0 - qq, e - 1);
                for (int n = 1; n <= cp.n_max; ++n) {
                    const Complex twopin = Complex(0.0, 2.0 * std::numbers::pi * n);
                    const Complex term_p = common / int_power(twopin, N + 1) /
                                           dterm_poch(delta * static_cast<double>(n) + t, l);
                    const Complex term_m = common / int_power(-twopin, N + 1) /
                                           dterm_poch(-delta * static_cast<double>(n) + t, l);
                    d2 += term_p + term_m;
                    if (n == cp.n_max) last_pair += std::abs(term_p + term_m);
                }
                A1ml *= Ainv;
            }
            Amse *= Ainv;
        }
        parts.d2 = d2;
        err += last_pair * cp.n_max / N; // O(n_max^{-N}) tail
    }

    // D3: oscillatory integrals, all eps at once per n
    {
        Complex d3 = 0.0;
        const double X = std::ceil(35.0 / ((t.real() + M - N) * std::abs(lnq)));
        const Complex qz = q.pow(z);
        const Complex sM = s + static_cast<double>(M - N);
        const double sgnM = ((M + 1) % 2 == 0) ? 1.0 : -1.0;
        double last_pair = 0.0;
        const quad::GaussRule& rule = quad::GaussRule::get();
        for (int n = 1; n <= cp.n_max; ++n) {
            const double panel_len = std::min(1.0, 1.75 / n);
            const int n_panels = static_cast<int>(std::ceil(X / panel_len));
            std::vector<Complex> Ip(static_cast<std::size_t>(N + 2), 0.0),
                Im(static_cast<std::size_t>(N + 2), 0.0);
            for (int p = 0; p < n_panels; ++p) {
                const double a = X * p / n_panels, b = X * (p + 1) / n_panels;
                const double h = 0.5 * (b - a), mid = 0.5 * (a + b);
                for (int g = 0; g < 20; ++g) {
                    const double x = mid + h * rule.node[g];
                    const double w = h * rule.weight[g];
                    const Complex osc = std::exp(Complex(0.0, 2.0 * std::numbers::pi * n * x));
                    const Complex pw = q.pow(x * (t + static_cast<double>(M - N)));
                    const Complex base = (1.0 - qz * q.pow(x)) / (1.0 - qq);
                    Complex val = pw * std::exp(-(sM)*std::log(base)); // base^{-s-M+N} * q^{x(t+M-N)}
                    for (int e = 0; e <= N + 1; ++e) {
                        Ip[static_cast<std::size_t>(e)] += w * osc * val;
                        Im[static_cast<std::size_t>(e)] += w * std::conj(osc) * val;
                        val /= base;
                    }
                }
            }
            Complex pair = 0.0;
            for (int e = 0; e <= N + 1; ++e) {
                const Complex ce = lc.c[static_cast<std::size_t>(N + 1)][static_cast<std::size_t>(e)];
                const Complex body = sgnM * ce * pochhammer(s + static_cast<double>(e), M - N) *
                                     q.pow(z * static_cast<double>(M - N)) /
                                     std::pow(1.0 - qq, M - N) * std::pow(lnq, N + 1) /
                                     std::pow(1.0 - qq, e);
                const Complex twopin = Complex(0.0, 2.0 * std::numbers::pi * n);
                pair += body / int_power(twopin, N + 1) /
                        dterm_poch(delta * static_cast<double>(n) + t, M - N) *
                        Ip[static_cast<std::size_t>(e)];
                pair += body / int_power(-twopin, N + 1) /
                        dterm_poch(-delta * static_cast<double>(n) + t, M - N) *
                        Im[static_cast<std::size_t>(e)];
            }
            d3 += pair;
            if (n == cp.n_max) last_pair = std::abs(pair);
        }
        parts.d3 = d3;
        err += last_pair * cp.n_max / M + cp.policy.quad_tol;
    }

    parts.abs_error = err + 1e-14 * std::abs(parts.total());
    return parts;
}

EvalResult qzeta1_em(const QParam& q, Complex s, Complex t, Complex z,
                     const ContinuationParams& cp) {
    const EmParts p = qzeta1_em_parts(q, s, t, z, cp);
    return {p.total(), p.abs_error, Method::euler_maclaurin,
            static_cast<std::size_t>(cp.n_max)};
}

EvalResult qzeta_binomial_ac(int r, const QParam& q, Complex s, Complex t, Complex z,
                             const Weights& omega, const TruncationPolicy& policy) {
    if (r < 1 || omega.r() != r)
        throw DomainError("qzeta_binomial_ac: weights must have r components");
    if (!(z.real() > 0.0)) {
        if (omega.all_ones())
            return qzeta_ladder(r, q, s, t, z, policy);
        throw DomainError("qzeta_binomial_ac: Re(z) <= 0 with general weights (ladder only exists for omega = 1)");
    }

    const double qq = q.value();
    const double lnq = q.log();
    const Complex qz = q.pow(z);
    std::vector<Complex> fac(static_cast<std::size_t>(r));
    std::vector<double> qom(static_cast<std::size_t>(r));
    for (int j = 1; j <= r; ++j) {
        fac[static_cast<std::size_t>(j - 1)] = q.pow(omega[j - 1] * (t - static_cast<double>(j) + 1.0));
        qom[static_cast<std::size_t>(j - 1)] = std::pow(qq, omega[j - 1]);
    }

    const double abs_s = std::abs(s);
    const double rho = std::exp(z.real() * lnq);
    const double l_peak = (abs_s + 1.0) / std::max(1e-12, z.real() * std::abs(lnq));

    Complex acc = 0.0;
    Complex bin = 1.0, qlz = 1.0;
    double tail = 1e300;
    std::size_t l = 0;
    while (l < policy.max_terms) {
        Complex prod = 1.0;
        double prod_abs = 1.0;
        bool exponents_clear = true;
        for (int j = 1; j <= r; ++j) {
            const Complex f = fac[static_cast<std::size_t>(j - 1)];
            const Complex d = 1.0 - f;
            if (std::abs(d) < pole_guard)
                throw PoleError("qzeta_binomial_ac: factor 1-q^{w_j(t-j+1+l)} vanishes at j=" +
                                    std::to_string(j) + ", l=" + std::to_string(l),
                                t - static_cast<double>(j) + 1.0 + static_cast<double>(l), "t");
            prod /= d;
            prod_abs /= std::abs(d);
            if (omega[j - 1] * (t.real() - j + 1.0 + static_cast<double>(l)) < 1.0)
                exponents_clear = false;
        }
        acc += bin * qlz * prod;

        if (exponents_clear && static_cast<double>(l) > l_peak) {
            const double bound = std::pow(static_cast<double>(l + 1), abs_s + 1.0) *
                                 std::pow(rho, static_cast<double>(l)) * prod_abs * 1.5;
            tail = bound * rho / (1.0 - rho);
            if (tail < policy.tol) {
                ++l;
                break;
            }
        }
        ++l;
        bin *= (s + static_cast<double>(l - 1)) / static_cast<double>(l);
        if (l % 4096 == 0) {
            qlz = q.pow(static_cast<double>(l) * z);
            for (int j = 1; j <= r; ++j)
                fac[static_cast<std::size_t>(j - 1)] =
                    q.pow(omega[j - 1] * (t - static_cast<double>(j) + 1.0 + static_cast<double>(l)));
        } else {
            qlz *= qz;
            for (int j = 1; j <= r; ++j)
                fac[static_cast<std::size_t>(j - 1)] *= qom[static_cast<std::size_t>(j - 1)];
        }
    }
    const Complex scale = cpow(Complex(1.0 - qq), s);
    const double err = std::abs(scale) * (std::min(tail, 1e300) +
                                          static_cast<double>(l) * 2e-16 * std::abs(acc));
    return {scale * acc, err, Method::binomial_ac, l};
}

namespace {
const char* pole_family(int p, int nu, int r) {
    if (p <= 0) return "j + delta_i Z\\{0} (j <= 0): removable on the real axis";
    if (p <= nu) return "j + delta_i Z (1 <= j <= nu)";
    (void)r;
    return "nu + j + delta_i Z (1 <= j <= r-1, j+1 <= i <= r)";
}
} // namespace

EvalResult qzeta_nu(int r, const QParam& q, Complex s, Complex z, int nu,
                    const Weights& omega, const TruncationPolicy& policy) {
    if (nu < 1) throw DomainError("qzeta_nu: needs nu >= 1");
    // the binomial coefficient cancels the factor poles at nonpositive integer s;
    // evaluate those through the closed-form special value
    if (std::abs(s.imag()) < pole_guard) {
        const double sr = std::round(s.real());
        if (std::abs(s.real() - sr) < pole_guard) {
            const int p = static_cast<int>(sr);
            if (p >= 1 && p <= r + nu - 1)
                throw PoleError(std::string("qzeta_nu: real-axis pole at s = ") + std::to_string(p) +
                                    " [family " + pole_family(p, nu, r) + "]",
                                Complex(sr), "s");
            if (p <= 0) {
                const Complex v = qzeta_special_value(r, q, -p, z, nu, omega);
                return {v, 1e-13 * std::abs(v), Method::special_value, 1};
            }
        }
    }
    try {
        return qzeta_binomial_ac(r, q, s, s - static_cast<double>(nu), z, omega, policy);
    } catch (const PoleError& e) {
        throw PoleError(std::string("qzeta_nu: pole hit through t = s - nu: ") + e.what(), s, "s");
    }
}

Complex qzeta_special_value(int r, const QParam& q, int m, Complex z, int nu,
                            const Weights& omega) {
    if (m < 0) throw DomainError("qzeta_special_value: needs m >= 0");
    if (nu < 1) throw DomainError("qzeta_special_value: needs nu >= 1");
    if (r < 1 || omega.r() != r)
        throw DomainError("qzeta_special_value: weights must have r components");

    const double qq = q.value();
    const double lnq = q.log();

    Complex sum1 = 0.0;
    double binom = 1.0; // binom(m, l)
    for (int l = 0; l <= m; ++l) {
        Complex prod = 1.0;
        for (int j = 1; j <= r; ++j) {
            const double expo = omega[j - 1] * static_cast<double>(-m - nu + l - j + 1);
            const double d = 1.0 - std::pow(qq, expo);
            if (std::abs(d) < 1e-12)
                throw DomainError("qzeta_special_value: vanishing factor 1-q^{w_j(-m-nu+l-j+1)} at j=" +
                                  std::to_string(j) + ", l=" + std::to_string(l));
            prod /= d;
        }
        const double sign = (l % 2 == 0) ? 1.0 : -1.0;
        sum1 += sign * binom * q.pow(static_cast<double>(l) * z) * prod;
        binom = binom * (m - l) / (l + 1);
    }

    Complex sum2 = 0.0;
    double mfact = 1.0;
    for (int i = 2; i <= m; ++i) mfact *= i;
    for (int l = 1; l <= r; ++l) {
        double num_fact = 1.0; // (l+nu-2)!
        for (int i = 2; i <= l + nu - 2; ++i) num_fact *= i;
        double den_fact = 1.0; // (l+m+nu-1)!
        for (int i = 2; i <= l + m + nu - 1; ++i) den_fact *= i;
        Complex prod = 1.0;
        for (int j = 1; j <= r; ++j) {
            if (j == l) continue;
            const double d = 1.0 - std::pow(qq, omega[j - 1] * static_cast<double>(l - j));
            if (std::abs(d) < 1e-12)
                throw DomainError("qzeta_special_value: degenerate weights, factor 1-q^{w_j(l-j)} vanishes at j=" +
                                  std::to_string(j) + ", l=" + std::to_string(l));
            prod /= d;
        }
        const double sign = ((m + 1) % 2 == 0) ? 1.0 : -1.0;
        sum2 += sign * mfact * num_fact * q.pow(static_cast<double>(l) * z) /
                (den_fact * omega[l - 1]) * prod;
    }

    const Complex pref = std::pow(1.0 - qq, -m);
    return pref * (sum1 + q.pow(static_cast<double>(m + nu - 1) * z) / lnq * sum2);
}

EvalResult qzeta_ladder(int r, const QParam& q, Complex s, Complex t, Complex z,
                        const TruncationPolicy& policy) {
    if (r == 0) {
        const Complex u = qnum::q_number(q, z);
        if (std::abs(u) < 1e-12)
            throw SingularTermError("qzeta_ladder: [z]_q = 0 after shifts (z in -Z_{<=0})");
        const Complex v = cpow(u, -s);
        return {v, 1e-15 * std::abs(v), Method::ladder, 1};
    }
    if (z.real() > 0.0)
        return qzeta_binomial_ac(r, q, s, t, z, Weights::ones(r), policy);
    const EvalResult up = qzeta_ladder(r, q, s, t, z + 1.0, policy);
    const EvalResult down = qzeta_ladder(r - 1, q, s, t, z, policy);
    const Complex f = q.pow(t - static_cast<double>(r) + 1.0);
    return {f * up.value + down.value, std::abs(f) * up.abs_error + down.abs_error,
            Method::ladder, up.terms + down.terms};
}

Depth1Evaluator depth1_direct(const QParam& q, Complex z, const TruncationPolicy& policy) {
    return [q, z, policy](Complex s, Complex t) {
        return qzeta_direct(1, q, s, t, z, Weights::ones(1), policy);
    };
}

Depth1Evaluator depth1_binomial_ac(const QParam& q, Complex z, const TruncationPolicy& policy) {
    return [q, z, policy](Complex s, Complex t) {
        return qzeta_binomial_ac(1, q, s, t, z, Weights::ones(1), policy);
    };
}

Depth1Evaluator depth1_em(const QParam& q, Complex z, const ContinuationParams& cp) {
    return [q, z, cp](Complex s, Complex t) { return qzeta1_em(q, s, t, z, cp); };
}

} // namespace qbarnes::qzeta
