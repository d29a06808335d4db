#include "qbarnes/qnum.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

namespace qbarnes::qnum {

Complex q_number(const QParam& q, Complex z) {
    return (1.0 - q.pow(z)) / (1.0 - q.value());
}

Complex q_pochhammer(Complex a, const QParam& q, int m) {
    if (m < 0) throw DomainError("q_pochhammer: m must be >= 0");
    Complex prod = 1.0;
    double ql = 1.0;
    for (int l = 0; l < m; ++l) {
        prod *= (1.0 - a * ql);
        ql *= q.value();
    }
    return prod;
}

double q_factorial(const QParam& q, int n) {
    if (n < 0) throw DomainError("q_factorial: n must be >= 0");
    long double v = 1.0L, qq = q.value();
    for (int k = 1; k <= n; ++k)
        v *= (1.0L - powl(qq, k)) / (1.0L - qq);
    return static_cast<double>(v);
}

RationalPoly q_binomial_exact(int m, int n) {
    if (n < 0 || m < 0 || n > m)
        throw DomainError("q_binomial_exact: need 0 <= n <= m");
    // Pascal rows [m,n] = [m-1,n-1] + q^n [m-1,n], grown on demand and
    // cached; returns a copy so readers never hold references into the cache
    static std::mutex mtx;
    static std::vector<std::vector<RationalPoly>> rows{{RationalPoly::one()}};
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(rows.size()) <= m) {
        const std::vector<RationalPoly>& prev = rows.back();
        const int mm = static_cast<int>(rows.size());
        std::vector<RationalPoly> next(static_cast<std::size_t>(mm) + 1);
        next[0] = RationalPoly::one();
        next[static_cast<std::size_t>(mm)] = RationalPoly::one();
        for (int nn = 1; nn < mm; ++nn)
            next[static_cast<std::size_t>(nn)] =
                prev[static_cast<std::size_t>(nn - 1)] +
                prev[static_cast<std::size_t>(nn)].shifted(static_cast<std::size_t>(nn));
        rows.push_back(std::move(next));
    }
    return rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
}

double q_binomial_eval(const QParam& q, int m, int n) {
    if (n < 0 || n > m)
        throw DomainError("q_binomial_eval: need 0 <= n <= m");
    // long double keeps the telescoped product within a double ulp
    long double v = 1.0L, qq = q.value();
    for (int i = 1; i <= n; ++i)
        v *= (1.0L - powl(qq, m - n + i)) / (1.0L - powl(qq, i));
    return static_cast<double>(v);
}

RationalPoly q_vandermonde_sum(int l, int m) {
    if (l < 0 || m < 1)
        throw DomainError("q_vandermonde_sum: need l >= 0, m >= 1");
    RationalPoly acc;
    for (int d = 0; d <= l; ++d)
        acc += q_binomial_exact(m - 1 + d, m - 1).shifted(static_cast<std::size_t>(d));
    return acc;
}

namespace {
void composition_rec(int remaining, int slot, int r, long exponent, RationalPoly& acc) {
    if (slot == r) {
        if (remaining == 0)
            acc += RationalPoly::monomial(static_cast<std::size_t>(exponent));
        return;
    }
    // last slot takes whatever is left
    if (slot == r - 1) {
        acc += RationalPoly::monomial(static_cast<std::size_t>(exponent + static_cast<long>(r) * remaining));
        return;
    }
    for (int v = 0; v <= remaining; ++v)
        composition_rec(remaining - v, slot + 1, r, exponent + static_cast<long>(slot + 1) * v, acc);
}
} // namespace

RationalPoly q_composition_sum(int n, int r) {
    if (n < 0 || r < 1)
        throw DomainError("q_composition_sum: need n >= 0, r >= 1");
    if (n + r > 40)
        throw CapacityError("q_composition_sum: enumeration guard n + r <= 40 exceeded");
    RationalPoly acc;
    composition_rec(n, 0, r, 0, acc);
    return acc;
}

Complex rising_factorial(Complex x, int l) {
    if (l < 0) throw DomainError("rising_factorial: l must be >= 0");
    Complex v = 1.0;
    for (int i = 0; i < l; ++i) v *= (x + static_cast<double>(i));
    return v;
}

namespace {
constexpr int stirling_cap = 64;

const std::vector<std::vector<Int>>& stirling_table() {
    static const std::vector<std::vector<Int>> table = [] {
        std::vector<std::vector<Int>> s(stirling_cap + 1);
        s[0] = {Int(1)};
        for (int l = 0; l < stirling_cap; ++l) {
            s[l + 1].assign(static_cast<std::size_t>(l) + 2, Int(0));
            for (int j = 0; j <= l + 1; ++j) {
                Int v = 0;
                if (j >= 1) v += s[l][static_cast<std::size_t>(j - 1)];
                if (j <= l) v += Int(l) * s[l][static_cast<std::size_t>(j)];
                s[l + 1][static_cast<std::size_t>(j)] = v;
            }
        }
        return s;
    }();
    return table;
}

const std::vector<Rational>& bernoulli_table() {
    // B_0..B_64 by the recurrence sum_j binom(k+1,j) B_j = 0
    static const std::vector<Rational> table = [] {
        std::vector<Rational> B(bernoulli_cap + 1);
        B[0] = 1;
        for (int k = 1; k <= bernoulli_cap; ++k) {
            Rational acc(0);
            Int binom(1); // binom(k+1, j), j = 0
            for (int j = 0; j < k; ++j) {
                acc += Rational(binom) * B[static_cast<std::size_t>(j)];
                binom = binom * (k + 1 - j) / (j + 1);
            }
            B[static_cast<std::size_t>(k)] = -acc / (k + 1);
        }
        return B;
    }();
    return table;
}
} // namespace

Int stirling_first(int l, int j) {
    if (l < 0 || j < 0 || j > l)
        throw DomainError("stirling_first: need 0 <= j <= l");
    if (l > stirling_cap)
        throw CapacityError("stirling_first: table cap exceeded");
    return stirling_table()[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
}

Rational bernoulli_number(int k) {
    if (k < 0) throw DomainError("bernoulli_number: k must be >= 0");
    if (k > bernoulli_cap)
        throw CapacityError("bernoulli_number: cap " + std::to_string(bernoulli_cap) + " exceeded");
    return bernoulli_table()[static_cast<std::size_t>(k)];
}

double bernoulli_poly(int m, double y) {
    if (m < 0) throw DomainError("bernoulli_poly: m must be >= 0");
    // B_m(y) = sum_k binom(m,k) B_k y^{m-k}
    double v = 0.0, binom = 1.0;
    for (int k = 0; k <= m; ++k) {
        v += binom * to_double(bernoulli_number(k)) * std::pow(y, m - k);
        binom = binom * (m - k) / (k + 1);
    }
    return v;
}

double periodic_bernoulli(int m, double x) {
    return bernoulli_poly(m, x - std::floor(x));
}

double periodic_bernoulli_fourier(int m, double x, int n_max) {
    if (m < 2) throw DomainError("periodic_bernoulli_fourier: needs m >= 2");
    if (n_max < 1) throw DomainError("periodic_bernoulli_fourier: needs n_max >= 1");
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= i;
    double acc = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        // e^{2 pi i n x}/(2 pi i n)^m plus its n -> -n mirror
        const Complex w = std::exp(Complex(0.0, 2.0 * std::numbers::pi * n * x));
        const Complex d = std::pow(Complex(0.0, 2.0 * std::numbers::pi * n), m);
        acc += 2.0 * (w / d).real();
    }
    return -fact * acc;
}

Complex complex_binomial(Complex s, int l) {
    if (l < 0) throw DomainError("complex_binomial: l must be >= 0");
    Complex v = 1.0;
    for (int i = 0; i < l; ++i)
        v *= (s + static_cast<double>(i)) / static_cast<double>(i + 1);
    return v;
}

} // namespace qbarnes::qnum
