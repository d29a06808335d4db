#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qbarnes/qnum.hpp"

using namespace qbarnes;
using namespace qbarnes::qnum;

namespace {
RationalPoly poly(const std::vector<int>& c) {
    std::vector<Rational> r;
    for (int x : c) r.emplace_back(x);
    return RationalPoly(r);
}
} // namespace

TEST_CASE("q_number basics") {
    const QParam q(0.5);
    CHECK(q_number(q, 1.0).real() == doctest::Approx(1.0));
    CHECK(q_number(q, 2.0).real() == doctest::Approx(1.5)); // (1-0.25)/0.5
    CHECK(q_number(QParam(0.9), 0.0).real() == doctest::Approx(0.0));
    CHECK_THROWS_AS(QParam(1.0), DomainError);
    CHECK_THROWS_AS(QParam(0.0), DomainError);
    CHECK_THROWS_AS(QParam(-0.3), DomainError);
}

TEST_CASE("q_pochhammer") {
    const QParam q(0.5);
    CHECK(q_pochhammer(Complex(0.77), q, 0) == Complex(1.0));
    CHECK(q_pochhammer(Complex(0.5), q, 2).real() == doctest::Approx(0.375));
    CHECK(q_pochhammer(Complex(1.0), QParam(0.3), 1) == Complex(0.0));
    CHECK_THROWS_AS(q_pochhammer(Complex(1.0), q, -1), DomainError);
}

TEST_CASE("q_binomial_exact known polynomials") {
    CHECK(q_binomial_exact(5, 0) == RationalPoly::one());
    CHECK(q_binomial_exact(3, 1) == poly({1, 1, 1})); // 1+q+q^2
    CHECK(q_binomial_exact(4, 2) == poly({1, 1, 2, 1, 1}));
    CHECK(q_binomial_exact(6, 3).degree() == 9); // n(m-n)
    CHECK_THROWS_AS(q_binomial_exact(2, 3), DomainError);
}

TEST_CASE("q_binomial Pascal recurrence, palindromic, nonnegative") {
    for (int m = 1; m <= 20; ++m)
        for (int n = 0; n <= m; ++n) {
            const RationalPoly p = q_binomial_exact(m, n);
            CHECK(p.is_palindromic());
            for (const Rational& c : p.coeffs()) CHECK(c >= 0);
            if (n >= 1 && n < m)
                CHECK(p == q_binomial_exact(m - 1, n - 1) +
                               q_binomial_exact(m - 1, n).shifted(static_cast<std::size_t>(n)));
        }
}

TEST_CASE("q_binomial_eval matches the exact polynomial within 4 ulps") {
    for (double qq : {0.5, 0.9, 0.3}) {
        const QParam q(qq);
        for (int m : {2, 10, 31, 60}) {
            const int n = m / 2;
            // evaluate the exact polynomial at the exact binary64 rational of q
            const Rational qr(qq);
            const double reference = to_double(q_binomial_exact(m, n).eval(qr));
            const double got = q_binomial_eval(q, m, n);
            CHECK(std::abs(got - reference) <=
                  4.0 * std::abs(reference) * std::numeric_limits<double>::epsilon());
        }
    }
    CHECK(q_binomial_eval(QParam(0.5), 2, 1) == doctest::Approx(1.5));
    CHECK(q_binomial_eval(QParam(0.77), 9, 9) == doctest::Approx(1.0));
}

TEST_CASE("q-Vandermonde identity (exact)") {
    CHECK(q_vandermonde_sum(0, 1) == RationalPoly::one());
    CHECK(q_vandermonde_sum(1, 1) == q_binomial_exact(2, 1));
    for (int l = 0; l <= 15; ++l)
        for (int m = 1; m <= 15; ++m)
            CHECK(q_vandermonde_sum(l, m) == q_binomial_exact(m + l, m));
}

TEST_CASE("composition sum identity (exact)") {
    CHECK(q_composition_sum(0, 3) == RationalPoly::one());
    CHECK(q_composition_sum(1, 2) == poly({0, 1, 1})); // q + q^2
    for (int n = 0; n <= 12; ++n)
        for (int r = 1; r <= 5; ++r)
            CHECK(q_composition_sum(n, r) ==
                  q_binomial_exact(n + r - 1, r - 1).shifted(static_cast<std::size_t>(n)));
    CHECK_THROWS_AS(q_composition_sum(39, 2), CapacityError);
}

TEST_CASE("inversion identity at rational q") {
    for (const Rational& q : {Rational(1, 2), Rational(1, 3), Rational(2, 3)})
        for (int n = 0; n <= 5; ++n)
            for (int r = 2; r <= 4; ++r) {
                const RationalPoly b = q_binomial_exact(n + r - 1, r - 1);
                Rational scale = 1;
                for (int i = 0; i < n * (r - 1); ++i) scale /= q;
                CHECK(b.eval(Rational(1) / q) == scale * b.eval(q));
            }
}

TEST_CASE("rising factorial") {
    CHECK(rising_factorial(Complex(3.0), 0) == Complex(1.0));
    CHECK(rising_factorial(Complex(1.0), 4).real() == doctest::Approx(24.0));
    CHECK(rising_factorial(Complex(-2.0), 3) == Complex(0.0));
}

TEST_CASE("Stirling numbers of the first kind") {
    CHECK(stirling_first(3, 3) == 1);
    CHECK(stirling_first(3, 2) == 3);
    CHECK(stirling_first(3, 1) == 2);
    CHECK(stirling_first(5, 0) == 0);
    CHECK_THROWS_AS(stirling_first(3, 4), DomainError);
    // (x)_l = sum_j s(l,j) x^j for integer x, exactly
    for (int l = 0; l <= 10; ++l)
        for (int x = -5; x <= 5; ++x) {
            Int expect = 1;
            for (int i = 0; i < l; ++i) expect *= Int(x + i);
            Int got = 0, xp = 1;
            for (int j = 0; j <= l; ++j) {
                got += stirling_first(l, j) * xp;
                xp *= x;
            }
            CHECK(got == expect);
        }
}

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(3) == 0);
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    for (int k = 3; k <= 63; k += 2) CHECK(bernoulli_number(k) == 0);
    CHECK_THROWS_AS(bernoulli_number(65), CapacityError);
}

TEST_CASE("periodic Bernoulli polynomial") {
    CHECK(periodic_bernoulli(1, 1.5) == doctest::Approx(0.0));
    CHECK(periodic_bernoulli(0, 17.2) == doctest::Approx(1.0));
    CHECK(periodic_bernoulli(2, 0.25) == doctest::Approx(-1.0 / 48.0));
    // exact 1-periodicity on dyadic samples (x and x+1 both exact doubles)
    for (int m = 0; m <= 6; ++m)
        for (double x = 0.0; x < 1.0; x += 1.0 / 32.0)
            CHECK(periodic_bernoulli(m, x) == periodic_bernoulli(m, x + 1.0));
}

TEST_CASE("periodic Bernoulli via Fourier expansion") {
    CHECK(std::abs(periodic_bernoulli_fourier(2, 0.0, 10000) - 1.0 / 6.0) < 1e-4);
    CHECK(std::abs(periodic_bernoulli_fourier(3, 0.5, 1000)) < 1e-6);
    CHECK(std::abs(periodic_bernoulli_fourier(4, 0.3, 1000) - periodic_bernoulli(4, 0.3)) < 1e-8);
    CHECK_THROWS_AS(periodic_bernoulli_fourier(1, 0.3, 100), DomainError);
}

TEST_CASE("complex binomial coefficient") {
    CHECK(complex_binomial(Complex(2.5, 1.0), 0) == Complex(1.0));
    CHECK(complex_binomial(Complex(2.0), 3).real() == doctest::Approx(4.0));
    CHECK(std::abs(complex_binomial(Complex(-1.0), 2)) == doctest::Approx(0.0));
}
