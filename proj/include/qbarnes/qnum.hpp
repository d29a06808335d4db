#ifndef QBARNES_QNUM_HPP
#define QBARNES_QNUM_HPP

#include "qbarnes/rational.hpp"
#include "qbarnes/types.hpp"

namespace qbarnes::qnum {

// [z]_q = (1 - q^z)/(1 - q), with q^z via the real logarithm of q.
Complex q_number(const QParam& q, Complex z);

// (a;q)_m = prod_{l=0}^{m-1} (1 - a q^l); empty product for m = 0.
Complex q_pochhammer(Complex a, const QParam& q, int m);

// [n]_q! = [n]_q [n-1]_q ... [1]_q
double q_factorial(const QParam& q, int n);

// Gaussian binomial [m brack n]_q as an exact polynomial in q,
// built by the Pascal recurrence [m,n] = [m-1,n-1] + q^n [m-1,n].
RationalPoly q_binomial_exact(int m, int n);

// Same value at a numeric q, by the telescoped product of ratios
// prod_i (1-q^{m-n+i})/(1-q^i); stable where (q;q)_m underflows.
double q_binomial_eval(const QParam& q, int m, int n);

// Lemma: sum_{d=0}^{l} [m-1+d brack m-1]_q q^d, exactly. Equals [m+l brack m]_q.
RationalPoly q_vandermonde_sum(int l, int m);

// Brute-force sum of q^{n_1 + 2 n_2 + ... + r n_r} over compositions
// n_1+...+n_r = n. Enumeration guard: n + r <= 40.
// Equals q^n [n+r-1 brack r-1]_q.
RationalPoly q_composition_sum(int n, int r);

// (x)_l = x (x+1) ... (x+l-1)
Complex rising_factorial(Complex x, int l);

// Unsigned Stirling numbers of the first kind in the rising-factorial
// convention (x)_l = sum_j s(l,j) x^j; recurrence s(l+1,j) = s(l,j-1) + l s(l,j).
Int stirling_first(int l, int j);

// Exact Bernoulli number, B_1 = -1/2 convention. k <= 64.
Rational bernoulli_number(int k);
inline constexpr int bernoulli_cap = 64;

// Bernoulli polynomial value B_m(y), y real, via the binomial expansion.
double bernoulli_poly(int m, double y);

// B~_m(x) = B_m(x - floor(x))
double periodic_bernoulli(int m, double x);

// Truncated Fourier expansion -m! sum_{0<|n|<=n_max} e^{2 pi i n x}/(2 pi i n)^m,
// m >= 2; the +-n pairs are combined so the result is real.
double periodic_bernoulli_fourier(int m, double x, int n_max);

// binom(s+l-1, l) = (s)_l / l!, the generalized binomial coefficient.
Complex complex_binomial(Complex s, int l);

} // namespace qbarnes::qnum

#endif
