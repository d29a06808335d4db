// Shared test oracles: independent brute-force summers, Richardson limits,
// finite differences. These deliberately avoid the library's evaluation paths.

#ifndef QBARNES_TESTS_ORACLE_SUPPORT_HPP
#define QBARNES_TESTS_ORACLE_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

using Complex = std::complex<double>;

inline Complex cpow(Complex b, Complex e) { return std::exp(e * std::log(b)); }

// [z]_q by hand
inline Complex qnum(double q, Complex z) {
    return (1.0 - std::exp(z * std::log(q))) / (1.0 - q);
}

// brute-force zeta_q(s,t,z) partial sum, r = 1
inline Complex zq1_series(double q, Complex s, Complex t, Complex z, int nterms) {
    Complex acc = 0.0;
    for (int n = 0; n < nterms; ++n)
        acc += cpow(Complex(q), t * static_cast<double>(n)) /
               cpow(qnum(q, static_cast<double>(n) + z), s);
    return acc;
}

// symmetric Richardson limit of f at x0: evaluates at x0 +- h and x0 +- h/10
inline Complex richardson_limit(const std::function<Complex(Complex)>& f, Complex x0, double h) {
    const Complex g1 = 0.5 * (f(x0 + h) + f(x0 - h));
    const Complex g2 = 0.5 * (f(x0 + h / 10.0) + f(x0 - h / 10.0));
    return (100.0 * g2 - g1) / 99.0;
}

// central first derivative with one Richardson step
inline Complex derivative(const std::function<Complex(Complex)>& f, Complex x0, double h) {
    auto d = [&](double hh) { return (f(x0 + hh) - f(x0 - hh)) / (2.0 * hh); };
    return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}

} // namespace oracle

#endif
