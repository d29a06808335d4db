#include "qbarnes/special.hpp"

#include <cmath>
#include <numbers>

#include "qbarnes/qnum.hpp"
#include "qbarnes/quadrature.hpp"

namespace qbarnes::special {

Complex cpow(Complex base, Complex expo) {
    if (expo == 0.0) return 1.0;
    if (base.imag() == 0.0) {
        if (base.real() == 0.0) {
            if (expo.real() > 0.0) return 0.0;
            throw BranchError("cpow: zero base with non-positive exponent");
        }
        if (base.real() < 0.0)
            throw BranchError("cpow: base on the negative real axis");
        if (expo.imag() == 0.0)
            return Complex(std::pow(base.real(), expo.real()), 0.0);
    }
    return std::exp(expo * std::log(base));
}

namespace {
// Lanczos, g = 7, 9 terms
constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}
} // namespace

Complex gamma(Complex z) {
    if (is_nonpositive_integer(z))
        throw PoleError("gamma: pole at nonpositive integer", z, "z");
    if (z.real() < 0.5) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
        return std::numbers::pi / (std::sin(std::numbers::pi * z) * gamma(1.0 - z));
    }
    const Complex zz = z - 1.0;
    Complex x = lanczos_c[0];
    for (int i = 1; i < 9; ++i)
        x += lanczos_c[i] / (zz + static_cast<double>(i));
    const Complex t = zz + lanczos_g + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, zz + 0.5) * std::exp(-t) * x;
}

Complex beta(Complex a, Complex b) {
    return gamma(a) * gamma(b) / gamma(a + b);
}

EvalResult incomplete_beta_direct(const IncompleteBetaArgs& args, const TruncationPolicy& policy) {
    const Complex w = args.w;
    const Complex a = args.alpha;
    const Complex b = args.beta;
    if (!(a.real() > 0.0))
        throw DomainError("incomplete_beta_direct: needs Re(alpha) > 0 (use the continued route)");
    if (w == 0.0 || !(w.real() > 0.0) || !(w.real() < 1.0))
        throw DomainError("incomplete_beta_direct: needs Re(w) in (0,1) and w != 0");

    // u = w tau along the segment
    auto f = [&](double tau) -> Complex {
        const Complex u = w * tau;
        return cpow(u, a - 1.0) * cpow(1.0 - u, b - 1.0) * w;
    };

    quad::QuadResult qr;
    if (a.real() >= 1.0) {
        qr = quad::integrate(f, 0.0, 1.0, policy.quad_tol);
    } else {
        // tau = v^{1/Re(alpha)} removes the endpoint singularity
        const double ar = a.real();
        auto g = [&](double v) -> Complex {
            const double tau = std::pow(v, 1.0 / ar);
            return f(tau) * (1.0 / ar) * std::pow(v, 1.0 / ar - 1.0);
        };
        qr = quad::integrate(g, 0.0, 1.0, policy.quad_tol);
    }
    return {qr.value, qr.abs_error, Method::quadrature, qr.evaluations};
}

EvalResult incomplete_beta_continued(const IncompleteBetaArgs& args, int n_prime,
                                     const TruncationPolicy& policy) {
    const Complex w = args.w;
    const Complex a = args.alpha;
    const Complex b = args.beta;
    if (n_prime < 2)
        throw DomainError("incomplete_beta_continued: needs N' >= 2");
    if (!(a.real() > 1.0 - n_prime))
        throw DomainError("incomplete_beta_continued: needs Re(alpha) > 1 - N'");
    for (int l = 0; l <= n_prime - 2; ++l)
        if (std::abs(a + static_cast<double>(l)) < 1e-8)
            throw PoleError("incomplete_beta_continued: alpha too close to a denominator zero",
                            a + static_cast<double>(l), "alpha");

    Complex sum = 0.0;
    Complex poch_1mb = 1.0; // (1-b)_{l-1}
    Complex poch_a = 1.0;   // (a)_l
    double sign = 1.0;      // (-1)^{l-1}
    for (int l = 1; l <= n_prime - 1; ++l) {
        poch_a *= (a + static_cast<double>(l - 1));
        if (l >= 2) poch_1mb *= (1.0 - b + static_cast<double>(l - 2));
        sum += sign * poch_1mb / poch_a * cpow(w, a + static_cast<double>(l - 1)) *
               cpow(1.0 - w, b - static_cast<double>(l));
        sign = -sign;
    }
    // remainder: (-1)^{N'-1} (1-b)_{N'-1} / (a)_{N'-1} * b_w(a+N'-1, b-N'+1)
    Complex poch_1mb_full = 1.0;
    Complex poch_a_full = 1.0;
    for (int i = 0; i < n_prime - 1; ++i) {
        poch_1mb_full *= (1.0 - b + static_cast<double>(i));
        poch_a_full *= (a + static_cast<double>(i));
    }
    const double sgn_rem = ((n_prime - 1) % 2 == 0) ? 1.0 : -1.0;
    IncompleteBetaArgs shifted{w, a + static_cast<double>(n_prime - 1),
                               b - static_cast<double>(n_prime - 1)};
    const EvalResult rem = incomplete_beta_direct(shifted, policy);
    const Complex coef = sgn_rem * poch_1mb_full / poch_a_full;
    return {sum + coef * rem.value, std::abs(coef) * rem.abs_error + 1e-15 * std::abs(sum),
            Method::closed_form, rem.terms};
}

EvalResult incomplete_beta(const IncompleteBetaArgs& args, const TruncationPolicy& policy) {
    if (args.alpha.real() > 0.5)
        return incomplete_beta_direct(args, policy);
    const int n_prime = 2 + static_cast<int>(std::ceil(0.5 - args.alpha.real()));
    return incomplete_beta_continued(args, n_prime, policy);
}

} // namespace qbarnes::special
