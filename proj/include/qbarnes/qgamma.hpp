#ifndef QBARNES_QGAMMA_HPP
#define QBARNES_QGAMMA_HPP

#include "qbarnes/types.hpp"

namespace qbarnes::qgamma {

// zeta~_q(s,z) = zeta^{(1)}_q(s,z) q^{z(s-1)}; holomorphic at s = 0, simple
// pole at s = 1 with residue (q-1)/ln q.
EvalResult qzeta_tilde(const QParam& q, Complex s, Complex z, const TruncationPolicy& policy);

// Taylor coefficient a_1(z;q) of zeta~_q(s,z) around s = 0, Re(z) > 0.
Complex a1(const QParam& q, Complex z);

// Caches the normalization a_1(1;q); Gamma~_q(1) = 1 by construction.
class QGammaContext {
public:
    explicit QGammaContext(const QParam& q);
    const QParam& q() const { return q_; }
    Complex a1_at_one() const { return a1_one_; }

private:
    QParam q_;
    Complex a1_one_;
};

// log Gamma~_q(z): closed form for Re(z) > 0, extended left by the ladder
// Gamma~_q(z) = (q^{-z}[z]_q)^{-q^{-z}} Gamma~_q(z+1).
Complex log_qgamma(const QGammaContext& ctx, Complex z);
Complex qgamma(const QGammaContext& ctx, Complex z);

// Gamma~'_q / Gamma~_q(z), closed form, Re(z) > 0.
Complex qgamma_log_deriv(const QGammaContext& ctx, Complex z);

// gamma_q(z), the constant term of the Laurent expansion of zeta~_q at s = 1.
Complex gamma_q_euler(const QParam& q, Complex z, const TruncationPolicy& policy);

// C_q(z) from the q-Lerch formula; C_q(z) -> 0 as q -> 1.
Complex c_q(const QParam& q, Complex z);

// eta_q(z) = ln q (1-(1-q)(z+1)) - (1-q) ln(1-q) + 2(1-q); nonnegative for
// z >= 0, which is what makes log Gamma~_q(z+1) convex.
double eta_q(const QParam& q, double z);

// Relative residual of the q-Gauss-Legendre multiplication formula at (q, N, z).
double gauss_legendre_check(const QParam& q, int N, Complex z);

} // namespace qbarnes::qgamma

#endif
