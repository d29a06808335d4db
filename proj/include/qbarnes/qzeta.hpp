#ifndef QBARNES_QZETA_HPP
#define QBARNES_QZETA_HPP

#include <functional>
#include <vector>

#include "qbarnes/types.hpp"

namespace qbarnes::qzeta {

// Defining multi-index series sum q^{sum n_j w_j (t-j+1)} / [n.w + z]_q^s,
// absolutely convergent for Re(t) > r-1; needs Re(z) > 0.
EvalResult qzeta_direct(int r, const QParam& q, Complex s, Complex t, Complex z,
                        const Weights& omega, const TruncationPolicy& policy);

// Collapsed single sum over n with Gaussian-binomial coefficients (omega = 1 only):
// sum_n [n+r-1 brack r-1]_q q^{n(t-r+1)} / [n+z]_q^s.
EvalResult qzeta_qbinom(int r, const QParam& q, Complex s, Complex t, Complex z,
                        const TruncationPolicy& policy);

// P^l_{q,r}(z): elementary symmetric functions of {q^m [z-m]_q, 1 <= m <= r-1},
// with P^{r-1}_{q,r} = 1/[r-1]_q!.
class QBarnesPolys {
public:
    QBarnesPolys(int r, const QParam& q);
    int r() const { return r_; }
    Complex eval(int l, Complex z) const;
    std::vector<Complex> eval_all(Complex z) const;

private:
    int r_;
    QParam q_;
    double qfact_; // [r-1]_q!
};

inline QBarnesPolys qbarnes_polys(int r, const QParam& q) { return {r, q}; }

using Depth1Evaluator = std::function<EvalResult(Complex s, Complex t)>;

// Depth-1 reduction zeta_{q,r}(s,t,z) = sum_l P^l_{q,r}(z) zeta_q(s-l, t-l, z).
// Extends zeta_{q,r} wherever the supplied depth-1 evaluator extends.
EvalResult qzeta_reduce(int r, const QParam& q, Complex s, Complex t, Complex z,
                        const Depth1Evaluator& depth1, const TruncationPolicy& policy);

// b^eps_j(s) from d^j/dx^j (1-q^{x+z})^{-s} = (ln q)^j sum b^eps_j (1-q^{x+z})^{-s-eps},
// recurrence b^e_{j+1} = (s+e-1) b^{e-1}_j - (s+e) b^e_j; and the Leibniz
// assembly c^eps_k(s,t) = sum_j binom(k,j) t^{k-j} b^eps_j(s).
struct LeibnizCoeffs {
    int K;
    std::vector<std::vector<Complex>> b; // b[j][eps], 0 <= eps <= j <= K
    std::vector<std::vector<Complex>> c; // c[k][eps], 0 <= eps <= k <= K
};
LeibnizCoeffs leibniz_coeffs(Complex s, Complex t, int K);

// Parameters of the depth-1 Euler-Maclaurin continuation.
struct ContinuationParams {
    int N = 1;
    int M = 4;
    int n_max = 50; // Fourier-sum truncation in the D2/D3 terms
    TruncationPolicy policy;
};

// The five pieces of the continuation formula, exposed for the D-term limit checks.
struct EmParts {
    Complex lead, half, d1, d2, d3;
    double abs_error;
    Complex total() const { return lead + half + d1 + d2 + d3; }
};
EmParts qzeta1_em_parts(const QParam& q, Complex s, Complex t, Complex z,
                        const ContinuationParams& cp);

// Euler-Maclaurin continuation of zeta_q(s,t,z) (r = 1) to Re(t) > N-M.
EvalResult qzeta1_em(const QParam& q, Complex s, Complex t, Complex z,
                     const ContinuationParams& cp);

// Binomial-theorem continuation, the workhorse evaluator:
// (1-q)^s sum_l binom(s+l-1,l) q^{lz} prod_j (1-q^{w_j(t-j+1+l)})^{-1},
// all complex s,t off the pole lattice t in j-1+Z_{<=0}+delta_j Z.
EvalResult qzeta_binomial_ac(int r, const QParam& q, Complex s, Complex t, Complex z,
                             const Weights& omega, const TruncationPolicy& policy);

// zeta^{(nu)}_{q,r}(s,z;omega) = zeta_{q,r}(s, s-nu, z; omega); real-axis poles
// at s = 1, ..., r+nu-1 surface as PoleError with the offending location.
EvalResult qzeta_nu(int r, const QParam& q, Complex s, Complex z, int nu,
                    const Weights& omega, const TruncationPolicy& policy);

// Closed-form special value zeta^{(nu)}_{q,r}(-m, z; omega), m >= 0.
Complex qzeta_special_value(int r, const QParam& q, int m, Complex z, int nu,
                            const Weights& omega);

// z-ladder zeta_{q,r}(s,t,z) = q^{t-r+1} zeta_{q,r}(s,t,z+1) + zeta_{q,r-1}(s,t,z)
// (omega = 1 only), shifting until Re(z) > 0; base zeta_{q,0} = [z]_q^{-s}.
EvalResult qzeta_ladder(int r, const QParam& q, Complex s, Complex t, Complex z,
                        const TruncationPolicy& policy);

// Ready-made depth-1 evaluators for qzeta_reduce.
Depth1Evaluator depth1_direct(const QParam& q, Complex z, const TruncationPolicy& policy);
Depth1Evaluator depth1_binomial_ac(const QParam& q, Complex z, const TruncationPolicy& policy);
Depth1Evaluator depth1_em(const QParam& q, Complex z, const ContinuationParams& cp);

} // namespace qbarnes::qzeta

#endif
