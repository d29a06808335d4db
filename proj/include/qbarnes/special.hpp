#ifndef QBARNES_SPECIAL_HPP
#define QBARNES_SPECIAL_HPP

#include "qbarnes/types.hpp"

namespace qbarnes::special {

// Principal-branch complex power. A base on the negative real axis (or a
// zero base with a non-positive exponent) raises BranchError instead of
// silently picking a side of the cut.
Complex cpow(Complex base, Complex expo);

// Complex gamma function; Lanczos approximation with reflection for
// Re(z) < 1/2. Poles at the nonpositive integers.
Complex gamma(Complex z);

// B(a,b) = Gamma(a) Gamma(b) / Gamma(a+b)
Complex beta(Complex a, Complex b);

struct IncompleteBetaArgs {
    Complex w;      // here always w = q^z; the quadrature route wants Re(w) in (0,1)
    Complex alpha;
    Complex beta;
};

// b_w(alpha, beta) = int_0^w u^{alpha-1} (1-u)^{beta-1} du along the straight
// segment, adaptive quadrature; the u=0 endpoint singularity for Re(alpha) < 1
// is removed by the substitution u = w v^{1/Re(alpha)}.
EvalResult incomplete_beta_direct(const IncompleteBetaArgs& args, const TruncationPolicy& policy);

// Integration-by-parts continuation of b_w to Re(alpha) > 1 - N'.
EvalResult incomplete_beta_continued(const IncompleteBetaArgs& args, int n_prime,
                                     const TruncationPolicy& policy);

// Dispatcher: direct route when Re(alpha) > 1/2, else continued with an N'
// large enough for the given alpha.
EvalResult incomplete_beta(const IncompleteBetaArgs& args, const TruncationPolicy& policy);

} // namespace qbarnes::special

#endif
