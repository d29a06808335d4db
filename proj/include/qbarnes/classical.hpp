#ifndef QBARNES_CLASSICAL_HPP
#define QBARNES_CLASSICAL_HPP

#include <vector>

#include "qbarnes/rational.hpp"
#include "qbarnes/types.hpp"

namespace qbarnes::classical {

// Euler-Maclaurin depth and quadrature limits for the continuation.
struct EMConfig {
    int M = 8;                // continuation valid for Re(s) > -M
    double quad_cutoff = 0.0; // 0 = derive the tail cut from the tolerance
    TruncationPolicy policy;
};

// zeta(s,z) = sum_{n>=0} (n+z)^{-s}, Re(s) > 1: partial sum plus integral tail.
EvalResult hurwitz_direct(Complex s, Complex z, const TruncationPolicy& policy);

// Euler-Maclaurin continuation of the Hurwitz zeta function to Re(s) > -M,
// valid for Re(z) > 0; simple pole at s = 1.
EvalResult hurwitz_em(Complex s, Complex z, const EMConfig& cfg);

// int_0^infty B~_{M+1}(x) (x+z)^{-s-M-1} dx, per-unit-interval quadrature
// truncated when the analytic tail bound drops below tol.
Complex em_tail_integral(Complex s, Complex z, int M, double tol, double cutoff = 0.0);

// Polynomials P^l_r(z) with binom(n+r-1, r-1) = sum_l P^l_r(z) (n+z)^l.
class BarnesPolys {
public:
    explicit BarnesPolys(int r);
    int r() const { return r_; }
    const RationalPoly& poly(int l) const; // P^l_r as a polynomial in z
    Complex eval(int l, Complex z) const;
    std::vector<Complex> eval_all(Complex z) const;

private:
    int r_;
    std::vector<RationalPoly> polys_;
};

inline BarnesPolys barnes_polys(int r) { return BarnesPolys(r); }

// zeta_r(s,z) = sum_l P^l_r(z) zeta(s-l, z); the z-ladder
// zeta_r(s,z) = zeta_r(s,z+1) + zeta_{r-1}(s,z) extends Re(z) <= 0.
// cfgs supplies one EMConfig per level l; missing levels get defaults.
EvalResult barnes_zeta(int r, Complex s, Complex z, std::vector<EMConfig> cfgs = {});

// zeta_1(s,z;omega) = omega^{-s} zeta(s, z/omega)
EvalResult barnes_r1_scaled(Complex s, Complex z, double omega, const EMConfig& cfg);

} // namespace qbarnes::classical

#endif
