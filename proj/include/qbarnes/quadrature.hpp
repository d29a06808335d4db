#ifndef QBARNES_QUADRATURE_HPP
#define QBARNES_QUADRATURE_HPP

#include <functional>

#include "qbarnes/types.hpp"

namespace qbarnes::quad {

// Gauss-Legendre rule on [-1,1]; nodes/weights generated once by Newton
// iteration on P_n. n is fixed at 20 points.
struct GaussRule {
    static const GaussRule& get();
    double node[20];
    double weight[20];
};

using Integrand = std::function<Complex(double)>;

// One 20-point panel on [a,b].
Complex panel(const Integrand& f, double a, double b);

struct QuadResult {
    Complex value{};
    double abs_error = 0.0;
    std::size_t evaluations = 0;
};

// Adaptive bisection with panel-vs-halves error estimate.
QuadResult integrate(const Integrand& f, double a, double b, double tol, int max_depth = 24);

// Non-adaptive sweep of equal panels; for integrands known smooth per panel.
Complex fixed_panels(const Integrand& f, double a, double b, int n_panels);

} // namespace qbarnes::quad

#endif
