#include "qbarnes/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace qbarnes::quad {

namespace {
constexpr int N = 20;

// Legendre P_N and derivative at x
void legendre(double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= N; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = N * (x * p1 - p0) / (x * x - 1.0);
}
} // namespace

const GaussRule& GaussRule::get() {
    static const GaussRule rule = [] {
        GaussRule r{};
        for (int i = 0; i < N; ++i) {
            // Chebyshev initial guess, polished by Newton
            double x = std::cos(std::numbers::pi * (i + 0.75) / (N + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p, dp;
                legendre(x, p, dp);
                const double dx = p / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            double p, dp;
            legendre(x, p, dp);
            r.node[i] = x;
            r.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        return r;
    }();
    return rule;
}

Complex panel(const Integrand& f, double a, double b) {
    const GaussRule& r = GaussRule::get();
    const double h = 0.5 * (b - a), m = 0.5 * (a + b);
    Complex acc = 0.0;
    for (int i = 0; i < N; ++i)
        acc += r.weight[i] * f(m + h * r.node[i]);
    return h * acc;
}

namespace {
void integrate_rec(const Integrand& f, double a, double b, double tol, int depth,
                   Complex coarse, QuadResult& out) {
    const double m = 0.5 * (a + b);
    const Complex left = panel(f, a, m);
    const Complex right = panel(f, m, b);
    out.evaluations += 2 * N;
    const Complex fine = left + right;
    const double err = std::abs(fine - coarse);
    if (err < tol || depth <= 0) {
        out.value += fine;
        out.abs_error += err;
        return;
    }
    integrate_rec(f, a, m, 0.5 * tol, depth - 1, left, out);
    integrate_rec(f, m, b, 0.5 * tol, depth - 1, right, out);
}
} // namespace

QuadResult integrate(const Integrand& f, double a, double b, double tol, int max_depth) {
    QuadResult out;
    const Complex coarse = panel(f, a, b);
    out.evaluations = N;
    integrate_rec(f, a, b, tol, max_depth, coarse, out);
    return out;
}

Complex fixed_panels(const Integrand& f, double a, double b, int n_panels) {
    Complex acc = 0.0;
    const double h = (b - a) / n_panels;
    for (int i = 0; i < n_panels; ++i)
        acc += panel(f, a + i * h, a + (i + 1) * h);
    return acc;
}

} // namespace qbarnes::quad
