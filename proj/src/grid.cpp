#include "qbarnes/grid.hpp"

#include <cmath>

#include "qbarnes/special.hpp"

namespace qbarnes::par {

namespace {
// sum over the sub-box with n_0 fixed, dims 1..r-1 free in [0,N)
Complex slice_sum(const Weights& omega, Complex z, Complex s, long N, long n0) {
    const int r = omega.r();
    std::vector<long> idx(static_cast<std::size_t>(r), 0);
    idx[0] = n0;
    Complex acc = 0.0;
    while (true) {
        double lat = 0.0;
        for (int j = 0; j < r; ++j) lat += static_cast<double>(idx[static_cast<std::size_t>(j)]) * omega[j];
        acc += std::exp(-s * std::log(lat + z));
        int k = r - 1;
        while (k >= 1) {
            if (++idx[static_cast<std::size_t>(k)] < N) break;
            idx[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 1) break;
    }
    return acc;
}

double tail_estimate(const Weights& omega, Complex z, Complex s, long N) {
    // crude integral-comparison bound per axis
    const int r = omega.r();
    double tail = 0.0;
    const double p = s.real() - r;
    for (int j = 0; j < r; ++j) {
        const double a = static_cast<double>(N) * omega[j] + z.real();
        tail += std::pow(a, -p) / (p * omega[j]);
    }
    return tail;
}
} // namespace

LatticeSum lattice_sum_serial(const Weights& omega, Complex z, Complex s, long N) {
    if (!(s.real() > omega.r()))
        throw DomainError("lattice_sum: needs Re(s) > r for convergence");
    Complex acc = 0.0;
    for (long n0 = 0; n0 < N; ++n0) acc += slice_sum(omega, z, s, N, n0);
    long long terms = 1;
    for (int j = 0; j < omega.r(); ++j) terms *= N;
    return {acc, tail_estimate(omega, z, s, N), terms};
}

LatticeSum lattice_sum(const Weights& omega, Complex z, Complex s, long N) {
    if (!(s.real() > omega.r()))
        throw DomainError("lattice_sum: needs Re(s) > r for convergence");
    std::vector<Complex> partial(static_cast<std::size_t>(N));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long n0 = 0; n0 < N; ++n0)
        partial[static_cast<std::size_t>(n0)] = slice_sum(omega, z, s, N, n0);
    Complex acc = 0.0;
    for (long n0 = 0; n0 < N; ++n0) acc += partial[static_cast<std::size_t>(n0)];
    long long terms = 1;
    for (int j = 0; j < omega.r(); ++j) terms *= N;
    return {acc, tail_estimate(omega, z, s, N), terms};
}

EvalResult lattice_zeta(const Weights& omega, Complex z, Complex s, long N) {
    const LatticeSum half = lattice_sum(omega, z, s, N / 2);
    const LatticeSum full = lattice_sum(omega, z, s, N);
    const double p = s.real() - omega.r();
    const double shrink = std::pow(2.0, -p);
    // V = V_N + (V_N - V_{N/2}) * shrink/(1-shrink) assuming tail ~ C N^{-p}
    const Complex corr = (full.value - half.value) * shrink / (1.0 - shrink);
    const double err = 2.0 * std::abs(corr) + 1e-14 * std::abs(full.value);
    return {full.value + corr, err, Method::direct_series,
            static_cast<std::size_t>(full.terms)};
}

} // namespace qbarnes::par
