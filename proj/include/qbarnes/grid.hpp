#ifndef QBARNES_GRID_HPP
#define QBARNES_GRID_HPP

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

#include "qbarnes/types.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qbarnes::par {

// Evaluate f(i) for i in [0, n) into a vector. The OpenMP version writes by
// index, so the result is identical to the serial reference regardless of
// thread count. Exceptions are captured and the lowest-index one rethrown.
template <typename T, typename F>
std::vector<T> map_indexed_serial(std::size_t n, F&& f) {
    std::vector<T> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
}

template <typename T, typename F>
std::vector<T> map_indexed(std::size_t n, F&& f) {
    std::vector<T> out(n);
    std::vector<std::exception_ptr> errs(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        } catch (...) {
            errs[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

struct LatticeSum {
    Complex value{};
    double tail_bound = 0.0;
    long long terms = 0;
};

// Brute-force sum of (n.omega + z)^{-s} over the box [0,N)^r. The parallel
// kernel reduces per outer slice and accumulates slices in order, so its
// result does not depend on the thread count.
LatticeSum lattice_sum_serial(const Weights& omega, Complex z, Complex s, long N);
LatticeSum lattice_sum(const Weights& omega, Complex z, Complex s, long N);

// Richardson-extrapolated brute-force value of zeta_r(s,z;omega), Re(s) > r:
// boxes of side N/2 and N, correction rate N^{r - Re s}.
EvalResult lattice_zeta(const Weights& omega, Complex z, Complex s, long N);

} // namespace qbarnes::par

#endif
