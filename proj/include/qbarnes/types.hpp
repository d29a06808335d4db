#ifndef QBARNES_TYPES_HPP
#define QBARNES_TYPES_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qbarnes/errors.hpp"

namespace qbarnes {

using Complex = std::complex<double>;

// Base of every q-series; the standing assumption is 0 < q < 1 strictly.
class QParam {
public:
    explicit QParam(double q) : q_(q), log_q_(std::log(q)) {
        if (!(q > 0.0) || !(q < 1.0))
            throw DomainError("QParam: q must lie strictly inside (0,1), got " + std::to_string(q));
    }
    double value() const { return q_; }
    double log() const { return log_q_; }            // ln q, negative
    Complex pow(Complex e) const { return std::exp(e * log_q_); }  // q^e, principal
    double pow(double e) const { return std::exp(e * log_q_); }

private:
    double q_;
    double log_q_;
};

// Barnes parameter omega = (w_1, ..., w_r), all positive.
class Weights {
public:
    explicit Weights(std::vector<double> w) : w_(std::move(w)) {
        if (w_.empty())
            throw DomainError("Weights: need r >= 1 components");
        for (double wi : w_)
            if (!(wi > 0.0))
                throw DomainError("Weights: components must be positive");
    }
    static Weights ones(int r) { return Weights(std::vector<double>(static_cast<std::size_t>(r), 1.0)); }

    int r() const { return static_cast<int>(w_.size()); }
    double operator[](int j) const { return w_[static_cast<std::size_t>(j)]; }
    const std::vector<double>& values() const { return w_; }
    bool all_ones() const {
        for (double wi : w_)
            if (wi != 1.0) return false;
        return true;
    }

private:
    std::vector<double> w_;
};

// Tolerances and caps governing every infinite sum / integral.
struct TruncationPolicy {
    double tol = 1e-12;             // absolute series tolerance
    double quad_tol = 1e-12;        // quadrature tolerance
    std::size_t max_terms = 100000; // series cap; hitting it keeps the partial sum and its tail bound
};

enum class Method {
    direct_series,
    qbinom_series,
    reduction,
    binomial_ac,
    euler_maclaurin,
    ladder,
    quadrature,
    special_value,
    closed_form,
    scaled,
};

const char* method_name(Method m);

struct EvalResult {
    Complex value{};
    double abs_error = 0.0;
    Method method = Method::direct_series;
    std::size_t terms = 0;
};

} // namespace qbarnes

#endif
