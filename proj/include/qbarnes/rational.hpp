#ifndef QBARNES_RATIONAL_HPP
#define QBARNES_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qbarnes/errors.hpp"

namespace qbarnes {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Polynomial in the indeterminate q with exact rational coefficients,
// ascending degree. Arithmetic never rounds; identity tests on this type
// are equality checks, not tolerance checks.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(Rational c0) { if (c0 != 0) c_.push_back(std::move(c0)); }
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalPoly one() { return RationalPoly(Rational(1)); }
    // q^k
    static RationalPoly monomial(std::size_t k, Rational coeff = Rational(1)) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = std::move(coeff);
        return RationalPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    RationalPoly& operator+=(const RationalPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    RationalPoly& operator-=(const RationalPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { a += b; return a; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { a -= b; return a; }

    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        if (a.is_zero() || b.is_zero()) return RationalPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return RationalPoly(std::move(c));
    }
    friend RationalPoly operator*(const Rational& s, RationalPoly p) {
        if (s == 0) return RationalPoly();
        for (auto& ci : p.c_) ci *= s;
        return p;
    }
    // multiply by q^k
    RationalPoly shifted(std::size_t k) const {
        if (is_zero()) return RationalPoly();
        std::vector<Rational> c(c_.size() + k, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return RationalPoly(std::move(c));
    }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

    Rational eval(const Rational& q) const {
        Rational v(0);
        for (std::size_t i = c_.size(); i-- > 0;) v = v * q + c_[i];
        return v;
    }
    double eval(double q) const {
        double v = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) v = v * q + to_double(c_[i]);
        return v;
    }
    std::complex<double> eval(std::complex<double> q) const {
        std::complex<double> v = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) v = v * q + to_double(c_[i]);
        return v;
    }

    bool is_palindromic() const {
        for (std::size_t i = 0, j = c_.size(); i < j; ++i)
            if (c_[i] != c_[c_.size() - 1 - i]) return false;
        return true;
    }

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

} // namespace qbarnes

#endif
