#ifndef QBARNES_ERRORS_HPP
#define QBARNES_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace qbarnes {

// Root of the error hierarchy; everything the library throws derives from this.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside an operation's contract (wrong half-plane, bad index range, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Evaluation requested at (or within guard distance of) a pole; carries the location.
class PoleError : public Error {
public:
    PoleError(const std::string& what, std::complex<double> where, std::string variable)
        : Error(what), location(where), var(std::move(variable)) {}
    std::complex<double> location;
    std::string var; // which variable the pole lives in ("s", "t", "z", ...)
};

// Table or enumeration capacity exceeded (Bernoulli cap, composition-sum guard, ...).
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error(what) {}
};

// A principal-branch power whose base landed on the negative real axis.
class BranchError : public Error {
public:
    explicit BranchError(const std::string& what) : Error(what) {}
};

// A single series term is singular ([n*omega+z]_q ~ 0).
class SingularTermError : public Error {
public:
    explicit SingularTermError(const std::string& what) : Error(what) {}
};

} // namespace qbarnes

#endif
