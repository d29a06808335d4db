#ifndef QBARNES_VERIFY_HPP
#define QBARNES_VERIFY_HPP

#include <string>
#include <vector>

namespace qbarnes::verify {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail; // summary, or the first counterexample's inputs
};

struct Options {
    unsigned seed = 7;
    double q = 0.5;  // suites taking a single q honor this
    int N = 2;       // Gauss-Legendre order and friends
    bool quick = false;
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const Options& opt);
std::vector<SuiteResult> run_all(const Options& opt);

} // namespace qbarnes::verify

#endif
