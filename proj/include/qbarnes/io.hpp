#ifndef QBARNES_IO_HPP
#define QBARNES_IO_HPP

#include <string>
#include <vector>

#include "qbarnes/types.hpp"

namespace qbarnes::io {

// Complex literals "a", "ai", "a+bi", "a-bi", "i", "-i"; locale-independent
// decimal point. Throws DomainError on malformed input.
Complex parse_complex(const std::string& text);

// Comma-separated positive reals, e.g. "1,2,0.5".
Weights parse_weights(const std::string& text);

// 17 significant digits; round-trips through parse within 1 ulp.
std::string format_double(double v);
std::string format_complex(Complex v);

// RFC-4180: quote fields containing comma, quote or newline, doubling quotes.
std::string csv_escape(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

// One flat JSON object per line; values are either pre-formatted numbers or strings.
class JsonLine {
public:
    JsonLine& num(const std::string& key, double v);
    JsonLine& str(const std::string& key, const std::string& v);
    std::string done() const;

private:
    std::string body_;
};

} // namespace qbarnes::io

#endif
