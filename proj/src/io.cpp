#include "qbarnes/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace qbarnes {

const char* method_name(Method m) {
    switch (m) {
        case Method::direct_series: return "direct-series";
        case Method::qbinom_series: return "qbinom-series";
        case Method::reduction: return "reduction";
        case Method::binomial_ac: return "binomial-ac";
        case Method::euler_maclaurin: return "euler-maclaurin";
        case Method::ladder: return "ladder";
        case Method::quadrature: return "quadrature";
        case Method::special_value: return "special-value";
        case Method::closed_form: return "closed-form";
        case Method::scaled: return "scaled";
    }
    return "unknown";
}

} // namespace qbarnes

namespace qbarnes::io {

namespace {
// strtod is locale-dependent through LC_NUMERIC; parse with a C-locale shim
double parse_real(const char* begin, const char** end) {
    errno = 0;
    char* e = nullptr;
    const double v = std::strtod(begin, &e);
    if (e == begin || errno == ERANGE)
        throw DomainError(std::string("parse_complex: bad numeric literal in \"") + begin + "\"");
    *end = e;
    return v;
}
} // namespace

Complex parse_complex(const std::string& text) {
    std::string t;
    t.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw DomainError("parse_complex: empty literal");

    // pure-imaginary shorthand "i", "-i", "+i"
    if (t == "i") return {0.0, 1.0};
    if (t == "-i") return {0.0, -1.0};
    if (t == "+i") return {0.0, 1.0};

    const char* p = t.c_str();
    const char* end = nullptr;
    const double first = parse_real(p, &end);
    if (*end == '\0') return {first, 0.0};
    if (*end == 'i' && *(end + 1) == '\0') return {0.0, first};

    if (*end != '+' && *end != '-')
        throw DomainError("parse_complex: malformed literal \"" + text + "\"");
    if ((*end == '+' && *(end + 1) == 'i' && *(end + 2) == '\0'))
        return {first, 1.0};
    if ((*end == '-' && *(end + 1) == 'i' && *(end + 2) == '\0'))
        return {first, -1.0};

    const char* p2 = end;
    const char* end2 = nullptr;
    const double second = parse_real(p2, &end2);
    if (*end2 == 'i' && *(end2 + 1) == '\0') return {first, second};
    throw DomainError("parse_complex: malformed literal \"" + text + "\"");
}

Weights parse_weights(const std::string& text) {
    std::vector<double> w;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                                : comma - start);
        const char* end = nullptr;
        w.push_back(parse_real(piece.c_str(), &end));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Weights(w);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(Complex v) {
    if (v.imag() == 0.0) return format_double(v.real());
    std::string s = format_double(v.real());
    if (v.imag() >= 0.0 || std::isnan(v.imag())) s += "+";
    s += format_double(v.imag());
    s += "i";
    return s;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ",";
        out += csv_escape(fields[i]);
    }
    out += "\r\n";
    return out;
}

namespace {
std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += "\"";
    return out;
}
} // namespace

JsonLine& JsonLine::num(const std::string& key, double v) {
    if (!body_.empty()) body_ += ",";
    body_ += json_quote(key) + ":" + format_double(v);
    return *this;
}

JsonLine& JsonLine::str(const std::string& key, const std::string& v) {
    if (!body_.empty()) body_ += ",";
    body_ += json_quote(key) + ":" + json_quote(v);
    return *this;
}

std::string JsonLine::done() const { return "{" + body_ + "}"; }

} // namespace qbarnes::io
