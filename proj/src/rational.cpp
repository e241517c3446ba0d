#include "cesdual/rational.hpp"

#include <stdexcept>

namespace cesdual {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt p(text.substr(0, slash));
        BigInt q(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational `" + text + "`: " + e.what());
    }
}

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace cesdual
