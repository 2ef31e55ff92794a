#include "bernpoly/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace bernpoly {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    return all_digits(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!valid_integer(num) || !all_digits(den))
            throw std::invalid_argument("parse_rational: bad fraction '" + s + "'");
        return make_rational(Integer(num, 10), Integer(den, 10));
    }

    // Decimal / scientific forms are converted exactly: shift the point
    // out and scale by the matching power of ten.
    std::string mantissa = s;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        mantissa = s.substr(0, e);
        std::string es = s.substr(e + 1);
        if (!valid_integer(es)) throw std::invalid_argument("parse_rational: bad exponent '" + s + "'");
        exp10 = std::strtol(es.c_str(), nullptr, 10);
    }
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
        exp10 -= static_cast<long>(mantissa.size() - dot - 1);
        mantissa.erase(dot, 1);
    }
    if (!valid_integer(mantissa))
        throw std::invalid_argument("parse_rational: bad number '" + s + "'");

    Rational q{Integer(mantissa, 10)};
    Integer scale = pow_integer(10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 < 0)
        q /= Rational(scale);
    else
        q *= Rational(scale);
    q.canonicalize();
    return q;
}

}  // namespace bernpoly
