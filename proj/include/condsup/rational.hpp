#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "condsup/errors.hpp"

namespace condsup {

/// Arbitrary precision rational; every order and finance computation in the
/// library is exact.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Canonical text form: "n" for integers, "p/q" (reduced, q > 0) otherwise.
inline std::string to_string(const Rational& x) {
    const Integer& den = boost::multiprecision::denominator(x);
    std::string out = boost::multiprecision::numerator(x).str();
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    return out;
}

/// Equality on reduced representations; much cheaper than `==` on
/// cpp_rational, which cross-multiplies.
inline bool same_value(const Rational& a, const Rational& b) {
    return boost::multiprecision::numerator(a) == boost::multiprecision::numerator(b) &&
           boost::multiprecision::denominator(a) == boost::multiprecision::denominator(b);
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Parses "[+-]digits" or "[+-]digits/digits". Decimal points, exponents,
/// whitespace and zero denominators are rejected; the error message carries
/// the offending character offset.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&](std::size_t at, const std::string& why) -> ParseError {
        return ParseError("", "invalid rational \"" + std::string(text) + "\" at offset " +
                                  std::to_string(at) + ": " + why);
    };
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    std::size_t num_end = digits(i);
    if (num_end == i) throw fail(i, "expected digits");
    Integer num(std::string(text.substr(i, num_end - i)));
    Integer den = 1;
    i = num_end;
    if (i < text.size()) {
        if (text[i] == '.' || text[i] == 'e' || text[i] == 'E')
            throw fail(i, "decimal notation is not accepted, write p/q");
        if (text[i] != '/') throw fail(i, "unexpected character");
        ++i;
        std::size_t den_end = digits(i);
        if (den_end == i) throw fail(i, "expected denominator digits");
        den = Integer(std::string(text.substr(i, den_end - i)));
        if (den == 0) throw fail(i, "zero denominator");
        if (den_end != text.size()) throw fail(den_end, "unexpected character");
    }
    Rational value(num, den);
    return negative ? Rational(-value) : value;
}

}  // namespace condsup
