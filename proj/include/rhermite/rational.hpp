#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rhermite {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;  // prints "p/q", or "p" when the denominator is 1
    return os.str();
}

inline std::string to_string(const BigInt& n) {
    std::ostringstream os;
    os << n;
    return os.str();
}

// Accepts "p", "-p", or "p/q" with decimal digits only.  Anything else,
// including a zero denominator, raises std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
    const auto fail = [&] {
        throw std::invalid_argument("expected a rational like \"7/3\" or \"-2\", got \"" +
                                    std::string(text) + "\"");
    };
    if (!text.empty() && text[0] == '+') text.remove_prefix(1);
    std::size_t pos = 0;
    const auto digits = [&] {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) fail();
    };
    if (pos < text.size() && text[pos] == '-') ++pos;
    digits();
    if (pos < text.size()) {
        if (text[pos] != '/') fail();
        ++pos;
        digits();
        if (pos != text.size()) fail();
        std::size_t slash = text.find('/');
        BigInt num(std::string(text.substr(0, slash)));
        BigInt den(std::string(text.substr(slash + 1)));
        if (den == 0) fail();
        return Rational(num, den);
    }
    return Rational(BigInt(std::string(text)));
}

// cpp_int division truncates toward zero; gamma-argument normalization
// needs true floor semantics for negative numerators.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt rational_floor(const Rational& q) {
    return floor_div(numerator(q), denominator(q));
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline long long to_long(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("not an integer: " + to_string(q));
    return numerator(q).convert_to<long long>();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational pow2(int k) {
    if (k >= 0) return Rational(BigInt(1) << k);
    return Rational(BigInt(1), BigInt(1) << (-k));
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace rhermite
