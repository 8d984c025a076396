#include "pprog/prob.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pprog {

using boost::multiprecision::cpp_int;

Rational rational_from_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty numeric literal");
    std::string digits;
    int frac_digits = 0;
    bool seen_dot = false;
    for (char c : text) {
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("multiple '.' in literal");
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_dot) ++frac_digits;
        } else {
            throw std::invalid_argument("bad character in numeric literal");
        }
    }
    if (digits.empty()) throw std::invalid_argument("no digits in literal");
    cpp_int num(digits);
    cpp_int den = 1;
    for (int i = 0; i < frac_digits; ++i) den *= 10;
    return Rational(num, den);
}

std::string decimal_from_rational(const Rational& value) {
    cpp_int num = numerator(value);
    cpp_int den = denominator(value);
    if (den == 1) return num.str();
    // factor the denominator as 2^a * 5^b; anything else has no finite decimal
    cpp_int d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return num.str() + "/" + den.str();
    int k = std::max(twos, fives);
    cpp_int scale = 1;
    for (int i = 0; i < k; ++i) scale *= 10;
    cpp_int scaled = num * scale / den;
    std::string s = scaled.str();
    if (static_cast<int>(s.size()) <= k) s.insert(0, k + 1 - s.size(), '0');
    s.insert(s.size() - k, ".");
    return s;
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("non-finite double");
    if (value == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(value, &exp);  // value = mant * 2^exp, |mant| in [0.5,1)
    // 53 shifts make the mantissa integral
    cpp_int m = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(m);
    if (exp >= 0) {
        r *= Rational(cpp_int(1) << exp);
    } else {
        r /= Rational(cpp_int(1) << -exp);
    }
    return r;
}

std::string format_double(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

}  // namespace pprog
