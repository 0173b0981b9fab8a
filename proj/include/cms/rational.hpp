#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "cms/errors.hpp"

namespace cms {

/// Arbitrary-precision rational. GMP keeps every arithmetic result in lowest
/// terms with a positive denominator; construct through `make_rational` when
/// supplying numerator and denominator separately.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw InvalidArgument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q", "p" or a JSON-style integer string.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\n')) s.pop_back();
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    if (s.empty()) throw InvalidArgument("empty rational literal");
    if (s.front() == '+') s.erase(s.begin());
    Rational r;
    if (r.set_str(s, 10) != 0) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    if (r.get_den() == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

/// Canonical "p/q" rendering (always with an explicit denominator).
inline std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Short rendering for human-readable tables: "p" when integral.
inline std::string to_display(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return to_string(r);
}

inline Rational pow(const Rational& base, int e) {
    Rational result = 1;
    Rational b = base;
    if (e < 0) {
        if (b == 0) throw InvalidArgument("negative power of zero");
        b = 1 / b;
        e = -e;
    }
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

}  // namespace cms
