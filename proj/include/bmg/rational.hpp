#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bmg {

/// Exact arbitrary-precision rational. GMP keeps values canonical
/// (lowest terms, positive denominator), which is exactly the
/// representation every excess and LP computation relies on.
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q" or a plain integer. Throws std::invalid_argument on
/// malformed input or a zero denominator. Validation is manual because the
/// GMP string constructor divides by the denominator while canonicalizing.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("bad rational literal: " + std::string(text));
    };
    auto all_digits = [](std::string_view s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
    };
    std::string_view t = text;
    bool negative = false;
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
        negative = t.front() == '-';
        t.remove_prefix(1);
    }
    std::string_view num = t, den = "1";
    if (auto pos = t.find('/'); pos != std::string_view::npos) {
        num = t.substr(0, pos);
        den = t.substr(pos + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw bad();
    boost::multiprecision::mpz_int n{std::string(num)}, d{std::string(den)};
    if (d == 0)
        throw bad();
    Rational r = Rational(n) / Rational(d);
    return negative ? -r : r;
}

/// Formats as "p/q", integers without the "/1".
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace bmg
