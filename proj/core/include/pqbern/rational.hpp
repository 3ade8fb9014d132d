#pragma once

/**
 * @file rational.hpp
 * @brief Exact big-rational scalar backend.
 *
 * Rational is boost::multiprecision's cpp_int-backed rational with expression
 * templates disabled, so it behaves as a plain value type in generic code.
 * All arithmetic is exact and equality is decidable, which is what lets the
 * test suites assert algebraic identities with == instead of tolerances.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pqbern/scalar.hpp"

namespace pqbern {

using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using BigInt = boost::multiprecision::cpp_int;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    using accum_type = Rational;

    static Rational from_ratio(long long num, long long den) { return Rational(num, den); }
    static Rational from_accum(const Rational& a) { return a; }
    static double to_double(const Rational& v) { return v.convert_to<double>(); }
};

inline double to_double(const Rational& v) { return v.convert_to<double>(); }

/// Canonical text form: "n/d" in lowest terms, or just "n" when d == 1.
inline std::string to_string(const Rational& v) {
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Round-trip a Rational into the requested backend.
template <ScalarField S>
S scalar_from_rational(const Rational& v) {
    if constexpr (scalar_traits<S>::is_exact) {
        return v;
    } else {
        return static_cast<S>(scalar_traits<Rational>::to_double(v));
    }
}

namespace detail {

inline BigInt parse_digits(std::string_view text, const char* what) {
    if (text.empty()) throw std::invalid_argument(std::string("expected digits in ") + what);
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument(std::string("invalid digit in ") + what + ": '" + std::string(text) + "'");
        }
    }
    // cpp_int's string constructor reads a leading 0 as an octal prefix;
    // strip redundant zeros so "025" parses as decimal 25.
    while (text.size() > 1 && text.front() == '0') text.remove_prefix(1);
    return BigInt(std::string(text));
}

}  // namespace detail

/// Parses "3", "-9/10", "0.25" or "2.5e-3" into an exact rational. Decimal
/// strings are read in base 10, so "0.1" becomes exactly 1/10.
inline Rational parse_rational(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    if (rest.empty()) throw std::invalid_argument("empty rational literal");

    const auto slash = rest.find('/');
    Rational value;
    if (slash != std::string_view::npos) {
        const BigInt num = detail::parse_digits(rest.substr(0, slash), "numerator");
        const BigInt den = detail::parse_digits(rest.substr(slash + 1), "denominator");
        if (den == 0) throw std::invalid_argument("rational literal with zero denominator");
        value = Rational(num, den);
    } else {
        // [digits][.digits][ (e|E)[sign]digits ]
        std::string_view mantissa = rest;
        long long exp10 = 0;
        const auto epos = rest.find_first_of("eE");
        if (epos != std::string_view::npos) {
            mantissa = rest.substr(0, epos);
            std::string_view etext = rest.substr(epos + 1);
            bool eneg = false;
            if (!etext.empty() && (etext.front() == '+' || etext.front() == '-')) {
                eneg = etext.front() == '-';
                etext.remove_prefix(1);
            }
            const BigInt e = detail::parse_digits(etext, "exponent");
            if (e > 9999) throw std::invalid_argument("decimal exponent out of range");
            exp10 = e.convert_to<long long>() * (eneg ? -1 : 1);
        }
        const auto dot = mantissa.find('.');
        std::string digits;
        long long frac_len = 0;
        if (dot == std::string_view::npos) {
            digits = std::string(mantissa);
        } else {
            digits = std::string(mantissa.substr(0, dot)) + std::string(mantissa.substr(dot + 1));
            frac_len = static_cast<long long>(mantissa.size() - dot - 1);
        }
        if (digits.empty()) throw std::invalid_argument("empty decimal literal");
        const BigInt scaled = detail::parse_digits(digits, "decimal literal");
        const long long shift = exp10 - frac_len;
        const BigInt pow10 = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
        value = shift < 0 ? Rational(scaled, pow10) : Rational(scaled * pow10);
    }
    return negative ? Rational(-value) : value;
}

}  // namespace pqbern
