#pragma once

/**
 * @file scalar.hpp
 * @brief Numeric backend contract shared by the fast floating-point path and
 *        the exact big-rational path.
 *
 * Every algorithm in this library is written once, generically, against the
 * ScalarField concept below.  Two realizations are provided:
 *
 *   - double: stored values have unit roundoff 2^-53.  Internal accumulations
 *     run in scalar_traits<double>::accum_type (80-bit extended on x86-64,
 *     unit roundoff 2^-64) so that products and sums with ~10^3 factors keep
 *     several decimal digits of headroom beyond the stored precision.
 *   - Rational (see rational.hpp): arbitrary-precision rationals, no rounding
 *     anywhere, decidable equality.  This is the verification backend.
 */

#include <concepts>
#include <stdexcept>

namespace pqbern {

/// Per-backend policy. Specialized for double here and for Rational in
/// rational.hpp.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;

    /// Wider type used for internal accumulation (x87 extended precision on
    /// x86-64; at worst it aliases double on other ABIs, which only shrinks
    /// the guard digits, never changes semantics).
    using accum_type = long double;

    static double from_ratio(long long num, long long den) {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    static double from_accum(accum_type a) { return static_cast<double>(a); }
    static double to_double(double v) { return v; }
};

template <class S>
concept ScalarField = requires(S a, S b) {
    requires std::copyable<S>;
    S(0);
    S(1);
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { a < b } -> std::convertible_to<bool>;
    { a <= b } -> std::convertible_to<bool>;
    typename scalar_traits<S>::accum_type;
    { scalar_traits<S>::from_ratio(1LL, 2LL) } -> std::convertible_to<S>;
};

/// b^m by binary exponentiation, m >= 0. Exact for exact scalars, O(log m)
/// multiplications for all.
template <class S>
S pow_int(S base, long long m) {
    if (m < 0) {
        throw std::domain_error("pow_int: exponent must be nonnegative");
    }
    S acc(1);
    while (m > 0) {
        if (m & 1) acc = acc * base;
        m >>= 1;
        if (m > 0) base = base * base;
    }
    return acc;
}

/// num/den in the requested backend.
template <ScalarField S>
S ratio(long long num, long long den) {
    return scalar_traits<S>::from_ratio(num, den);
}

}  // namespace pqbern
