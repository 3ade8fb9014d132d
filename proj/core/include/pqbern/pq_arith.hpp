#pragma once

/**
 * @file pq_arith.hpp
 * @brief (p,q)-integers, factorials and binomial coefficients.
 *
 * The (p,q)-integer is the two-parameter deformation
 *
 *     [n]_{p,q} = p^{n-1} + p^{n-2} q + ... + p q^{n-2} + q^{n-1},
 *
 * which reduces to the q-integer at p = 1 and to n at p = q = 1.  Everything
 * downstream (basis weights, nodes, moments) is built from these brackets.
 *
 * Floating-point strategy: brackets are evaluated by a Horner recurrence over
 * nonnegative terms (no cancellation), and the binomial coefficient never
 * forms the two huge factorials separately; it uses
 *
 *     binom(n,k; p,q) = p^{k(n-k)} * binom(n,k; 1, q/p)
 *
 * where the Gaussian (q/p)-binomial stays bounded by the classical binomial
 * for q <= p.  The exact backend evaluates the factorial quotient literally;
 * the two routes agreeing is one of the tested identities.
 */

#include <stdexcept>
#include <vector>

#include "pqbern/scalar.hpp"

namespace pqbern {

/// The parameter pair (p, q) with 0 < q <= p <= 1.
///
/// Equality q = p is admitted (it carries the classical limit branch); any
/// operation that analytically requires q < p validates that at its own
/// boundary.
template <ScalarField S>
class PQParams {
public:
    PQParams(S p, S q) : p_(std::move(p)), q_(std::move(q)) {
        if (!(S(0) < q_ && q_ <= p_ && p_ <= S(1))) {
            throw std::invalid_argument("PQParams: require 0 < q <= p <= 1");
        }
    }

    const S& p() const { return p_; }
    const S& q() const { return q_; }

    /// r = q/p in (0, 1].
    S ratio() const { return q_ / p_; }

private:
    S p_;
    S q_;
};

namespace detail {

/// Horner evaluation of [n] = sum_{j=0}^{n-1} p^{n-1-j} q^j in the
/// accumulation type: acc_1 = 1, acc_{j+1} = acc_j * p + q^j.
template <class A>
A bracket_accum(long long n, const A& p, const A& q) {
    if (n <= 0) return A(0);
    A acc(1);
    A qpow(1);
    for (long long j = 1; j < n; ++j) {
        qpow = qpow * q;
        acc = acc * p + qpow;
    }
    return acc;
}

}  // namespace detail

/// [n]_{p,q}. Returns 0 for n = 0.
template <ScalarField S>
S pq_integer(long long n, const PQParams<S>& params) {
    if (n < 0) throw std::invalid_argument("pq_integer: n must be nonnegative");
    using A = typename scalar_traits<S>::accum_type;
    return scalar_traits<S>::from_accum(detail::bracket_accum<A>(n, A(params.p()), A(params.q())));
}

/// [n]!_{p,q} = prod_{j=1}^{n} [j]_{p,q}, empty product = 1.
template <ScalarField S>
S pq_factorial(long long n, const PQParams<S>& params) {
    if (n < 0) throw std::invalid_argument("pq_factorial: n must be nonnegative");
    using A = typename scalar_traits<S>::accum_type;
    const A p(params.p());
    const A q(params.q());
    A fact(1);
    A bracket(0);  // [j], built by [j+1] = q^j + p*[j]
    A qpow(1);
    for (long long j = 0; j < n; ++j) {
        bracket = qpow + p * bracket;
        fact = fact * bracket;
        qpow = qpow * q;
    }
    return scalar_traits<S>::from_accum(fact);
}

namespace detail {

/// Gaussian r-binomial as a ratio product: prod_{j=1}^{k} [n-k+j]_r / [j]_r.
/// All brackets are positive for r > 0; bounded by the classical binomial for
/// r <= 1.
template <class A>
A gauss_binomial_ratio(long long n, long long k, const A& r) {
    A acc(1);
    for (long long j = 1; j <= k; ++j) {
        acc = acc * bracket_accum<A>(n - k + j, A(1), r) / bracket_accum<A>(j, A(1), r);
    }
    return acc;
}

}  // namespace detail

/// [n k]_{p,q} = [n]! / ([k]! [n-k]!).
template <ScalarField S>
S pq_binomial(long long n, long long k, const PQParams<S>& params) {
    if (n < 0 || k < 0 || k > n) {
        throw std::invalid_argument("pq_binomial: require 0 <= k <= n");
    }
    using A = typename scalar_traits<S>::accum_type;
    if constexpr (scalar_traits<S>::is_exact) {
        return pq_factorial(n, params) / (pq_factorial(k, params) * pq_factorial(n - k, params));
    } else {
        // p^{k(n-k)} * gauss(n,k; q/p): the factorials would underflow for
        // p < 1 well before n = 100, the reduced form only underflows when
        // the value itself does.
        const A r = A(params.q()) / A(params.p());
        const A scale = pow_int(A(params.p()), k * (n - k));
        return scalar_traits<S>::from_accum(scale * detail::gauss_binomial_ratio<A>(n, k, r));
    }
}

/// base^{m(m-1)/2}.
///
/// Exists as a named operation because the triangular exponent grows
/// quadratically: for p < 1 this underflows double precision at moderate m
/// (0.9^4950 ~ 1e-227 at m = 100), so the floating-point evaluator only ever
/// uses it inside exponent-cancelled combinations. On its own it is intended
/// for exact-backend work and small m.
template <ScalarField S>
S triangular_power(const S& base, long long m) {
    if (m < 0) throw std::invalid_argument("triangular_power: m must be nonnegative");
    if (m > 3'000'000'000LL) throw std::invalid_argument("triangular_power: exponent overflow");
    return pow_int(base, m * (m - 1) / 2);
}

}  // namespace pqbern
