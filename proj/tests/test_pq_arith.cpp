#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "pqbern/pq_arith.hpp"
#include "pqbern/rational.hpp"

using pqbern::PQParams;
using pqbern::Rational;

namespace {

PQParams<Rational> rational_params(const Rational& p, const Rational& q) { return {p, q}; }

}  // namespace

TEST_CASE("pq_integer matches the case table and the defining sum") {
    CHECK(pqbern::pq_integer(3, PQParams<double>(1.0, 1.0)) == 3.0);  // p=q=1 branch: n
    CHECK(pqbern::pq_integer(0, PQParams<double>(0.9, 0.5)) == 0.0);  // empty sum
    CHECK(pqbern::pq_integer(3, rational_params(Rational(1), Rational(1, 2))) == Rational(7, 4));
    CHECK(pqbern::pq_integer(2, PQParams<double>(0.9, 0.8)) == doctest::Approx(1.7).epsilon(1e-15));

    // The three closed forms agree exactly where each applies.
    for (const auto& [p, q] : oracle::rational_pq_grid()) {
        for (long long n = 0; n <= 16; ++n) {
            const Rational lib = pqbern::pq_integer(n, rational_params(p, q));
            CHECK(lib == oracle::bracket(n, p, q));
            if (p != q) {
                CHECK(lib == (oracle::rpow(p, n) - oracle::rpow(q, n)) / (p - q));
            }
        }
    }
    for (const Rational& p : {Rational(1), Rational(3, 4)}) {
        for (long long n = 0; n <= 16; ++n) {
            CHECK(pqbern::pq_integer(n, rational_params(p, p)) == Rational(n) * oracle::rpow(p, n - 1 >= 0 ? n - 1 : 0));
        }
    }
}

TEST_CASE("pq_integer recurrence, shift and scaling identities hold exactly") {
    for (const auto& [p, q] : oracle::rational_pq_grid()) {
        const auto params = rational_params(p, q);
        Rational prev = pqbern::pq_integer(0, params);
        for (long long k = 0; k <= 200; ++k) {
            const Rational next = pqbern::pq_integer(k + 1, params);
            // [k+1] = p^k + q [k]
            CHECK(next == oracle::rpow(p, k) + q * prev);
            // q [n-1] = [n] - p^{n-1} with n = k+1
            CHECK(q * prev == next - oracle::rpow(p, k));
            prev = next;
        }
        // [n]_{p,q} = p^{n-1} [n]_{1,q/p}
        const auto reduced = rational_params(Rational(1), q / p);
        for (long long n = 1; n <= 64; ++n) {
            CHECK(pqbern::pq_integer(n, params) ==
                  oracle::rpow(p, n - 1) * pqbern::pq_integer(n, reduced));
        }
    }
}

TEST_CASE("pq_integer limit trends: to zero for p<1, to 1/(1-q) for p=1") {
    const PQParams<double> inside(0.9, 0.5);
    const double b10 = pqbern::pq_integer(10, inside);
    const double b100 = pqbern::pq_integer(100, inside);
    const double b1000 = pqbern::pq_integer(1000, inside);
    CHECK(b10 > b100);
    CHECK(b100 > b1000);
    CHECK(b1000 < 1e-3);

    const PQParams<double> classical(1.0, 0.5);
    const double c10 = pqbern::pq_integer(10, classical);
    const double c100 = pqbern::pq_integer(100, classical);
    const double c1000 = pqbern::pq_integer(1000, classical);
    CHECK(c10 < c100);
    CHECK(c100 <= c1000);  // saturates at the double nearest to 1/(1-q)
    CHECK(c1000 <= 2.0);
    CHECK(c1000 == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("pq_factorial") {
    CHECK(pqbern::pq_factorial(0, PQParams<double>(0.7, 0.3)) == 1.0);
    CHECK(pqbern::pq_factorial(3, PQParams<double>(1.0, 1.0)) == 6.0);
    CHECK(pqbern::pq_factorial(2, rational_params(Rational(1), Rational(1, 2))) == Rational(3, 2));
    for (const auto& [p, q] : oracle::rational_pq_grid()) {
        for (long long n = 0; n <= 12; ++n) {
            CHECK(pqbern::pq_factorial(n, rational_params(p, q)) == oracle::factorial(n, p, q));
        }
    }
}

TEST_CASE("pq_binomial: factorial quotient, classical values, reduction identity") {
    CHECK(pqbern::pq_binomial(4, 2, PQParams<double>(1.0, 1.0)) == 6.0);
    CHECK(pqbern::pq_binomial(5, 0, PQParams<double>(0.8, 0.4)) == 1.0);
    CHECK(pqbern::pq_binomial(2, 1, rational_params(Rational(1, 2), Rational(1, 4))) == Rational(3, 4));
    CHECK_THROWS_AS(pqbern::pq_binomial(3, 4, PQParams<double>(1.0, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(pqbern::pq_binomial(3, -1, PQParams<double>(1.0, 1.0)), std::invalid_argument);

    for (const auto& [p, q] : oracle::rational_pq_grid()) {
        const auto params = rational_params(p, q);
        const auto reduced = rational_params(Rational(1), q / p);
        for (long long n = 0; n <= 12; ++n) {
            for (long long k = 0; k <= n; ++k) {
                const Rational lib = pqbern::pq_binomial(n, k, params);
                CHECK(lib == oracle::binomial(n, k, p, q));
                // binom(n,k;p,q) = p^{k(n-k)} binom(n,k;1,q/p)
                CHECK(lib == oracle::rpow(p, k * (n - k)) * pqbern::pq_binomial(n, k, reduced));
            }
        }
    }
}

TEST_CASE("pq_binomial float path tracks the exact oracle") {
    // 0.75 and 0.375 are exact binary fractions, so both backends see the
    // same parameters.
    const Rational p(3, 4), q(3, 8);
    for (long long n : {5LL, 12LL, 40LL}) {
        for (long long k = 0; k <= n; k += 3) {
            const double exact = pqbern::to_double(oracle::binomial(n, k, p, q));
            const double fast = pqbern::pq_binomial(n, k, PQParams<double>(0.75, 0.375));
            CHECK(fast == doctest::Approx(exact).epsilon(1e-13));
        }
    }
}

TEST_CASE("triangular_power") {
    CHECK(pqbern::triangular_power(0.5, 2) == 0.5);
    CHECK(pqbern::triangular_power(0.37, 0) == 1.0);
    CHECK(pqbern::triangular_power(0.37, 1) == 1.0);
    CHECK(pqbern::triangular_power(Rational(1, 2), 4) == Rational(1, 64));
    CHECK_THROWS_AS(pqbern::triangular_power(0.5, -1), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(PQParams<double>(0.5, 0.6), std::invalid_argument);   // q > p
    CHECK_THROWS_AS(PQParams<double>(1.2, 0.5), std::invalid_argument);   // p > 1
    CHECK_THROWS_AS(PQParams<double>(0.5, 0.0), std::invalid_argument);   // q = 0
    CHECK_THROWS_AS(PQParams<double>(0.5, -0.1), std::invalid_argument);  // q < 0
    const double nan = std::nan("");
    CHECK_THROWS_AS(PQParams<double>(nan, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(PQParams<double>(0.9, nan), std::invalid_argument);
    CHECK(PQParams<double>(1.0, 1.0).ratio() == 1.0);  // q = p admitted
    CHECK_THROWS_AS(pqbern::pq_integer(-1, PQParams<double>(1.0, 0.5)), std::invalid_argument);
    CHECK_THROWS_AS(pqbern::pow_int(2.0, -3), std::domain_error);
}
