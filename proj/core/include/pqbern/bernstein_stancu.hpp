#pragma once

/**
 * @file bernstein_stancu.hpp
 * @brief The (p,q)-Bernstein-Stancu operator S_{n,p,q} on C[0,1].
 *
 * For degree n, parameters 0 < q <= p <= 1 and shift 0 <= alpha <= beta the
 * operator samples f at the shifted nodes
 *
 *     t_{n,k} = (p^{n-k} [k]_{p,q} + alpha) / ([n]_{p,q} + beta)
 *
 * and mixes the samples with the normalized basis weights
 *
 *     b_{n,k}(x) = p^{-n(n-1)/2} [n k]_{p,q} p^{k(k-1)/2}
 *                  x^k prod_{s=0}^{n-k-1} (p^s - q^s x).
 *
 * The weights are nonnegative on [0,1] and sum to 1 (partition of unity), so
 * S_{n,p,q} is a positive linear operator reproducing constants.
 *
 * Evaluation uses the exponent-cancelled reduced form with r = q/p:
 *
 *     b_{n,k}(x) = G(n,k;r) x^k prod_{s=0}^{n-k-1} (1 - r^s x),
 *
 * where G is the Gaussian r-binomial; the powers of p cancel identically
 * (-n(n-1)/2 + k(n-k) + k(k-1)/2 + (n-k)(n-k-1)/2 = 0). This matters
 * numerically: the p-power prefactors underflow double precision separately
 * for n beyond ~60 at p <= 0.95, while the reduced factors stay in [0,1].
 * The reduced/literal equivalence is verified exactly against the rational
 * backend in the test suites. Setup is O(n^2) per configuration, after which
 * each point evaluation costs O(n).
 */

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pqbern/pq_arith.hpp"
#include "pqbern/scalar.hpp"

namespace pqbern {

/// Stancu translation pair, 0 <= alpha <= beta. This is exactly the
/// constraint that keeps every node inside [0,1]
/// (p^{n-k}[k]_{p,q} <= [n]_{p,q}).
template <ScalarField S>
class StancuShift {
public:
    StancuShift() : alpha_(0), beta_(0) {}
    StancuShift(S alpha, S beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
        if (!(S(0) <= alpha_ && alpha_ <= beta_)) {
            throw std::invalid_argument("StancuShift: require 0 <= alpha <= beta");
        }
    }

    const S& alpha() const { return alpha_; }
    const S& beta() const { return beta_; }

private:
    S alpha_;
    S beta_;
};

template <ScalarField S>
class OperatorConfig {
public:
    OperatorConfig(long long n, PQParams<S> params, StancuShift<S> shift = StancuShift<S>())
        : n_(n), params_(std::move(params)), shift_(std::move(shift)) {
        if (n_ < 1) throw std::invalid_argument("OperatorConfig: require n >= 1");
    }

    long long n() const { return n_; }
    const PQParams<S>& params() const { return params_; }
    const StancuShift<S>& shift() const { return shift_; }

private:
    long long n_;
    PQParams<S> params_;
    StancuShift<S> shift_;
};

template <ScalarField S>
struct BasisVector {
    long long n = 0;
    S x = S(0);
    std::vector<S> values;  // b_{n,0}(x) .. b_{n,n}(x)
};

template <ScalarField S>
struct NodeSet {
    long long n = 0;
    std::vector<S> nodes;  // t_{n,0} .. t_{n,n}, strictly increasing
};

/// Raw moments m0..m2 and central moments c1, c2 at a point, from the closed
/// forms. Consistency (c1 = m1 - x, c2 = m2 - 2x m1 + x^2) is an identity of
/// the closed forms and is covered by the test suites.
template <ScalarField S>
struct MomentSet {
    S x = S(0);
    S m0 = S(0), m1 = S(0), m2 = S(0);
    S c1 = S(0), c2 = S(0);
};

template <ScalarField S>
using RealFunction = std::function<S(const S&)>;

/// Raised when the normalization-defect demonstration is requested at p = 1,
/// where the defect is identically zero and the call is meaningless.
struct trivial_defect_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

template <ScalarField S>
void check_unit_interval(const S& x, const char* what) {
    if (!(S(0) <= x && x <= S(1))) {
        throw std::invalid_argument(std::string(what) + ": x must lie in [0,1]");
    }
}

}  // namespace detail

/// Precomputes the degree-dependent tables (Gaussian binomial row, powers of
/// r = q/p, bracket values, nodes) for one configuration, then evaluates
/// basis vectors, operator applications and direct moments in O(n) per point.
///
/// All state is immutable after construction; evaluations on a shared
/// instance are safe from multiple threads.
template <ScalarField S>
class OperatorEvaluator {
    using A = typename scalar_traits<S>::accum_type;

public:
    explicit OperatorEvaluator(OperatorConfig<S> config) : config_(std::move(config)) {
        const long long n = config_.n();
        const A p(config_.params().p());
        const A q(config_.params().q());
        const A r = q / p;

        rpow_.resize(static_cast<std::size_t>(n) + 1);
        rpow_[0] = A(1);
        for (long long s = 1; s <= n; ++s) rpow_[s] = rpow_[s - 1] * r;

        // Gaussian binomial row by the r-Pascal recurrence
        // G(m,k) = G(m-1,k-1) + r^k G(m-1,k); additions of nonnegative terms
        // only, so the row is well conditioned for every r in (0,1].
        gauss_.assign(static_cast<std::size_t>(n) + 1, A(0));
        gauss_[0] = A(1);
        for (long long m = 1; m <= n; ++m) {
            for (long long k = m; k >= 1; --k) {
                gauss_[k] = gauss_[k - 1] + rpow_[k] * gauss_[k];
            }
        }

        // Brackets [k] via [k+1] = q^k + p [k]; nodes from the shifted form.
        const A alpha(config_.shift().alpha());
        const A beta(config_.shift().beta());
        std::vector<A> ppow(static_cast<std::size_t>(n) + 1);
        ppow[0] = A(1);
        for (long long j = 1; j <= n; ++j) ppow[j] = ppow[j - 1] * p;

        std::vector<A> bracket(static_cast<std::size_t>(n) + 1);
        bracket[0] = A(0);
        A qpow(1);
        for (long long k = 0; k < n; ++k) {
            bracket[k + 1] = qpow + p * bracket[k];
            qpow = qpow * q;
        }
        bracket_n_ = bracket[n];
        denom_ = bracket_n_ + beta;

        nodes_.n = n;
        nodes_.nodes.reserve(static_cast<std::size_t>(n) + 1);
        for (long long k = 0; k <= n; ++k) {
            const A t = (ppow[n - k] * bracket[k] + alpha) / denom_;
            nodes_.nodes.push_back(scalar_traits<S>::from_accum(t));
        }
    }

    const OperatorConfig<S>& config() const { return config_; }
    const NodeSet<S>& nodes() const { return nodes_; }

    BasisVector<S> basis(const S& x) const {
        detail::check_unit_interval(x, "basis_vector");
        const auto accum = basis_accum(A(x));
        BasisVector<S> out;
        out.n = config_.n();
        out.x = x;
        out.values.reserve(accum.size());
        for (const A& v : accum) out.values.push_back(scalar_traits<S>::from_accum(v));
        return out;
    }

    /// S_{n,p,q}(f; x) = sum_k b_{n,k}(x) f(t_{n,k}).
    S apply(const RealFunction<S>& f, const S& x) const {
        detail::check_unit_interval(x, "apply");
        const auto weights = basis_accum(A(x));
        A acc(0);
        for (std::size_t k = 0; k < weights.size(); ++k) {
            acc = acc + weights[k] * A(f(nodes_.nodes[k]));
        }
        return scalar_traits<S>::from_accum(acc);
    }

    /// Direct-summation moment S(t^m; x); the independent twin of the closed
    /// forms below.
    S moment_direct(long long m, const S& x) const {
        if (m < 0) throw std::invalid_argument("moment_direct: m must be nonnegative");
        return apply([m](const S& t) { return pow_int(t, m); }, x);
    }

    /// Direct-summation central moment S((t-x)^j; x).
    S central_moment_direct(long long j, const S& x) const {
        if (j < 0) throw std::invalid_argument("central_moment_direct: j must be nonnegative");
        return apply([j, &x](const S& t) { return pow_int(S(t - x), j); }, x);
    }

private:
    std::vector<A> basis_accum(const A& x) const {
        const long long n = config_.n();
        // Suffix products P_k = prod_{s=0}^{n-k-1} (1 - r^s x); every factor
        // lies in [0,1] for x in [0,1], q <= p.
        std::vector<A> b(static_cast<std::size_t>(n) + 1);
        b[n] = A(1);
        for (long long k = n - 1; k >= 0; --k) {
            b[k] = b[k + 1] * (A(1) - rpow_[n - k - 1] * x);
        }
        A xpow(1);
        for (long long k = 0; k <= n; ++k) {
            // (G * x^k) first: G is bounded by the classical binomial so the
            // product of the large and the small factor stays in range.
            b[k] = (gauss_[k] * xpow) * b[k];
            xpow = xpow * x;
        }
        return b;
    }

    OperatorConfig<S> config_;
    std::vector<A> rpow_;
    std::vector<A> gauss_;
    A bracket_n_ = A(0);
    A denom_ = A(0);
    NodeSet<S> nodes_;
};

/// All n+1 basis weights at x.
template <ScalarField S>
BasisVector<S> basis_vector(const OperatorConfig<S>& config, const S& x) {
    return OperatorEvaluator<S>(config).basis(x);
}

/// The node set t_{n,0} < t_{n,1} < ... < t_{n,n}, all inside [0,1].
template <ScalarField S>
NodeSet<S> nodes(const OperatorConfig<S>& config) {
    return OperatorEvaluator<S>(config).nodes();
}

/// One-shot S_{n,p,q}(f; x). Builds the evaluator internally; use
/// OperatorEvaluator directly when sweeping many points of one configuration.
template <ScalarField S>
S apply_operator(const OperatorConfig<S>& config, const RealFunction<S>& f, const S& x) {
    return OperatorEvaluator<S>(config).apply(f, x);
}

namespace detail {

template <ScalarField S>
struct MomentParts {
    using A = typename scalar_traits<S>::accum_type;
    A bn, bn1, pn1, alpha, beta, denom;

    explicit MomentParts(const OperatorConfig<S>& config)
        : bn(bracket_accum<A>(config.n(), A(config.params().p()), A(config.params().q()))),
          bn1(bracket_accum<A>(config.n() - 1, A(config.params().p()), A(config.params().q()))),
          pn1(pow_int(A(config.params().p()), config.n() - 1)),
          alpha(A(config.shift().alpha())),
          beta(A(config.shift().beta())),
          denom(bn + beta) {}
};

}  // namespace detail

/// Closed-form raw moment S(t^m; x) for m in {0, 1, 2}:
///   m = 0: 1
///   m = 1: ([n] x + alpha) / ([n] + beta)
///   m = 2: (q [n][n-1] x^2 + [n](2 alpha + p^{n-1}) x + alpha^2) / ([n]+beta)^2
template <ScalarField S>
S moment_closed(const OperatorConfig<S>& config, long long m, const S& x) {
    detail::check_unit_interval(x, "moment_closed");
    if (m < 0 || m > 2) throw std::invalid_argument("moment_closed: m must be 0, 1 or 2");
    using A = typename scalar_traits<S>::accum_type;
    if (m == 0) return S(1);
    const detail::MomentParts<S> parts{config};
    const A xx(x);
    if (m == 1) {
        return scalar_traits<S>::from_accum((parts.bn * xx + parts.alpha) / parts.denom);
    }
    const A q(config.params().q());
    const A num = q * parts.bn * parts.bn1 * xx * xx +
                  parts.bn * (A(2) * parts.alpha + parts.pn1) * xx + parts.alpha * parts.alpha;
    return scalar_traits<S>::from_accum(num / (parts.denom * parts.denom));
}

/// Closed-form central moment S((t-x)^j; x) for j in {1, 2}:
///   j = 1: (alpha - beta x) / ([n] + beta)
///   j = 2: ((q [n][n-1] - [n]^2 + beta^2) x^2 + (p^{n-1}[n] - 2 alpha beta) x
///           + alpha^2) / ([n] + beta)^2
/// The j = 2 value is nonnegative (second moment of a positive operator).
template <ScalarField S>
S central_moment_closed(const OperatorConfig<S>& config, long long j, const S& x) {
    detail::check_unit_interval(x, "central_moment_closed");
    if (j < 1 || j > 2) throw std::invalid_argument("central_moment_closed: j must be 1 or 2");
    using A = typename scalar_traits<S>::accum_type;
    const detail::MomentParts<S> parts{config};
    const A xx(x);
    if (j == 1) {
        return scalar_traits<S>::from_accum((parts.alpha - parts.beta * xx) / parts.denom);
    }
    const A q(config.params().q());
    const A num = (q * parts.bn * parts.bn1 - parts.bn * parts.bn + parts.beta * parts.beta) * xx * xx +
                  (parts.pn1 * parts.bn - A(2) * parts.alpha * parts.beta) * xx +
                  parts.alpha * parts.alpha;
    return scalar_traits<S>::from_accum(num / (parts.denom * parts.denom));
}

/// Closed-form moments bundled per point.
template <ScalarField S>
MomentSet<S> moments(const OperatorConfig<S>& config, const S& x) {
    MomentSet<S> out;
    out.x = x;
    out.m0 = moment_closed(config, 0, x);
    out.m1 = moment_closed(config, 1, x);
    out.m2 = moment_closed(config, 2, x);
    out.c1 = central_moment_closed(config, 1, x);
    out.c2 = central_moment_closed(config, 2, x);
    return out;
}

/// Normalization defect of the historical, unnormalized operator variant:
/// its value on f = 1, minus one.  The variant omits the p^{-n(n-1)/2} and
/// p^{k(k-1)/2} power factors, which breaks the partition of unity everywhere
/// on [0,1) when p < 1; the defect vanishes at x = 1 only.
///
/// Requires q < p < 1 strictly.  At p = 1 the defect is identically zero and
/// the call is rejected with trivial_defect_error.  Kept separate from the
/// normal evaluation API on purpose: the unnormalized form is a demonstration
/// target, not an approximation operator.
template <ScalarField S>
S normalization_defect(const OperatorConfig<S>& config, const S& x) {
    detail::check_unit_interval(x, "normalization_defect");
    if (!(config.params().p() < S(1))) {
        throw trivial_defect_error("normalization_defect: defect is identically zero at p = 1");
    }
    if (!(config.params().q() < config.params().p())) {
        throw std::invalid_argument("normalization_defect: require q < p strictly");
    }
    using A = typename scalar_traits<S>::accum_type;
    const long long n = config.n();
    const A p(config.params().p());
    const A r = A(config.params().q()) / p;
    const A xx(x);

    std::vector<A> rpow(static_cast<std::size_t>(n) + 1);
    rpow[0] = A(1);
    for (long long s = 1; s <= n; ++s) rpow[s] = rpow[s - 1] * r;

    std::vector<A> gauss(static_cast<std::size_t>(n) + 1, A(0));
    gauss[0] = A(1);
    for (long long m = 1; m <= n; ++m) {
        for (long long k = m; k >= 1; --k) gauss[k] = gauss[k - 1] + rpow[k] * gauss[k];
    }

    std::vector<A> suffix(static_cast<std::size_t>(n) + 1);
    suffix[n] = A(1);
    for (long long k = n - 1; k >= 0; --k) {
        suffix[k] = suffix[k + 1] * (A(1) - rpow[n - k - 1] * xx);
    }

    // term_k = G(n,k;r) x^k P_k p^{e_k} with the p-powers of the unnormalized
    // form combined into the single exponent
    // e_k = k(n-k) + (n-k)(n-k-1)/2  (no isolated triangular powers).
    A sum(0);
    A xpow(1);
    for (long long k = 0; k <= n; ++k) {
        const long long e = k * (n - k) + (n - k) * (n - k - 1) / 2;
        sum = sum + (gauss[k] * xpow) * suffix[k] * pow_int(p, e);
        xpow = xpow * xx;
    }
    return scalar_traits<S>::from_accum(sum - A(1));
}

}  // namespace pqbern
