#pragma once

/**
 * @file korovkin.hpp
 * @brief Parameter schedules, sup-norm sweeps and modulus-of-continuity
 *        bounds for the operator family.
 *
 * With fixed 0 < q < p <= 1 the brackets [n]_{p,q} stay bounded (they tend to
 * 0 for p < 1 and to 1/(p-q) for p = 1), so the operators cannot converge to
 * the identity.  Convergence needs index-dependent parameters (p_n, q_n) with
 * p_n, q_n, p_n^n, q_n^n all tending to 1, which forces [n]_{p_n,q_n} -> inf.
 * The sweep below measures sup-norm errors on a uniform grid for the Korovkin
 * triple 1, t, t^2 (plus any extra test functions) along such a schedule; by
 * the Bohman-Korovkin theorem the triple controls uniform convergence for all
 * of C[0,1].
 *
 * All sup norms here are grid maxima over finitely many points, i.e.
 * under-estimates of the true sup; thresholds used with them include slack
 * for that.
 */

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pqbern/bernstein_stancu.hpp"
#include "pqbern/functions.hpp"

namespace pqbern {

/// Endpoint-inclusive uniform grid on [0,1]; size >= 2.
inline std::vector<double> uniform_grid(int size) {
    if (size < 2) throw std::invalid_argument("uniform_grid: need at least 2 points");
    std::vector<double> xs(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        xs[static_cast<std::size_t>(i)] = static_cast<double>(i) / static_cast<double>(size - 1);
    }
    return xs;
}

/// Default grid size: 2^8 + 1, so 0, 1/2 and 1 are exact machine numbers.
inline constexpr int kDefaultGrid = 257;

/// A named map n -> (p_n, q_n).
struct ParameterSchedule {
    std::string name;
    std::function<PQParams<double>(long long)> at;

    /// p_n = 1 - (n+1)^-2, q_n = 1 - (n+1)^-3/2.  Exponents > 1 on 1/n make
    /// p_n^n and q_n^n tend to 1, and (n+1)^-3/2 > (n+1)^-2 gives q_n < p_n
    /// for every n >= 1.
    static ParameterSchedule default_schedule() {
        return {"default", [](long long n) {
                    const double b = static_cast<double>(n) + 1.0;
                    return PQParams<double>(1.0 - 1.0 / (b * b), 1.0 - 1.0 / (b * std::sqrt(b)));
                }};
    }

    /// Fixed (p, q) for every n; the non-convergence control.
    static ParameterSchedule constant(double p, double q) {
        PQParams<double> params(p, q);  // validate once, eagerly
        return {"constant:" + std::to_string(p) + "," + std::to_string(q),
                [params](long long) { return params; }};
    }

    /// p_n = 1 - (n+1)^-a, q_n = 1 - (n+1)^-b with a > b > 0.
    static ParameterSchedule exponent_family(double a, double b) {
        if (!(a > b && b > 0.0)) {
            throw std::invalid_argument("exponent_family: require a > b > 0");
        }
        return {"exponent:" + std::to_string(a) + "," + std::to_string(b),
                [a, b](long long n) {
                    const double base = static_cast<double>(n) + 1.0;
                    return PQParams<double>(1.0 - std::pow(base, -a), 1.0 - std::pow(base, -b));
                }};
    }

    /// "default" | "constant:<p>,<q>" | "exponent:<a>,<b>"
    static ParameterSchedule parse(std::string_view spec);
};

namespace detail {

inline double parse_finite_double(std::string_view text, const char* what) {
    const std::string s(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + ": not a finite number: '" + s + "'");
    }
    return v;
}

}  // namespace detail

inline ParameterSchedule ParameterSchedule::parse(std::string_view spec) {
    if (spec == "default") return default_schedule();
    const auto colon = spec.find(':');
    const std::string_view head = spec.substr(0, colon);
    const std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    const auto comma = args.find(',');
    if ((head == "constant" || head == "exponent") && comma != std::string_view::npos) {
        const double first = detail::parse_finite_double(args.substr(0, comma), "schedule parameter");
        const double second = detail::parse_finite_double(args.substr(comma + 1), "schedule parameter");
        return head == "constant" ? constant(first, second) : exponent_family(first, second);
    }
    throw std::invalid_argument("unknown schedule '" + std::string(spec) +
                                "' (expected default, constant:p,q or exponent:a,b)");
}

/// Grid max of |S_{n,p_n,q_n}(f; x) - f(x)| on [0,1]; an under-estimate of
/// the true sup-norm error.
inline double sup_error(const RealFunction<double>& f, long long n, const ParameterSchedule& schedule,
                        const StancuShift<double>& shift, int grid) {
    const OperatorEvaluator<double> op(OperatorConfig<double>(n, schedule.at(n), shift));
    double worst = 0.0;
    for (double x : uniform_grid(grid)) {
        const double err = std::abs(op.apply(f, x) - f(x));
        if (err > worst) worst = err;
    }
    return worst;
}

/// Grid under-estimate of the modulus of continuity
/// w(f, delta) = max { |f(u)-f(v)| : |u-v| <= delta }; monotone nondecreasing
/// in delta by construction.
inline double modulus_of_continuity(const RealFunction<double>& f, double delta, int grid) {
    if (!(delta >= 0.0)) throw std::invalid_argument("modulus_of_continuity: delta must be >= 0");
    const auto xs = uniform_grid(grid);
    std::vector<double> fx(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) fx[i] = f(xs[i]);
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size() && xs[j] - xs[i] <= delta; ++j) {
            const double osc = std::abs(fx[j] - fx[i]);
            if (osc > worst) worst = osc;
        }
    }
    return worst;
}

/// 2 w(f, sqrt(S((t-x)^2; x))): the standard quantitative bound for positive
/// linear operators that reproduce constants. Dominates |S(f;x) - f(x)| up to
/// the grid under-estimation slack of w.
inline double popoviciu_bound(const OperatorConfig<double>& config, const RealFunction<double>& f,
                              double x, int grid) {
    const double c2 = central_moment_closed(config, 2, x);
    return 2.0 * modulus_of_continuity(f, std::sqrt(std::max(c2, 0.0)), grid);
}

struct ConvergenceRow {
    long long n = 0;
    double p = 0.0, q = 0.0;
    std::vector<double> sup_errors;  // one per function, report order
    double c2_sup = 0.0;             // grid max of S((t-x)^2; x)
    std::vector<double> bounds;      // 2 w(f, sqrt(c2_sup)) per function
};

/// Sweep result. The first three function columns are always the Korovkin
/// triple monomial:0, monomial:1, monomial:2; extra test functions follow in
/// caller order. `converged` means all three monomial errors fell below the
/// threshold at the largest n.
struct ConvergenceReport {
    std::vector<std::string> function_names;
    int grid = 0;
    double threshold = 0.0;
    bool converged = false;
    std::vector<ConvergenceRow> rows;
};

inline ConvergenceReport korovkin_sweep(const std::vector<long long>& n_values,
                                        const ParameterSchedule& schedule,
                                        const StancuShift<double>& shift,
                                        const std::vector<FunctionSpec>& extra_functions,
                                        int grid = kDefaultGrid, double threshold = 0.02) {
    if (n_values.empty()) throw std::invalid_argument("korovkin_sweep: empty n list");
    for (std::size_t i = 1; i < n_values.size(); ++i) {
        if (!(n_values[i - 1] < n_values[i])) {
            throw std::invalid_argument("korovkin_sweep: n values must be strictly increasing");
        }
    }
    if (!(threshold > 0.0)) throw std::invalid_argument("korovkin_sweep: threshold must be > 0");

    std::vector<FunctionSpec> specs = {FunctionSpec::monomial(0), FunctionSpec::monomial(1),
                                       FunctionSpec::monomial(2)};
    for (const FunctionSpec& f : extra_functions) {
        bool dup = false;
        for (const FunctionSpec& have : specs) dup = dup || have.name() == f.name();
        if (!dup) specs.push_back(f);
    }

    ConvergenceReport report;
    report.grid = grid;
    report.threshold = threshold;
    for (const FunctionSpec& f : specs) report.function_names.push_back(f.name());

    std::vector<RealFunction<double>> fns;
    for (const FunctionSpec& f : specs) fns.push_back(f.realize<double>());

    const auto xs = uniform_grid(grid);
    for (long long n : n_values) {
        const OperatorConfig<double> config(n, schedule.at(n), shift);
        const OperatorEvaluator<double> op(config);
        ConvergenceRow row;
        row.n = n;
        row.p = config.params().p();
        row.q = config.params().q();
        row.sup_errors.assign(fns.size(), 0.0);
        for (double x : xs) {
            for (std::size_t i = 0; i < fns.size(); ++i) {
                const double err = std::abs(op.apply(fns[i], x) - fns[i](x));
                if (err > row.sup_errors[i]) row.sup_errors[i] = err;
            }
            const double c2 = central_moment_closed(config, 2, x);
            if (c2 > row.c2_sup) row.c2_sup = c2;
        }
        const double delta = std::sqrt(std::max(row.c2_sup, 0.0));
        for (const auto& fn : fns) {
            row.bounds.push_back(2.0 * modulus_of_continuity(fn, delta, grid));
        }
        report.rows.push_back(std::move(row));
    }

    const ConvergenceRow& last = report.rows.back();
    report.converged = last.sup_errors[0] < threshold && last.sup_errors[1] < threshold &&
                       last.sup_errors[2] < threshold;
    return report;
}

}  // namespace pqbern
