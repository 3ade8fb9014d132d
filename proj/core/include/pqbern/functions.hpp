#pragma once

/**
 * @file functions.hpp
 * @brief Named catalog of test functions on [0,1].
 *
 * Convergence experiments need reproducible, nameable functions that both
 * backends can evaluate: the catalog entries carry exact-rational parameters,
 * so the same spec realizes as a double function for sweeps and as an exact
 * rational function for the verification backend.
 *
 * Spec grammar (numbers accept "0.25", "1/4" or "3"):
 *   const:<c>                  constant c
 *   monomial:<m>               t^m, integer m >= 0
 *   abs:<c>                    |t - c|
 *   poly:<c0>,<c1>,...         c0 + c1 t + c2 t^2 + ...
 *   pwl:<x0>,<y0>;...;<xm>,<ym> piecewise-linear through the given points,
 *                              x strictly increasing, x0 = 0, xm = 1
 */

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pqbern/bernstein_stancu.hpp"
#include "pqbern/rational.hpp"

namespace pqbern {

class FunctionSpec {
public:
    static FunctionSpec constant(Rational c) {
        return FunctionSpec(Kind::Constant, 0, {std::move(c)});
    }
    static FunctionSpec monomial(long long degree) {
        if (degree < 0) throw std::invalid_argument("monomial: degree must be nonnegative");
        return FunctionSpec(Kind::Monomial, degree, {});
    }
    static FunctionSpec abs_kink(Rational c) {
        return FunctionSpec(Kind::AbsKink, 0, {std::move(c)});
    }
    static FunctionSpec polynomial(std::vector<Rational> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("poly: needs at least one coefficient");
        return FunctionSpec(Kind::Polynomial, 0, std::move(coeffs));
    }
    /// Points as x0,y0,x1,y1,...; see class comment for the constraints.
    static FunctionSpec piecewise_linear(std::vector<Rational> points) {
        if (points.size() < 4 || points.size() % 2 != 0) {
            throw std::invalid_argument("pwl: needs at least two x,y points");
        }
        if (points.front() != Rational(0) || points[points.size() - 2] != Rational(1)) {
            throw std::invalid_argument("pwl: breakpoints must start at x=0 and end at x=1");
        }
        for (std::size_t i = 2; i < points.size(); i += 2) {
            if (!(points[i - 2] < points[i])) {
                throw std::invalid_argument("pwl: x breakpoints must be strictly increasing");
            }
        }
        return FunctionSpec(Kind::PiecewiseLinear, 0, std::move(points));
    }

    /// Parses the "name:params" grammar above.
    static FunctionSpec parse(std::string_view text);

    /// Canonical form, e.g. "abs:1/2"; stable across equivalent spellings of
    /// the parameters ("abs:0.5" parses to the same name).
    const std::string& name() const { return name_; }

    /// Materializes the function in the requested backend.
    template <ScalarField S>
    RealFunction<S> realize() const {
        std::vector<S> params;
        params.reserve(params_.size());
        for (const Rational& v : params_) params.push_back(scalar_from_rational<S>(v));
        switch (kind_) {
            case Kind::Constant:
                return [c = params[0]](const S&) { return c; };
            case Kind::Monomial:
                return [m = degree_](const S& t) { return pow_int(t, m); };
            case Kind::AbsKink:
                return [c = params[0]](const S& t) {
                    S d = t - c;
                    return d < S(0) ? S(-d) : d;
                };
            case Kind::Polynomial:
                return [coeffs = std::move(params)](const S& t) {
                    S acc(0);
                    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
                    return acc;
                };
            case Kind::PiecewiseLinear:
                return [pts = std::move(params)](const S& t) {
                    // pts = x0,y0,x1,y1,...  Find the segment containing t.
                    std::size_t i = 2;
                    while (i + 2 < pts.size() && pts[i] < t) i += 2;
                    const S &x0 = pts[i - 2], &y0 = pts[i - 1], &x1 = pts[i], &y1 = pts[i + 1];
                    return S(y0 + (t - x0) * (y1 - y0) / (x1 - x0));
                };
        }
        throw std::logic_error("FunctionSpec: unreachable");
    }

private:
    enum class Kind { Constant, Monomial, AbsKink, Polynomial, PiecewiseLinear };

    FunctionSpec(Kind kind, long long degree, std::vector<Rational> params)
        : kind_(kind), degree_(degree), params_(std::move(params)) {
        name_ = canonical_name();
    }

    std::string canonical_name() const;

    Kind kind_;
    long long degree_;
    std::vector<Rational> params_;
    std::string name_;
};

namespace detail {

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto pos = text.find(sep);
        out.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    return out;
}

inline long long parse_small_int(std::string_view text, const char* what) {
    const Rational v = parse_rational(text);
    if (boost::multiprecision::denominator(v) != 1) {
        throw std::invalid_argument(std::string(what) + ": expected an integer");
    }
    const BigInt num = boost::multiprecision::numerator(v);
    if (num < 0 || num > 1'000'000) {
        throw std::invalid_argument(std::string(what) + ": out of range");
    }
    return num.convert_to<long long>();
}

}  // namespace detail

inline FunctionSpec FunctionSpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (head == "const") return constant(parse_rational(args));
    if (head == "monomial") return monomial(detail::parse_small_int(args, "monomial degree"));
    if (head == "abs") return abs_kink(parse_rational(args));
    if (head == "poly") {
        std::vector<Rational> coeffs;
        for (auto piece : detail::split(args, ',')) coeffs.push_back(parse_rational(piece));
        return polynomial(std::move(coeffs));
    }
    if (head == "pwl") {
        std::vector<Rational> pts;
        for (auto pair : detail::split(args, ';')) {
            const auto xy = detail::split(pair, ',');
            if (xy.size() != 2) throw std::invalid_argument("pwl: each point must be x,y");
            pts.push_back(parse_rational(xy[0]));
            pts.push_back(parse_rational(xy[1]));
        }
        return piecewise_linear(std::move(pts));
    }
    throw std::invalid_argument("unknown function spec '" + std::string(text) +
                                "' (expected const:, monomial:, abs:, poly: or pwl:)");
}

inline std::string FunctionSpec::canonical_name() const {
    switch (kind_) {
        case Kind::Constant:
            return "const:" + pqbern::to_string(params_[0]);
        case Kind::Monomial:
            return "monomial:" + std::to_string(degree_);
        case Kind::AbsKink:
            return "abs:" + pqbern::to_string(params_[0]);
        case Kind::Polynomial: {
            std::string out = "poly:";
            for (std::size_t i = 0; i < params_.size(); ++i) {
                if (i) out += ',';
                out += pqbern::to_string(params_[i]);
            }
            return out;
        }
        case Kind::PiecewiseLinear: {
            std::string out = "pwl:";
            for (std::size_t i = 0; i < params_.size(); i += 2) {
                if (i) out += ';';
                out += pqbern::to_string(params_[i]) + "," + pqbern::to_string(params_[i + 1]);
            }
            return out;
        }
    }
    throw std::logic_error("FunctionSpec: unreachable");
}

}  // namespace pqbern
