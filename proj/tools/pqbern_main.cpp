// pqbern: command-line front end for the (p,q)-Bernstein-Stancu operator
// library. Emits CSV (default) or JSON tables; see --help per subcommand.
//
// Exit codes: 0 success, 1 non-converged sweep result (converge only),
// 2 usage or validation error. Validation messages name the violated
// invariant.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "pqbern/pqbern.hpp"

namespace {

using pqbern::OutputRecord;
using pqbern::Rational;

struct CommonOpts {
    long long n = 0;
    std::string p, q;
    std::string alpha = "0", beta = "0";
    int grid = pqbern::kDefaultGrid;
    std::string format = "csv";
    bool exact = false;
};

struct ConvergeOpts {
    std::string n_list = "8,16,32,64,128,256,512";
    std::string schedule = "default";
    std::string alpha = "0", beta = "0";
    std::vector<std::string> functions;
    int grid = pqbern::kDefaultGrid;
    double threshold = 0.02;
    std::string format = "csv";
};

double parse_double_flag(const std::string& text, const std::string& flag) {
    if (text.find('/') != std::string::npos) {
        throw std::invalid_argument(flag + ": '" + text +
                                    "' is a rational literal; pass --exact to use the exact backend");
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(flag + ": '" + text + "' is not a number");
    }
    if (used != text.size() || !std::isfinite(v)) {
        throw std::invalid_argument(flag + ": '" + text + "' is not a finite decimal number");
    }
    return v;
}

template <class S>
S parse_scalar(const std::string& text, const std::string& flag) {
    if constexpr (pqbern::scalar_traits<S>::is_exact) {
        try {
            return pqbern::parse_rational(text);
        } catch (const std::exception& e) {
            throw std::invalid_argument(flag + ": " + e.what());
        }
    } else {
        return parse_double_flag(text, flag);
    }
}

template <class S>
pqbern::OperatorConfig<S> make_config(const CommonOpts& o) {
    if (o.n < 1) throw std::invalid_argument("--n: degree must be >= 1");
    return pqbern::OperatorConfig<S>(
        o.n, pqbern::PQParams<S>(parse_scalar<S>(o.p, "--p"), parse_scalar<S>(o.q, "--q")),
        pqbern::StancuShift<S>(parse_scalar<S>(o.alpha, "--alpha"),
                               parse_scalar<S>(o.beta, "--beta")));
}

template <class S>
std::vector<S> make_grid(int size) {
    if (size < 2) throw std::invalid_argument("--grid: need at least 2 points (endpoint-inclusive uniform grid)");
    std::vector<S> xs;
    xs.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        if constexpr (pqbern::scalar_traits<S>::is_exact) {
            xs.push_back(Rational(i, size - 1));
        } else {
            xs.push_back(static_cast<double>(i) / static_cast<double>(size - 1));
        }
    }
    return xs;
}

template <class S>
S abs_value(const S& v) {
    return v < S(0) ? S(-v) : v;
}

template <class S>
void echo_config(OutputRecord& rec, const pqbern::OperatorConfig<S>& config, bool with_shift) {
    rec.params.emplace_back("n", std::to_string(config.n()));
    rec.params.emplace_back("p", pqbern::format_cell(config.params().p()));
    rec.params.emplace_back("q", pqbern::format_cell(config.params().q()));
    if (with_shift) {
        rec.params.emplace_back("alpha", pqbern::format_cell(config.shift().alpha()));
        rec.params.emplace_back("beta", pqbern::format_cell(config.shift().beta()));
    }
}

void echo_output(OutputRecord& rec, const std::string& format, bool exact) {
    rec.params.emplace_back("format", format);
    rec.params.emplace_back("backend", exact ? "exact" : "float");
}

int emit(const OutputRecord& rec, const std::string& format) {
    rec.write(std::cout, pqbern::parse_output_format(format));
    return 0;
}

template <class S>
int run_basis(const CommonOpts& o) {
    const auto config = make_config<S>(o);
    const pqbern::OperatorEvaluator<S> op(config);
    OutputRecord rec;
    rec.params.emplace_back("command", "basis");
    echo_config(rec, config, /*with_shift=*/false);
    rec.params.emplace_back("grid", std::to_string(o.grid));
    echo_output(rec, o.format, o.exact);
    rec.schema.push_back("x");
    for (long long k = 0; k <= config.n(); ++k) rec.schema.push_back("b_" + std::to_string(k));
    for (const S& x : make_grid<S>(o.grid)) {
        std::vector<std::string> row{pqbern::format_cell(x)};
        for (const S& v : op.basis(x).values) row.push_back(pqbern::format_cell(v));
        rec.rows.push_back(std::move(row));
    }
    return emit(rec, o.format);
}

template <class S>
int run_nodes(const CommonOpts& o) {
    const auto config = make_config<S>(o);
    const auto node_set = pqbern::nodes(config);
    OutputRecord rec;
    rec.params.emplace_back("command", "nodes");
    echo_config(rec, config, /*with_shift=*/true);
    echo_output(rec, o.format, o.exact);
    rec.schema = {"k", "t_k"};
    for (long long k = 0; k <= config.n(); ++k) {
        rec.rows.push_back({std::to_string(k), pqbern::format_cell(node_set.nodes[k])});
    }
    return emit(rec, o.format);
}

template <class S>
int run_moments(const CommonOpts& o) {
    const auto config = make_config<S>(o);
    const pqbern::OperatorEvaluator<S> op(config);
    OutputRecord rec;
    rec.params.emplace_back("command", "moments");
    echo_config(rec, config, /*with_shift=*/true);
    rec.params.emplace_back("grid", std::to_string(o.grid));
    echo_output(rec, o.format, o.exact);
    rec.schema = {"x", "m0", "m1", "m2", "c1", "c2", "m1_direct", "m2_direct"};
    for (const S& x : make_grid<S>(o.grid)) {
        const auto ms = pqbern::moments(config, x);
        rec.rows.push_back({pqbern::format_cell(x), pqbern::format_cell(ms.m0),
                            pqbern::format_cell(ms.m1), pqbern::format_cell(ms.m2),
                            pqbern::format_cell(ms.c1), pqbern::format_cell(ms.c2),
                            pqbern::format_cell(op.moment_direct(1, x)),
                            pqbern::format_cell(op.moment_direct(2, x))});
    }
    return emit(rec, o.format);
}

template <class S>
int run_eval(const CommonOpts& o, const std::string& function) {
    const auto config = make_config<S>(o);
    const auto spec = pqbern::FunctionSpec::parse(function);
    const auto f = spec.template realize<S>();
    const pqbern::OperatorEvaluator<S> op(config);
    OutputRecord rec;
    rec.params.emplace_back("command", "eval");
    echo_config(rec, config, /*with_shift=*/true);
    rec.params.emplace_back("function", spec.name());
    rec.params.emplace_back("grid", std::to_string(o.grid));
    echo_output(rec, o.format, o.exact);
    rec.schema = {"x", "f", "S_f", "abs_error"};
    for (const S& x : make_grid<S>(o.grid)) {
        const S fx = f(x);
        const S sx = op.apply(f, x);
        rec.rows.push_back({pqbern::format_cell(x), pqbern::format_cell(fx),
                            pqbern::format_cell(sx), pqbern::format_cell(abs_value<S>(sx - fx))});
    }
    return emit(rec, o.format);
}

template <class S>
int run_defect(const CommonOpts& o) {
    const auto config = make_config<S>(o);
    OutputRecord rec;
    rec.params.emplace_back("command", "defect");
    echo_config(rec, config, /*with_shift=*/false);
    rec.params.emplace_back("grid", std::to_string(o.grid));
    echo_output(rec, o.format, o.exact);
    rec.schema = {"x", "defect"};
    for (const S& x : make_grid<S>(o.grid)) {
        rec.rows.push_back(
            {pqbern::format_cell(x), pqbern::format_cell(pqbern::normalization_defect(config, x))});
    }
    return emit(rec, o.format);
}

std::vector<long long> parse_n_list(const std::string& text) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(piece, &used));
            if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            throw std::invalid_argument("--n-list: '" + piece + "' is not an integer");
        }
        if (out.back() < 1) throw std::invalid_argument("--n-list: degrees must be >= 1");
        if (out.size() > 1 && out[out.size() - 2] >= out.back()) {
            throw std::invalid_argument("--n-list: degrees must be strictly increasing");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("--n-list: empty");
    return out;
}

int run_converge(const ConvergeOpts& o) {
    const auto n_values = parse_n_list(o.n_list);
    const auto schedule = pqbern::ParameterSchedule::parse(o.schedule);
    const pqbern::StancuShift<double> shift(parse_double_flag(o.alpha, "--alpha"),
                                            parse_double_flag(o.beta, "--beta"));
    if (!(o.threshold > 0.0)) throw std::invalid_argument("--threshold: must be > 0");
    std::vector<pqbern::FunctionSpec> extra;
    for (const std::string& text : o.functions) extra.push_back(pqbern::FunctionSpec::parse(text));

    const auto report = pqbern::korovkin_sweep(n_values, schedule, shift, extra, o.grid, o.threshold);

    OutputRecord rec;
    rec.params.emplace_back("command", "converge");
    rec.params.emplace_back("n_list", o.n_list);
    rec.params.emplace_back("schedule", schedule.name);
    rec.params.emplace_back("alpha", pqbern::format_double17(shift.alpha()));
    rec.params.emplace_back("beta", pqbern::format_double17(shift.beta()));
    std::string fnames;
    for (const auto& name : report.function_names) {
        if (!fnames.empty()) fnames += ' ';
        fnames += name;
    }
    rec.params.emplace_back("functions", fnames);
    rec.params.emplace_back("grid", std::to_string(o.grid));
    rec.params.emplace_back("threshold", pqbern::format_double17(o.threshold));
    rec.params.emplace_back("format", o.format);
    rec.params.emplace_back("backend", "float");
    rec.params.emplace_back("converged", report.converged ? "true" : "false");

    rec.schema = {"n", "p_n", "q_n"};
    for (const auto& name : report.function_names) rec.schema.push_back("err(" + name + ")");
    rec.schema.push_back("c2_sup");
    for (const auto& name : report.function_names) rec.schema.push_back("bound(" + name + ")");
    for (const auto& row : report.rows) {
        std::vector<std::string> cells{std::to_string(row.n), pqbern::format_double17(row.p),
                                       pqbern::format_double17(row.q)};
        for (double e : row.sup_errors) cells.push_back(pqbern::format_double17(e));
        cells.push_back(pqbern::format_double17(row.c2_sup));
        for (double b : row.bounds) cells.push_back(pqbern::format_double17(b));
        rec.rows.push_back(std::move(cells));
    }
    emit(rec, o.format);
    return report.converged ? 0 : 1;
}

void add_pq_options(CLI::App* cmd, CommonOpts& o, bool with_shift) {
    cmd->add_option("--n", o.n, "Operator degree n >= 1")->required();
    cmd->add_option("--p", o.p, "Parameter p, 0 < q <= p <= 1")->required();
    cmd->add_option("--q", o.q, "Parameter q, 0 < q <= p <= 1")->required();
    if (with_shift) {
        cmd->add_option("--alpha", o.alpha, "Stancu shift alpha, 0 <= alpha <= beta (default 0)");
        cmd->add_option("--beta", o.beta, "Stancu shift beta (default 0)");
    }
    cmd->add_option("--format", o.format, "Output format: csv or json (default csv)");
    cmd->add_flag("--exact", o.exact,
                  "Parse parameters as exact rationals (e.g. 1/3) and compute in the exact backend");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(p,q)-Bernstein-Stancu operators: basis weights, nodes, moments, evaluation,\n"
                 "normalization-defect demonstration and Korovkin convergence sweeps"};
    app.require_subcommand(1);

    CommonOpts basis_o, nodes_o, moments_o, eval_o, defect_o;
    ConvergeOpts conv_o;
    std::string eval_function;

    auto* basis = app.add_subcommand("basis", "Emit basis weights b_{n,0..n}(x) on a uniform grid");
    add_pq_options(basis, basis_o, /*with_shift=*/false);
    basis->add_option("--grid", basis_o.grid, "Grid points in [0,1], >= 2 (default 257)");

    auto* nodes = app.add_subcommand("nodes", "Emit the sample nodes t_{n,k}");
    add_pq_options(nodes, nodes_o, /*with_shift=*/true);

    auto* moments = app.add_subcommand(
        "moments", "Emit closed-form moments m0,m1,m2,c1,c2 plus direct-summation twins");
    add_pq_options(moments, moments_o, /*with_shift=*/true);
    moments->add_option("--grid", moments_o.grid, "Grid points in [0,1], >= 2 (default 257)");

    auto* eval = app.add_subcommand("eval", "Apply the operator to a catalog function");
    add_pq_options(eval, eval_o, /*with_shift=*/true);
    eval->add_option("--grid", eval_o.grid, "Grid points in [0,1], >= 2 (default 257)");
    eval->add_option("--function", eval_function,
                     "Function spec: const:c | monomial:m | abs:c | poly:c0,c1,.. | pwl:x,y;x,y;..")
        ->required();

    auto* defect = app.add_subcommand(
        "defect", "Normalization defect of the unnormalized operator variant (requires q < p < 1)");
    add_pq_options(defect, defect_o, /*with_shift=*/false);
    defect->add_option("--grid", defect_o.grid, "Grid points in [0,1], >= 2 (default 257)");

    auto* converge = app.add_subcommand(
        "converge", "Sup-norm Korovkin sweep along a parameter schedule (exit 1 if not converged)");
    converge->add_option("--n-list", conv_o.n_list,
                         "Comma-separated strictly increasing degrees (default 8,...,512)");
    converge->add_option("--schedule", conv_o.schedule,
                         "default | constant:p,q | exponent:a,b (default: default)");
    converge->add_option("--alpha", conv_o.alpha, "Stancu shift alpha (default 0)");
    converge->add_option("--beta", conv_o.beta, "Stancu shift beta (default 0)");
    converge->add_option("--function", conv_o.functions,
                         "Extra test function spec; repeatable. The Korovkin triple 1, t, t^2 is always swept");
    converge->add_option("--grid", conv_o.grid, "Grid points in [0,1], >= 2 (default 257)");
    converge->add_option("--threshold", conv_o.threshold,
                         "Convergence threshold on the monomial sup-errors at the largest n (default 0.02)");
    converge->add_option("--format", conv_o.format, "Output format: csv or json (default csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (basis->parsed()) return basis_o.exact ? run_basis<Rational>(basis_o) : run_basis<double>(basis_o);
        if (nodes->parsed()) return nodes_o.exact ? run_nodes<Rational>(nodes_o) : run_nodes<double>(nodes_o);
        if (moments->parsed()) {
            return moments_o.exact ? run_moments<Rational>(moments_o) : run_moments<double>(moments_o);
        }
        if (eval->parsed()) {
            return eval_o.exact ? run_eval<Rational>(eval_o, eval_function)
                                : run_eval<double>(eval_o, eval_function);
        }
        if (defect->parsed()) {
            return defect_o.exact ? run_defect<Rational>(defect_o) : run_defect<double>(defect_o);
        }
        if (converge->parsed()) return run_converge(conv_o);
    } catch (const std::exception& e) {
        std::cerr << "pqbern: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "pqbern: no subcommand\n";
    return 2;
}
