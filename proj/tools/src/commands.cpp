#include "commands.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "verify.hpp"
#include "warpspec/classifier.hpp"
#include "warpspec/eigensolver.hpp"
#include "warpspec/grid.hpp"

namespace warpspec::cli {

namespace {

struct Single {
    WarpedMetric metric;
    DegreePair deg;
};

Single single_case(const Options& opts) {
    const Number a = parse_one_number(opts.a, "a");
    const Number b = parse_one_number(opts.b, "b");
    const Number c = parse_one_number(opts.c, "c");
    const int n = parse_one_int(opts.n, "n");
    const int p = parse_one_int(opts.p, "p");
    auto metric = make_metric(a, b, c);
    try {
        return {metric, DegreePair(n, p)};
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

Number single_lambda(const Options& opts) {
    if (opts.lambda.empty()) throw usage_error("--lambda is required");
    const Number lambda = parse_one_number(opts.lambda, "lambda");
    if (lambda.sign() < 0) throw usage_error("--lambda must be non-negative");
    return lambda;
}

FormType single_type(const Options& opts) {
    if (opts.type.empty()) throw usage_error("--type is required");
    return parse_one_type(opts.type);
}

void require_type_fits(FormType type, DegreePair deg, const Number& lambda) {
    if (type == FormType::type1 && deg.p == deg.n) throw usage_error("type 1 needs p <= n-1");
    if (type == FormType::type2 && deg.p == 0) throw usage_error("type 2 needs p >= 1");
    if (type == FormType::type3) {
        if (deg.p == 0 || deg.p == deg.n) throw usage_error("type 3 needs 1 <= p <= n-1");
        if (!(lambda > Number(0)))
            throw usage_error("type 3 needs lambda > 0: the coupled pair only exists for a coclosed (p-1)-form "
                              "with nonzero eigenvalue");
    }
}

Json metric_json(const WarpedMetric& m) {
    Json j;
    j["a"] = to_json(m.a());
    j["b"] = to_json(m.b());
    j["c"] = to_json(m.c());
    return j;
}

Json header(const char* command) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

const char* var_name(Coordinate c) { return c == Coordinate::t ? "t" : "r"; }

struct Series {
    std::string name;
    Expr expr;
};

std::vector<Series> operator_series(const WarpedMetric& metric, DegreePair deg, FormType type, const Number& lambda,
                                    Coordinate& coordinate) {
    if (type == FormType::type3) {
        const auto op = build_type3(metric, deg, lambda);
        coordinate = op.v1.coordinate;
        return {{"V1", op.v1.potential}, {"V2", op.v2.potential}, {"W", op.coupling}};
    }
    const auto op = type == FormType::type1 ? build_type1(metric, deg, lambda) : build_type2(metric, deg, lambda);
    coordinate = op.coordinate;
    return {{"V", op.potential}};
}

std::string csv_path(const std::string& out, const std::string& name, bool several) {
    if (!several) return out;
    std::string stem = out;
    if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".csv") stem.resize(stem.size() - 4);
    return stem + "." + name + ".csv";
}

Json estimate_json(const NumericResult& r) {
    Json j;
    j["discrete"] = r.discrete;
    j["status"] = to_string(r.estimate.status);
    j["value"] = finite_or_null(r.estimate.value);
    if (!r.discrete) {
        j["method"] = to_string(r.estimate.method);
        j["spread"] = r.estimate.spread;
        j["monotone"] = r.estimate.monotone;
    }
    return j;
}

std::string estimate_text(const NumericResult& r) {
    if (r.discrete) return "empty (discreteness test)";
    if (r.estimate.status == EssStatus::empty) return "empty (sweep)";
    return fmt::format("{} {}", to_string(r.estimate.status), format_value(r.estimate.value));
}

}  // namespace

CommandResult run_classify(const Options& opts) {
    const Number a = parse_one_number(opts.a, "a");
    const Number b = parse_one_number(opts.b, "b");
    const Number c = parse_one_number(opts.c, "c");
    const int n = parse_one_int(opts.n, "n");
    if (n < 2) throw usage_error("--n must be at least 2");
    const auto metric = make_metric(a, b, c);
    const auto degrees = parse_degrees(opts.p, n);
    const auto boundary = make_boundary(opts, n);

    CommandResult result;
    result.document = header("classify");
    result.document["metric"] = metric_json(metric);
    result.document["n"] = n;
    Json bj;
    bj["sphere"] = boundary.is_sphere();
    bj["betti"] = boundary.betti();
    result.document["boundary"] = bj;
    result.document["results"] = Json::array();

    for (int p : degrees) {
        Classification cls;
        try {
            cls = boundary.is_sphere() ? classify_rotsym(metric, DegreePair(n, p), boundary)
                                       : classify_general(metric, DegreePair(n, p), boundary);
        } catch (const std::invalid_argument& e) {
            if (b.is_zero())
                throw usage_error("boundary data needed: " + std::string(e.what()) + " (pass --coclosed)");
            throw usage_error(e.what());
        }
        result.text += fmt::format("p={}: {}  [{}]\n", p, cls.spectrum.to_string(), cls.branch);
        Json row;
        row["p"] = p;
        row["spectrum"] = to_json(cls.spectrum);
        row["text"] = cls.spectrum.to_string();
        row["branch"] = cls.branch;
        result.document["results"].push_back(row);
    }
    if (!opts.out.empty()) result.files.emplace_back(opts.out, result.document.dump(2) + "\n");
    return result;
}

CommandResult run_reduce(const Options& opts) {
    const auto [metric, deg] = single_case(opts);
    const Number lambda = single_lambda(opts);
    const FormType type = single_type(opts);
    require_type_fits(type, deg, lambda);

    Coordinate coordinate = Coordinate::t;
    const auto series = operator_series(metric, deg, type, lambda, coordinate);
    const char* var = var_name(coordinate);

    CommandResult result;
    result.document = header("reduce");
    result.document["metric"] = metric_json(metric);
    result.document["n"] = deg.n;
    result.document["p"] = deg.p;
    result.document["type"] = to_string(type);
    result.document["lambda"] = to_json(lambda);
    result.document["coordinate"] = var;
    result.document["operators"] = Json::array();
    for (const auto& s : series) {
        const std::string line = fmt::format("{}({}) = {}", s.name, var, s.expr.to_string(var));
        result.text += line + "\n";
        Json j;
        j["name"] = s.name;
        j["expression"] = s.expr.to_string(var);
        result.document["operators"].push_back(j);
    }

    if (!opts.out.empty()) {
        const int points = opts.grid_points.value_or(201);
        const double length = opts.l_max.value_or(10.0);
        if (points < 2) throw usage_error("--grid-points must be at least 2 for a series");
        if (!(length > 0.0)) throw usage_error("--L-max must be positive");
        const double left = operator_coordinate(metric, metric.c().value());
        for (const auto& s : series) {
            std::string csv = fmt::format("{},{}\n", var, s.name);
            for (int i = 0; i < points; ++i) {
                const double x = left + length * i / (points - 1);
                const double y = s.expr(x);
                if (!std::isfinite(y))
                    throw usage_error(fmt::format("series value overflows at {} = {}; shorten --L-max", var,
                                                  format_value(x)));
                csv += fmt::format("{:.17g},{:.17g}\n", x, y);
            }
            result.files.emplace_back(csv_path(opts.out, s.name, series.size() > 1), std::move(csv));
        }
    }
    return result;
}

CommandResult run_solve(const Options& opts) {
    const auto [metric, deg] = single_case(opts);
    const Number lambda = single_lambda(opts);
    const FormType type = single_type(opts);
    require_type_fits(type, deg, lambda);
    if (opts.count < 1) throw usage_error("--count must be positive");

    const int points = opts.grid_points.value_or(2000);
    const double length = opts.l_max.value_or(20.0);
    if (points < 16) throw usage_error("--grid-points must be at least 16");
    if (!(length > 0.0)) throw usage_error("--L-max must be positive");
    const double left = operator_coordinate(metric, metric.c().value());
    const Grid grid(left, left + length, points);

    DiscretizedOperator op;
    std::string description;
    try {
        if (type == FormType::type3) {
            const auto coupled = build_type3(metric, deg, lambda);
            op = discretize(coupled, grid);
            const char* var = var_name(coupled.v1.coordinate);
            description = fmt::format("V1({0}) = {1}; V2({0}) = {2}; W({0}) = {3}", var,
                                      coupled.v1.potential.to_string(var), coupled.v2.potential.to_string(var),
                                      coupled.coupling.to_string(var));
        } else {
            const auto scalar =
                type == FormType::type1 ? build_type1(metric, deg, lambda) : build_type2(metric, deg, lambda);
            op = discretize(scalar, grid);
            description = scalar.to_string();
        }
    } catch (const std::range_error& e) {
        throw usage_error(std::string("potential overflows on the truncated interval; shorten --L-max (") +
                          e.what() + ")");
    }
    const auto eigenvalues = lowest_eigenvalues(op, std::min(opts.count, op.dimension()));
    const auto numeric = numeric_spectrum(metric, deg, type, lambda, SweepBudget{});
    const auto predicted = operator_spectrum(metric, deg, type, lambda);

    CommandResult result;
    result.document = header("solve");
    result.document["metric"] = metric_json(metric);
    result.document["n"] = deg.n;
    result.document["p"] = deg.p;
    result.document["type"] = to_string(type);
    result.document["lambda"] = to_json(lambda);
    result.document["operator"] = description;
    Json interval;
    interval["left"] = grid.left();
    interval["right"] = grid.right();
    interval["npoints"] = grid.npoints();
    interval["step"] = grid.step();
    result.document["interval"] = interval;
    result.document["eigenvalues"] = eigenvalues;
    result.document["ess_bottom"] = estimate_json(numeric);
    Json sweep = Json::array();
    for (const auto& row : numeric.estimate.diagnostics) {
        Json r;
        r["length"] = row.length;
        r["npoints"] = row.npoints;
        r["eigenvalues"] = row.eigenvalues;
        sweep.push_back(r);
    }
    result.document["sweep"] = sweep;
    result.document["predicted"] = to_json(predicted);

    result.text += description + "\n";
    result.text += fmt::format("interval [{}, {}], {} interior nodes, step {}\n", format_value(grid.left()),
                               format_value(grid.right()), grid.npoints(), format_value(grid.step()));
    result.text += "lowest eigenvalues:";
    for (double e : eigenvalues) result.text += " " + format_value(e);
    result.text += "\n";
    for (const auto& row : numeric.estimate.diagnostics) {
        result.text += fmt::format("  L={:<8} nodes={:<7}", format_value(row.length), row.npoints);
        for (double e : row.eigenvalues) result.text += " " + format_value(e);
        result.text += "\n";
    }
    result.text += fmt::format("essential spectrum bottom: {}; predicted {}\n", estimate_text(numeric),
                               predicted.to_string());
    if (numeric.inconclusive()) result.exit_code = kInconclusive;
    if (!opts.out.empty()) result.files.emplace_back(opts.out, result.document.dump(2) + "\n");
    return result;
}

CommandResult run_verify(const Options& opts) {
    if (!(opts.tol > 0.0)) throw usage_error("--tol must be positive");
    if (opts.jobs < 1) throw usage_error("--jobs must be positive");
    const auto a = parse_numbers(opts.a, "a");
    const auto b = parse_numbers(opts.b, "b");
    const Number c = parse_one_number(opts.c, "c");
    const auto n = parse_ints(opts.n, "n");
    const auto lambdas = parse_numbers(opts.lambda, "lambda");
    const auto types = parse_types(opts.type);
    SweepBudget budget{opts.l_max, opts.grid_points};

    std::vector<VerifyCase> cases;
    if (!a.empty() && !b.empty() && !n.empty() && !lambdas.empty())
        cases = expand_matrix(a, b, c, n, opts.p, lambdas, types);
    if (!cases.empty()) {
        // Validate the budget before spending time on the rows.
        sweep_policy(make_metric(cases.front().a, cases.front().b, c), budget);
    }
    const auto rows = verify_all(cases, opts.tol, budget, opts.jobs);

    CommandResult result;
    result.exit_code = verify_exit_code(rows);
    result.document = header("verify");
    result.document["tolerance"] = opts.tol;
    result.document["rows"] = Json::array();

    int counts[3] = {0, 0, 0};
    double worst = 0.0;
    result.text += fmt::format("{:<6} {:<6} {:<3} {:<3} {:<6} {:<7} {:<28} {:<26} {:<10} {}\n", "a", "b", "n", "p",
                               "type", "lambda", "predicted", "numeric", "deviation", "status");
    for (const auto& row : rows) {
        const auto& in = row.input;
        ++counts[static_cast<int>(row.status)];
        if (!std::isnan(row.deviation)) worst = std::max(worst, row.deviation);
        result.text += fmt::format("{:<6} {:<6} {:<3} {:<3} {:<6} {:<7} {:<28} {:<26} {:<10} {}{}\n",
                                   in.a.to_string(), in.b.to_string(), in.n, in.p, to_string(in.type),
                                   in.lambda.to_string(), row.predicted.to_string(), estimate_text(row.numeric),
                                   format_value(row.deviation), to_string(row.status),
                                   row.note.empty() ? "" : "  (" + row.note + ")");
        Json j;
        j["a"] = to_json(in.a);
        j["b"] = to_json(in.b);
        j["c"] = to_json(in.c);
        j["n"] = in.n;
        j["p"] = in.p;
        j["type"] = to_string(in.type);
        j["lambda"] = to_json(in.lambda);
        j["predicted"] = to_json(row.predicted);
        j["numeric"] = estimate_json(row.numeric);
        j["deviation"] = finite_or_null(row.deviation);
        j["status"] = to_string(row.status);
        if (!row.note.empty()) j["note"] = row.note;
        result.document["rows"].push_back(j);
    }
    Json summary;
    summary["rows"] = rows.size();
    summary["pass"] = counts[static_cast<int>(RowStatus::pass)];
    summary["fail"] = counts[static_cast<int>(RowStatus::fail)];
    summary["inconclusive"] = counts[static_cast<int>(RowStatus::inconclusive)];
    summary["worst_deviation"] = finite_or_null(worst);
    summary["exit_code"] = result.exit_code;
    result.document["summary"] = summary;
    result.text += fmt::format("rows: {}  pass: {}  fail: {}  inconclusive: {}  worst deviation: {}  tolerance: {}\n",
                               rows.size(), counts[0], counts[1], counts[2], format_value(worst),
                               format_value(opts.tol));
    if (!opts.out.empty()) result.files.emplace_back(opts.out, result.document.dump(2) + "\n");
    return result;
}

}  // namespace warpspec::cli
