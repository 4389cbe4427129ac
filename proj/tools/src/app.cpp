#include "app.hpp"

#include <fstream>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace warpspec::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw usage_error("cannot open '" + path + "' for writing");
    file << contents;
    if (!file) throw usage_error("failed writing '" + path + "'");
}

}  // namespace

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Essential spectra of form Laplacians on warped-product ends", "warpspec"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1, 1);
    app.set_config("--config", "", "Flat key=value file; command-line flags override it");

    Options opts;
    int grid_points = 0;
    double l_max = 0.0;

    // Options live on the root app so one config file serves every subcommand. The config
    // reader splits "a = -1,-2" into separate values, so list-capable options collect
    // every value and are joined back with commas.
    std::map<std::string, std::vector<std::string>> raw;
    auto text_option = [&](const std::string& name, const std::string& help) {
        return app.add_option("--" + name, raw[name], help)->allow_extra_args(false)->delimiter(',');
    };
    text_option("a", "Exponent a <= -1 in f = exp(-2(a+1)t); verify accepts a comma list");
    text_option("b", "Exponent b in g = exp(-2bt); verify accepts a comma list");
    text_option("c", "Left end of the half-cylinder (default 1)");
    text_option("n", "Manifold dimension; verify accepts a comma list");
    text_option("p", "Form degree, a comma list, or 'all'");
    text_option("lambda", "Boundary eigenvalue; verify accepts a comma list");
    app.add_flag("--sphere", opts.sphere, "Round sphere cross-section");
    text_option("betti", "Betti numbers of the cross-section in degrees 0..n-1, comma separated");
    app.add_option("--coclosed", opts.coclosed, "Coclosed eigenvalues per degree, e.g. '0:0,2,6;1:2,6'");
    text_option("type", "Form type 1, 2 or 3; verify accepts a comma list or 'all'");
    auto* grid_opt = app.add_option("--grid-points", grid_points, "Interior grid nodes (verify: node cap per sweep)");
    auto* lmax_opt = app.add_option("--L-max", l_max, "Truncation length (verify: longest sweep interval)");
    app.add_option("--tol", opts.tol, "Verify tolerance on ray starts")->capture_default_str();
    app.add_option("--jobs", opts.jobs, "Parallel verification rows")->capture_default_str();
    app.add_option("--count", opts.count, "Eigenvalues reported by solve")->capture_default_str();
    app.add_option("--out", opts.out, "Write the JSON report (reduce: CSV series) to this path");
    app.add_flag("--json", opts.json, "Print the JSON report instead of text");

    auto* classify = app.add_subcommand("classify", "Essential spectrum per degree from the closed-form cases");
    auto* reduce = app.add_subcommand("reduce", "Reduced one-dimensional potentials");
    auto* solve = app.add_subcommand("solve", "Truncated eigenvalues and the essential-spectrum bottom of one operator");
    auto* verify = app.add_subcommand("verify", "Numerical bottoms against the classifier over a parameter matrix");
    for (auto* sub : {classify, reduce, solve, verify}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }
    auto joined = [&](const std::string& name) {
        std::string text;
        for (const auto& v : raw[name]) text += (text.empty() ? "" : ",") + v;
        return text;
    };
    opts.a = joined("a");
    opts.b = joined("b");
    if (!raw["c"].empty()) opts.c = joined("c");
    opts.n = joined("n");
    opts.p = joined("p");
    opts.lambda = joined("lambda");
    opts.betti = joined("betti");
    opts.type = joined("type");
    if (grid_opt->count() > 0) opts.grid_points = grid_points;
    if (lmax_opt->count() > 0) opts.l_max = l_max;

    CommandResult result;
    try {
        if (classify->parsed())
            result = run_classify(opts);
        else if (reduce->parsed())
            result = run_reduce(opts);
        else if (solve->parsed())
            result = run_solve(opts);
        else
            result = run_verify(opts);
        for (const auto& [path, contents] : result.files) write_file(path, contents);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    if (opts.json)
        out << result.document.dump(2) << "\n";
    else
        out << result.text;
    return result.exit_code;
}

}  // namespace warpspec::cli
