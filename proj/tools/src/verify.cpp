#include "verify.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "options.hpp"
#include "warpspec/classifier.hpp"

namespace warpspec::cli {

namespace {

constexpr double kWindows[] = {0.25, 0.5, 0.75};
constexpr int kExtraSweeps = 2;

bool applicable(int n, int p, FormType type, const Number& lambda) {
    switch (type) {
    case FormType::type1: return p < n;
    case FormType::type2: return p > 0;
    case FormType::type3: return p > 0 && p < n && lambda > Number(0);
    }
    return false;
}

}  // namespace

const char* to_string(RowStatus s) {
    switch (s) {
    case RowStatus::pass: return "PASS";
    case RowStatus::fail: return "FAIL";
    case RowStatus::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

SweepPolicy sweep_policy(const WarpedMetric& metric, const SweepBudget& budget) {
    SweepPolicy policy;
    policy.left = operator_coordinate(metric, metric.c().value());
    if (!metric.is_critical()) policy.sweeps = 8;
    if (budget.l_max) {
        if (!(*budget.l_max > 0.0)) throw usage_error("--L-max must be positive");
        policy.initial_span = *budget.l_max / std::ldexp(1.0, policy.sweeps - 1);
    }
    if (budget.max_nodes) {
        if (*budget.max_nodes < 16) throw usage_error("--grid-points must be at least 16");
        policy.max_nodes = *budget.max_nodes;
    }
    return policy;
}

NumericResult numeric_spectrum(const WarpedMetric& metric, DegreePair deg, FormType type, const Number& lambda,
                               const SweepBudget& budget) {
    SweepPolicy policy = sweep_policy(metric, budget);
    // Without a pinned L-max a sweep that has not settled gets up to two more doublings.
    const int extra = budget.l_max ? 0 : kExtraSweeps;
    NumericResult result;
    auto run = [&](const auto& op) {
        result.discrete = discreteness_test(op, kWindows);
        if (result.discrete) return;
        for (int k = 0; k <= extra; ++k, ++policy.sweeps) {
            result.estimate = ess_bottom(op, policy);
            if (result.estimate.status != EssStatus::inconclusive) break;
        }
    };
    if (type == FormType::type3)
        run(build_type3(metric, deg, lambda));
    else
        run(type == FormType::type1 ? build_type1(metric, deg, lambda) : build_type2(metric, deg, lambda));
    if (result.discrete) {
        result.estimate.status = EssStatus::empty;
        result.estimate.value = std::numeric_limits<double>::infinity();
    }
    return result;
}

std::vector<VerifyCase> expand_matrix(const std::vector<Number>& a, const std::vector<Number>& b, const Number& c,
                                      const std::vector<int>& n, const std::string& p_spec,
                                      const std::vector<Number>& lambdas, const std::vector<FormType>& types) {
    for (const auto& av : a)
        for (const auto& bv : b) make_metric(av, bv, c);
    for (int nv : n)
        if (nv < 2) throw usage_error("--n must be at least 2");
    for (const auto& l : lambdas)
        if (l.sign() < 0) throw usage_error("--lambda values must be non-negative");

    std::vector<VerifyCase> cases;
    for (const auto& av : a)
        for (const auto& bv : b)
            for (int nv : n)
                for (int pv : parse_degrees(p_spec, nv))
                    for (const auto& l : lambdas)
                        for (FormType t : types)
                            if (applicable(nv, pv, t, l)) cases.push_back({av, bv, c, nv, pv, t, l});
    return cases;
}

VerifyRow verify_case(const VerifyCase& input, double tol, const SweepBudget& budget) {
    VerifyRow row;
    row.input = input;
    const auto metric = make_metric(input.a, input.b, input.c);
    const DegreePair deg(input.n, input.p);
    row.predicted = operator_spectrum(metric, deg, input.type, input.lambda);
    try {
        row.numeric = numeric_spectrum(metric, deg, input.type, input.lambda, budget);
    } catch (const std::exception& e) {
        row.status = RowStatus::inconclusive;
        row.deviation = std::numeric_limits<double>::quiet_NaN();
        row.note = e.what();
        return row;
    }

    const auto bottom = row.predicted.bottom();
    if (row.numeric.inconclusive()) {
        row.status = RowStatus::inconclusive;
        row.deviation = bottom ? std::fabs(row.numeric.estimate.value - bottom->value())
                               : std::numeric_limits<double>::infinity();
    } else if (!bottom || row.numeric.empty()) {
        const bool both = !bottom && row.numeric.empty();
        row.deviation = both ? 0.0 : std::numeric_limits<double>::infinity();
        row.status = both ? RowStatus::pass : RowStatus::fail;
    } else {
        row.deviation = std::fabs(row.numeric.estimate.value - bottom->value());
        row.status = row.deviation <= tol ? RowStatus::pass : RowStatus::fail;
    }
    return row;
}

std::vector<VerifyRow> verify_all(const std::vector<VerifyCase>& cases, double tol, const SweepBudget& budget,
                                  int jobs) {
    std::vector<VerifyRow> rows(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) rows[i] = verify_case(cases[i], tol, budget);
    };
    const auto threads = static_cast<std::size_t>(std::max(1, jobs));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < std::min(threads, cases.size()); ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return rows;
}

int verify_exit_code(const std::vector<VerifyRow>& rows) {
    bool inconclusive = false;
    for (const auto& r : rows) {
        if (r.status == RowStatus::fail) return 2;
        if (r.status == RowStatus::inconclusive) inconclusive = true;
    }
    return inconclusive ? 3 : 0;
}

}  // namespace warpspec::cli
