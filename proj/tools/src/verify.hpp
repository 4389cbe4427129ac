#pragma once

#include <optional>
#include <string>
#include <vector>

#include "warpspec/ess_bottom.hpp"
#include "warpspec/spectrum.hpp"

namespace warpspec::cli {

struct VerifyCase {
    Number a;
    Number b;
    Number c;
    int n;
    int p;
    FormType type;
    Number lambda;
};

/// Sweep limits. Unset fields keep the library defaults.
struct SweepBudget {
    std::optional<double> l_max;    ///< longest truncation length
    std::optional<int> max_nodes;   ///< node cap on the longest interval
};

/// Sweep policy for the reduced operators of `metric`: starts at the operator coordinate
/// of c and adds one doubling for power-law (r coordinate) ends, whose extrapolated
/// error decays only like L^-3.
SweepPolicy sweep_policy(const WarpedMetric& metric, const SweepBudget& budget);

/// Numerical essential spectrum of one reduced operator: the discreteness test first,
/// the truncation sweep when the test is negative. Unless L-max is pinned, an
/// inconclusive sweep is repeated with up to two further doublings.
struct NumericResult {
    bool discrete = false;
    EssBottomEstimate estimate;

    bool empty() const { return discrete || estimate.status == EssStatus::empty; }
    bool inconclusive() const { return !discrete && estimate.status == EssStatus::inconclusive; }
};

NumericResult numeric_spectrum(const WarpedMetric& metric, DegreePair deg, FormType type, const Number& lambda,
                               const SweepBudget& budget);

enum class RowStatus { pass, fail, inconclusive };
const char* to_string(RowStatus s);

struct VerifyRow {
    VerifyCase input;
    SpectrumDescription predicted;
    NumericResult numeric;
    double deviation = 0.0;  ///< |numeric - predicted| bottom; 0 when both are empty, inf on mismatch
    RowStatus status = RowStatus::fail;
    std::string note;        ///< set when the numerics threw
};

/// All applicable (case, type) rows in a fixed order: a, b, n, p, lambda, type.
/// Type 1 needs p < n, type 2 needs p > 0, type 3 needs 0 < p < n and lambda > 0.
std::vector<VerifyCase> expand_matrix(const std::vector<Number>& a, const std::vector<Number>& b, const Number& c,
                                      const std::vector<int>& n, const std::string& p_spec,
                                      const std::vector<Number>& lambdas, const std::vector<FormType>& types);

VerifyRow verify_case(const VerifyCase& input, double tol, const SweepBudget& budget);

/// Runs every case on up to `jobs` threads; rows come back in input order.
std::vector<VerifyRow> verify_all(const std::vector<VerifyCase>& cases, double tol, const SweepBudget& budget,
                                  int jobs);

/// 0 if every row passed, 2 if any failed, 3 if none failed but some were inconclusive.
int verify_exit_code(const std::vector<VerifyRow>& rows);

}  // namespace warpspec::cli
