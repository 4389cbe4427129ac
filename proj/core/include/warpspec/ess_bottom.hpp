#pragma once

#include <span>
#include <string>
#include <vector>

#include "warpspec/reduction.hpp"

namespace warpspec {

enum class EssMethod { potential_liminf, truncation_convergence };
enum class EssStatus { bottom, empty, inconclusive };

const char* to_string(EssMethod m);
const char* to_string(EssStatus s);

/// Controls the truncation sweep over intervals [left, left + span * 2^j], j = 0..sweeps-1.
struct SweepPolicy {
    EssMethod method = EssMethod::truncation_convergence;
    double left = 1.0;          ///< left end in the operator's own coordinate
    double initial_span = 5.0;
    int sweeps = 7;
    int mode = 1;               ///< which continuum eigenvalue to follow, 1-based
    int probe = 6;              ///< eigenvalues computed per interval
    double max_step = 0.01;
    double potential_cap = 1e12;
    int max_nodes = 400000;
    double convergence_tol = 1e-4;
    bool skip_bound_states = true;
};

struct SweepRow {
    double length;
    int npoints;
    std::vector<double> eigenvalues;
};

struct EssBottomEstimate {
    EssStatus status = EssStatus::inconclusive;
    double value = 0.0;
    EssMethod method = EssMethod::truncation_convergence;
    double spread = 0.0;        ///< spread of the last three extrapolated values
    int continuum_index = 0;    ///< 0-based index of the followed eigenvalue
    bool monotone = true;       ///< eigenvalues never rose as the interval grew
    std::vector<SweepRow> diagnostics;
};

/// Bottom of the essential spectrum of a reduced operator.
///
/// potential_liminf reads the limit of the potential symbolically. truncation_convergence
/// follows the lowest non-stationary Dirichlet eigenvalue as the interval doubles,
/// skipping stationary ones (bound states), and Richardson-extrapolates in 1/L^2.
/// A sweep in which every probed eigenvalue is stationary reports an empty essential
/// spectrum only when the potential grows; otherwise it is inconclusive.
EssBottomEstimate ess_bottom(const ScalarPotential& potential, const SweepPolicy& policy);
EssBottomEstimate ess_bottom(const CoupledOperator& op, const SweepPolicy& policy);

/// Molchanov criterion: the integral of V over [t, t+h] tends to +inf for every h in (0, 1).
/// Decided from the leading term; throws std::invalid_argument for h outside (0, 1)
/// or a non-constant principal weight.
bool discreteness_test(const ScalarPotential& potential, std::span<const double> h_samples);
/// Coupled version: the smallest eigenvalue of the potential matrix tends to +inf.
bool discreteness_test(const CoupledOperator& op, std::span<const double> h_samples);

/// Integral of e over [t, t+h] by composite Simpson.
double window_integral(const Expr& e, double t, double h);

}  // namespace warpspec
