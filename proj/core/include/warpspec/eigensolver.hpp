#pragma once

#include <vector>

#include "warpspec/grid.hpp"

namespace warpspec {

/// Number of eigenvalues strictly below `shift`, from the inertia of the LDL^T
/// factorisation of (op - shift). Coupled operators use 2x2 pivot blocks.
int count_below(const DiscretizedOperator& op, double shift);

/// Enclosing interval [lo, hi] for the whole spectrum (Gershgorin).
std::pair<double, double> spectral_bounds(const DiscretizedOperator& op);

/// The `count` smallest eigenvalues in ascending order, by bisection on count_below.
/// Each is resolved to max(rel_tol * |lambda|, machine epsilon * min(||op||, 1)).
std::vector<double> lowest_eigenvalues(const DiscretizedOperator& op, int count, double rel_tol = 1e-12);

}  // namespace warpspec
