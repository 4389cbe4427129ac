#pragma once

#include <vector>

#include "warpspec/reduction.hpp"

namespace warpspec {

/// Interior nodes of a uniform grid on [left, right]; both ends carry Dirichlet data.
class Grid {
public:
    Grid(double left, double right, int npoints);

    double left() const { return left_; }
    double right() const { return right_; }
    int npoints() const { return npoints_; }
    double step() const { return (right_ - left_) / (npoints_ + 1); }
    /// Node i in 0..npoints-1.
    double node(int i) const { return left_ + (i + 1) * step(); }
    double midpoint(int i) const { return left_ + (i + 0.5) * step(); }

private:
    double left_;
    double right_;
    int npoints_;
};

enum class OperatorKind { scalar, coupled };

/// Three-point discretisation. Scalar operators are symmetric tridiagonal; coupled
/// operators are stored channel by channel and read as 2x2 blocks per node.
struct DiscretizedOperator {
    OperatorKind kind = OperatorKind::scalar;
    std::vector<double> diag1;
    std::vector<double> off1;  ///< size npoints-1
    std::vector<double> diag2;
    std::vector<double> off2;
    std::vector<double> coupling;

    int nodes() const { return static_cast<int>(diag1.size()); }
    int dimension() const { return kind == OperatorKind::scalar ? nodes() : 2 * nodes(); }
    /// Row-major dense matrix; coupled operators interleave the channels node by node.
    std::vector<double> dense() const;
};

/// diag_i = (P(x_{i-1/2}) + P(x_{i+1/2}))/h^2 + V(x_i), off_i = -P(x_{i+1/2})/h^2.
/// Throws std::range_error if a sampled value is not finite.
DiscretizedOperator discretize(const ScalarPotential& potential, const Grid& grid);
DiscretizedOperator discretize(const CoupledOperator& op, const Grid& grid);

}  // namespace warpspec
