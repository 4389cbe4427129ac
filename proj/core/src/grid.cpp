#include "warpspec/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace warpspec {

Grid::Grid(double left, double right, int npoints) : left_(left), right_(right), npoints_(npoints) {
    if (!(right > left) || !std::isfinite(left) || !std::isfinite(right))
        throw std::invalid_argument("grid needs finite left < right");
    if (npoints < 1) throw std::invalid_argument("grid needs at least one interior point");
}

namespace {

double checked(double v) {
    if (!std::isfinite(v)) throw std::range_error("non-finite coefficient on the grid; shorten the interval");
    return v;
}

void fill_channel(const ScalarPotential& pot, const Grid& grid, std::vector<double>& diag, std::vector<double>& off) {
    const int n = grid.npoints();
    const double h2 = grid.step() * grid.step();
    diag.assign(n, 0.0);
    off.assign(n > 0 ? n - 1 : 0, 0.0);
    if (pot.principal_weight.is_constant()) {
        const double w = pot.principal_weight.constant_term().value();
        for (int i = 0; i < n; ++i) diag[i] = checked(2.0 * w / h2 + pot.potential(grid.node(i)));
        for (int i = 0; i + 1 < n; ++i) off[i] = -w / h2;
        return;
    }
    double w_left = checked(pot.principal_weight(grid.midpoint(0)));
    for (int i = 0; i < n; ++i) {
        double w_right = checked(pot.principal_weight(grid.midpoint(i + 1)));
        diag[i] = checked((w_left + w_right) / h2 + pot.potential(grid.node(i)));
        if (i + 1 < n) off[i] = -w_right / h2;
        w_left = w_right;
    }
}

}  // namespace

DiscretizedOperator discretize(const ScalarPotential& potential, const Grid& grid) {
    DiscretizedOperator op;
    op.kind = OperatorKind::scalar;
    fill_channel(potential, grid, op.diag1, op.off1);
    return op;
}

DiscretizedOperator discretize(const CoupledOperator& coupled, const Grid& grid) {
    DiscretizedOperator op;
    op.kind = OperatorKind::coupled;
    fill_channel(coupled.v1, grid, op.diag1, op.off1);
    fill_channel(coupled.v2, grid, op.diag2, op.off2);
    op.coupling.resize(grid.npoints());
    for (int i = 0; i < grid.npoints(); ++i) op.coupling[i] = checked(coupled.coupling(grid.node(i)));
    return op;
}

std::vector<double> DiscretizedOperator::dense() const {
    const int dim = dimension();
    std::vector<double> m(static_cast<std::size_t>(dim) * dim, 0.0);
    auto at = [&](int r, int c) -> double& { return m[static_cast<std::size_t>(r) * dim + c]; };
    const int n = nodes();
    if (kind == OperatorKind::scalar) {
        for (int i = 0; i < n; ++i) at(i, i) = diag1[i];
        for (int i = 0; i + 1 < n; ++i) at(i, i + 1) = at(i + 1, i) = off1[i];
        return m;
    }
    for (int i = 0; i < n; ++i) {
        at(2 * i, 2 * i) = diag1[i];
        at(2 * i + 1, 2 * i + 1) = diag2[i];
        at(2 * i, 2 * i + 1) = at(2 * i + 1, 2 * i) = coupling[i];
    }
    for (int i = 0; i + 1 < n; ++i) {
        at(2 * i, 2 * i + 2) = at(2 * i + 2, 2 * i) = off1[i];
        at(2 * i + 1, 2 * i + 3) = at(2 * i + 3, 2 * i + 1) = off2[i];
    }
    return m;
}

}  // namespace warpspec
