#include "warpspec/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace warpspec {

namespace {

constexpr double kPivotFloor = 1e-280;

int count_scalar(const DiscretizedOperator& op, double shift) {
    const int n = op.nodes();
    int negatives = 0;
    double q = 1.0;
    for (int i = 0; i < n; ++i) {
        double e2 = i > 0 ? op.off1[i - 1] * op.off1[i - 1] : 0.0;
        q = (op.diag1[i] - shift) - (i > 0 ? e2 / q : 0.0);
        if (std::fabs(q) < kPivotFloor) q = -kPivotFloor;
        if (q < 0.0) ++negatives;
    }
    return negatives;
}

int count_coupled(const DiscretizedOperator& op, double shift) {
    const int n = op.nodes();
    int negatives = 0;
    // Pivot block [[p, q], [q, r]].
    double p = 0.0, q = 0.0, r = 0.0, det = 1.0;
    for (int i = 0; i < n; ++i) {
        double np = op.diag1[i] - shift;
        double nq = op.coupling[i];
        double nr = op.diag2[i] - shift;
        if (i > 0) {
            const double e1 = op.off1[i - 1];
            const double e2 = op.off2[i - 1];
            np -= e1 * e1 * r / det;
            nq += e1 * e2 * q / det;
            nr -= e2 * e2 * p / det;
        }
        p = np;
        q = nq;
        r = nr;
        det = p * r - q * q;
        // A singular pivot block is moved slightly below zero, as in the scalar count:
        // eigenvalues equal to the shift count as below it.
        const double delta = 1e-14 * (std::fabs(op.diag1[i]) + std::fabs(op.diag2[i]) + std::fabs(shift)) + kPivotFloor;
        const bool tiny = std::max({std::fabs(p), std::fabs(q), std::fabs(r)}) < delta;
        if (tiny || std::fabs(det) <= 1e-15 * std::max(std::fabs(p * r), q * q)) {
            p -= delta;
            r -= delta;
            det = p * r - q * q;
        }
        if (det < 0.0)
            negatives += 1;
        else if (p + r < 0.0)
            negatives += 2;
    }
    return negatives;
}

}  // namespace

int count_below(const DiscretizedOperator& op, double shift) {
    return op.kind == OperatorKind::scalar ? count_scalar(op, shift) : count_coupled(op, shift);
}

std::pair<double, double> spectral_bounds(const DiscretizedOperator& op) {
    const int n = op.nodes();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    auto row = [&](double d, double radius) {
        lo = std::min(lo, d - radius);
        hi = std::max(hi, d + radius);
    };
    for (int i = 0; i < n; ++i) {
        double r1 = (i > 0 ? std::fabs(op.off1[i - 1]) : 0.0) + (i + 1 < n ? std::fabs(op.off1[i]) : 0.0);
        if (op.kind == OperatorKind::scalar) {
            row(op.diag1[i], r1);
        } else {
            double r2 = (i > 0 ? std::fabs(op.off2[i - 1]) : 0.0) + (i + 1 < n ? std::fabs(op.off2[i]) : 0.0);
            double c = std::fabs(op.coupling[i]);
            row(op.diag1[i], r1 + c);
            row(op.diag2[i], r2 + c);
        }
    }
    return {lo, hi};
}

std::vector<double> lowest_eigenvalues(const DiscretizedOperator& op, int count, double rel_tol) {
    if (count < 0) throw std::invalid_argument("eigenvalue count must be non-negative");
    if (count > op.dimension()) throw std::invalid_argument("more eigenvalues requested than the matrix has");
    auto [lo0, hi0] = spectral_bounds(op);
    // The floor is capped at unit scale: a steep potential makes ||op|| huge without
    // affecting how well the low eigenvalues are determined.
    const double norm = std::max(std::fabs(lo0), std::fabs(hi0));
    const double abs_tol = 4.0 * std::numeric_limits<double>::epsilon() * std::min(norm, 1.0);

    std::vector<double> out;
    out.reserve(count);
    double floor = lo0;
    for (int j = 0; j < count; ++j) {
        double lo = floor;
        double hi = hi0;
        while (hi - lo > std::max(abs_tol, rel_tol * std::max(std::fabs(lo), std::fabs(hi)))) {
            double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (count_below(op, mid) >= j + 1)
                hi = mid;
            else
                lo = mid;
        }
        double lambda = 0.5 * (lo + hi);
        out.push_back(lambda);
        floor = lo;
    }
    return out;
}

}  // namespace warpspec
