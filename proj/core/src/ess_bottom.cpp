#include "warpspec/ess_bottom.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "warpspec/eigensolver.hpp"
#include "warpspec/grid.hpp"

namespace warpspec {

namespace {

void require_window_samples(std::span<const double> h_samples) {
    if (h_samples.empty()) throw std::invalid_argument("need at least one window length");
    for (double h : h_samples)
        if (!(h > 0.0 && h < 1.0)) throw std::invalid_argument("window lengths must lie in (0, 1)");
}

void require_constant_weight(const ScalarPotential& pot) {
    if (!pot.principal_weight.is_constant() || !(pot.principal_weight.constant_term() > Number(0)))
        throw std::invalid_argument("expected a constant positive principal weight");
}

bool grows_to_plus_infinity(const Expr& e) {
    return e.growth() == Expr::Growth::grows && e.dominant().coeff.sign() > 0;
}

Expr leading(const Expr& e) {
    const Term& t = e.dominant();
    return Expr::term(t.coeff, t.power, t.rate);
}

struct SweepInput {
    std::function<DiscretizedOperator(const Grid&)> discretize;
    std::function<double(double)> size;  // largest diagonal coefficient magnitude at x
    double decay_length;                 // 0 when no exponential scale
    bool grows;
};

// Largest span whose potential stays below the cap, searched up to `limit`.
double capped_span(const SweepInput& in, double left, double limit, double cap) {
    if (std::isfinite(in.size(left + limit)) && in.size(left + limit) <= cap) return limit;
    double lo = 0.0;
    double hi = limit;
    for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        double v = in.size(left + mid);
        if (std::isfinite(v) && v <= cap)
            lo = mid;
        else
            hi = mid;
    }
    if (lo <= 0.0) throw std::range_error("potential exceeds the cap at the left end");
    return lo;
}

EssBottomEstimate sweep(const SweepInput& in, const SweepPolicy& policy) {
    if (policy.sweeps < 4) throw std::invalid_argument("truncation sweep needs at least four intervals");
    if (policy.mode < 1 || policy.probe < policy.mode) throw std::invalid_argument("invalid mode/probe settings");
    if (!(policy.initial_span > 0.0) || !(policy.max_step > 0.0)) throw std::invalid_argument("invalid sweep lengths");

    const int last = policy.sweeps - 1;
    const double factor = std::ldexp(1.0, last);
    double longest = policy.initial_span * factor;
    if (in.grows) longest = capped_span(in, policy.left, longest, policy.potential_cap);
    const double shortest = longest / factor;

    double target = policy.max_step;
    if (in.decay_length > 0.0) target = std::min(target, in.decay_length / 20.0);
    // Nested grids: every interval is an integer number of the same cells.
    auto cells = static_cast<long>(std::ceil(shortest / target));
    cells = std::max<long>(cells, policy.probe + 1);
    const long max_cells = static_cast<long>(policy.max_nodes / factor);
    cells = std::max<long>(std::min(cells, max_cells), policy.probe + 1);
    const double step = shortest / static_cast<double>(cells);

    EssBottomEstimate est;
    est.method = EssMethod::truncation_convergence;
    for (int j = 0; j <= last; ++j) {
        long intervals = cells << j;
        double length = step * static_cast<double>(intervals);
        Grid grid(policy.left, policy.left + length, static_cast<int>(intervals - 1));
        auto op = in.discretize(grid);
        est.diagnostics.push_back({length, grid.npoints(), lowest_eigenvalues(op, policy.probe)});
    }

    for (int j = 1; j <= last; ++j)
        for (int i = 0; i < policy.probe; ++i) {
            double prev = est.diagnostics[j - 1].eigenvalues[i];
            if (est.diagnostics[j].eigenvalues[i] > prev + 1e-9 * (1.0 + std::fabs(prev))) est.monotone = false;
        }

    // Continuum eigenvalues fall by about 3 pi^2 / L^2 when L doubles; bound states barely move.
    int first_moving = 0;
    if (policy.skip_bound_states) {
        const double scale = std::pow(std::numbers::pi / est.diagnostics[last].length, 2);
        first_moving = policy.probe;
        for (int i = 0; i < policy.probe; ++i) {
            double move = est.diagnostics[last - 1].eigenvalues[i] - est.diagnostics[last].eigenvalues[i];
            if (move >= 0.1 * scale) {
                first_moving = i;
                break;
            }
        }
    }
    const int index = first_moving + policy.mode - 1;
    if (index >= policy.probe) {
        est.continuum_index = policy.probe;
        est.value = in.grows ? std::numeric_limits<double>::infinity() : est.diagnostics[last].eigenvalues[0];
        est.status = in.grows ? EssStatus::empty : EssStatus::inconclusive;
        return est;
    }
    est.continuum_index = index;

    std::vector<double> extrapolated;
    for (int j = 1; j <= last; ++j)
        extrapolated.push_back((4.0 * est.diagnostics[j].eigenvalues[index] - est.diagnostics[j - 1].eigenvalues[index]) /
                               3.0);
    auto tail = std::span(extrapolated).last(3);
    auto [mn, mx] = std::minmax_element(tail.begin(), tail.end());
    est.value = extrapolated.back();
    est.spread = *mx - *mn;
    bool converged = est.spread <= policy.convergence_tol * (1.0 + std::fabs(est.value));
    est.status = (converged && !in.grows) ? EssStatus::bottom : EssStatus::inconclusive;
    return est;
}

double decay_length_of(std::initializer_list<const Expr*> exprs) {
    double best = 0.0;
    for (const Expr* e : exprs) {
        double len = e->shortest_decay_length();
        if (len > 0.0 && (best == 0.0 || len < best)) best = len;
    }
    return best;
}

EssBottomEstimate liminf_result(double value, EssStatus status) {
    EssBottomEstimate est;
    est.method = EssMethod::potential_liminf;
    est.status = status;
    est.value = value;
    return est;
}

}  // namespace

const char* to_string(EssMethod m) {
    return m == EssMethod::potential_liminf ? "potential-liminf" : "truncation-convergence";
}

const char* to_string(EssStatus s) {
    switch (s) {
    case EssStatus::bottom: return "bottom";
    case EssStatus::empty: return "empty";
    case EssStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

EssBottomEstimate ess_bottom(const ScalarPotential& potential, const SweepPolicy& policy) {
    const Expr& v = potential.potential;
    const bool grows = v.growth() == Expr::Growth::grows;
    if (grows && v.dominant().coeff.sign() < 0) throw std::domain_error("potential is unbounded below");

    if (policy.method == EssMethod::potential_liminf) {
        require_constant_weight(potential);
        if (grows) return liminf_result(std::numeric_limits<double>::infinity(), EssStatus::empty);
        return liminf_result(v.constant_term().value(), EssStatus::bottom);
    }

    SweepInput in;
    in.discretize = [&](const Grid& g) { return discretize(potential, g); };
    in.size = [&](double x) { return std::fabs(v(x)); };
    in.decay_length = decay_length_of({&v, &potential.principal_weight});
    in.grows = grows;
    return sweep(in, policy);
}

EssBottomEstimate ess_bottom(const CoupledOperator& op, const SweepPolicy& policy) {
    const Expr& v1 = op.v1.potential;
    const Expr& v2 = op.v2.potential;
    const Expr& w = op.coupling;
    const Expr trace = v1 + v2;
    const bool grows = trace.growth() == Expr::Growth::grows;

    if (policy.method == EssMethod::potential_liminf) {
        require_constant_weight(op.v1);
        require_constant_weight(op.v2);
        const double probe[] = {0.5};
        if (discreteness_test(op, probe))
            return liminf_result(std::numeric_limits<double>::infinity(), EssStatus::empty);
        if (v1.growth() == Expr::Growth::grows || v2.growth() == Expr::Growth::grows ||
            w.growth() == Expr::Growth::grows)
            throw std::domain_error("potential matrix has no finite limit");
        const double c1 = v1.constant_term().value();
        const double c2 = v2.constant_term().value();
        const double c = w.constant_term().value();
        const double mid = 0.5 * (c1 + c2);
        return liminf_result(mid - std::hypot(0.5 * (c1 - c2), c), EssStatus::bottom);
    }

    SweepInput in;
    in.discretize = [&](const Grid& g) { return discretize(op, g); };
    in.size = [&](double x) { return std::max({std::fabs(v1(x)), std::fabs(v2(x)), std::fabs(w(x))}); };
    in.decay_length = decay_length_of({&v1, &v2, &w, &op.v1.principal_weight, &op.v2.principal_weight});
    in.grows = grows;
    return sweep(in, policy);
}

bool discreteness_test(const ScalarPotential& potential, std::span<const double> h_samples) {
    require_window_samples(h_samples);
    require_constant_weight(potential);
    // Every window integral inherits the leading term, so one growing positive term decides.
    return grows_to_plus_infinity(potential.potential);
}

bool discreteness_test(const CoupledOperator& op, std::span<const double> h_samples) {
    require_window_samples(h_samples);
    require_constant_weight(op.v1);
    require_constant_weight(op.v2);
    // lambda_min -> inf  iff  trace -> inf and det/trace -> inf.
    const Expr trace = op.v1.potential + op.v2.potential;
    const Expr det = op.v1.potential * op.v2.potential - op.coupling * op.coupling;
    if (!grows_to_plus_infinity(trace) || det.is_zero()) return false;
    return grows_to_plus_infinity(leading(det) / leading(trace));
}

double window_integral(const Expr& e, double t, double h) {
    // Composite Simpson on 256 panels.
    constexpr int panels = 256;
    const double dx = h / panels;
    double sum = e(t) + e(t + h);
    for (int i = 1; i < panels; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * e(t + i * dx);
    return sum * dx / 3.0;
}

}  // namespace warpspec
