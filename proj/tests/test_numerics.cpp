#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "warpspec/eigensolver.hpp"
#include "warpspec/ess_bottom.hpp"
#include "warpspec/grid.hpp"
#include "warpspec/reduction.hpp"

using namespace warpspec;

namespace {

std::vector<double> dense_eigenvalues(const DiscretizedOperator& op) {
    const int n = op.dimension();
    auto d = op.dense();
    Eigen::MatrixXd m = Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(d.data(), n, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + n};
}

ScalarPotential constant(double v) { return {Expr(Number::real(v)), Expr(1), Coordinate::t}; }

const double kWindows[] = {0.1, 0.5, 0.9};

}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("free three-point stencil") {
    Grid g(0.0, 4.0, 3);
    CHECK(g.step() == doctest::Approx(1.0));
    auto op = discretize(constant(0.0), g);
    CHECK(op.diag1 == std::vector<double>{2.0, 2.0, 2.0});
    CHECK(op.off1 == std::vector<double>{-1.0, -1.0});
    auto ev = lowest_eigenvalues(op, 3);
    CHECK(ev[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ev[2] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("potential sampled at the nodes") {
    ScalarPotential v{Expr::exp(-2), Expr(1), Coordinate::t};
    auto op = discretize(v, Grid(0.0, 4.0, 3));
    for (int i = 0; i < 3; ++i) CHECK(op.diag1[i] == doctest::Approx(2.0 + std::exp(-2.0 * (i + 1))));
}

TEST_CASE("variable principal weight uses midpoints") {
    ScalarPotential v{Expr(0), Expr::exp(1), Coordinate::t};
    Grid g(0.0, 1.0, 4);
    auto op = discretize(v, g);
    double h = g.step();
    CHECK(op.diag1[0] == doctest::Approx((std::exp(0.5 * h) + std::exp(1.5 * h)) / (h * h)));
    CHECK(op.off1[1] == doctest::Approx(-std::exp(2.5 * h) / (h * h)));
}

TEST_CASE("grid and coefficient errors") {
    CHECK_THROWS_AS(Grid(1.0, 1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(Grid(0.0, 1.0, 0), std::invalid_argument);
    ScalarPotential huge{Expr::exp(100), Expr(1), Coordinate::t};
    CHECK_THROWS_AS(discretize(huge, Grid(0.0, 10.0, 5)), std::range_error);
    CHECK_THROWS_AS(lowest_eigenvalues(discretize(constant(0), Grid(0, 1, 3)), 4), std::invalid_argument);
}

TEST_CASE("Sturm bisection agrees with a dense solver") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int it = 0; it < 30; ++it) {
        int n = 5 + it;
        DiscretizedOperator op;
        op.kind = it % 2 == 0 ? OperatorKind::scalar : OperatorKind::coupled;
        for (int i = 0; i < n; ++i) {
            op.diag1.push_back(u(rng));
            op.diag2.push_back(u(rng));
            op.coupling.push_back(u(rng));
            if (i + 1 < n) {
                op.off1.push_back(u(rng));
                op.off2.push_back(u(rng));
            }
        }
        if (op.kind == OperatorKind::scalar) {
            op.diag2.clear();
            op.off2.clear();
            op.coupling.clear();
        }
        auto ref = dense_eigenvalues(op);
        auto ev = lowest_eigenvalues(op, op.dimension());
        for (std::size_t i = 0; i < ev.size(); ++i) CHECK(ev[i] == doctest::Approx(ref[i]).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("steep potential keeps low eigenvalues resolved") {
    // exp(2t) reaches about 1e18 at the right end; the short grid with the same step
    // has the same low eigenvalues because the eigenfunctions have decayed by t = 8.
    ScalarPotential steep{Expr::exp(2), Expr(1), Coordinate::t};
    auto ev = lowest_eigenvalues(discretize(steep, Grid(0.0, 21.0, 2099)), 4);
    auto ref = dense_eigenvalues(discretize(steep, Grid(0.0, 8.0, 799)));
    for (int i = 0; i < 4; ++i) CHECK(ev[i] == doctest::Approx(ref[i]).epsilon(1e-9));
    for (int i = 0; i + 1 < 4; ++i) CHECK(ev[i + 1] - ev[i] > 1.0);
}

TEST_CASE("constant potential reproduces the discrete and continuum eigenvalues") {
    const double v0 = 0.75;
    const double len = 2.0 * std::numbers::pi;
    Grid g(1.0, 1.0 + len, 627);
    auto ev = lowest_eigenvalues(discretize(constant(v0), g), 5);
    const double h = g.step();
    for (int k = 1; k <= 5; ++k) {
        double discrete = v0 + 4.0 / (h * h) * std::pow(std::sin(k * std::numbers::pi * h / (2.0 * len)), 2);
        double continuum = v0 + std::pow(k * std::numbers::pi / len, 2);
        CHECK(ev[k - 1] == doctest::Approx(discrete).epsilon(1e-11));
        CHECK(std::fabs(ev[k - 1] - continuum) / continuum <= 1e-4);
    }
}

TEST_CASE("coupled operator with equal diagonals splits into V +- W") {
    CoupledOperator op{{Expr(1) + Expr::exp(-1, 2)}, {Expr(1) + Expr::exp(-1, 2)}, Expr::exp(-2, 3)};
    Grid g(0.5, 6.0, 40);
    auto coupled = lowest_eigenvalues(discretize(op, g), 80);
    auto plus = lowest_eigenvalues(discretize(ScalarPotential{op.v1.potential + op.coupling}, g), 40);
    auto minus = lowest_eigenvalues(discretize(ScalarPotential{op.v1.potential - op.coupling}, g), 40);
    std::vector<double> merged = plus;
    merged.insert(merged.end(), minus.begin(), minus.end());
    std::sort(merged.begin(), merged.end());
    for (std::size_t i = 0; i < merged.size(); ++i) CHECK(coupled[i] == doctest::Approx(merged[i]).epsilon(1e-10));
}

TEST_CASE("uncoupled equal channels double every eigenvalue") {
    // Integer-valued entries hit exactly singular pivot blocks during bisection.
    CoupledOperator op{{Expr(2)}, {Expr(2)}, Expr()};
    for (int nodes : {9, 40, 499}) {
        Grid g(1.0, 1.0 + (nodes + 1) * 0.01, nodes);
        auto coupled = lowest_eigenvalues(discretize(op, g), 12);
        auto scalar = lowest_eigenvalues(discretize(ScalarPotential{Expr(2)}, g), 6);
        for (int k = 0; k < 6; ++k) {
            CHECK(coupled[2 * k] == doctest::Approx(scalar[k]).epsilon(1e-10));
            CHECK(coupled[2 * k + 1] == doctest::Approx(scalar[k]).epsilon(1e-10));
        }
        auto d = discretize(op, g);
        for (double shift : {0.0, 2.0, 3.0, 4.0, 202.0, 20002.0}) CHECK(count_below(d, shift) % 2 == 0);
    }
}

TEST_CASE("truncation sweep finds the critical-end bottom") {
    auto m = WarpedMetric::exponential(-1, -1);
    for (int lambda : {0, 2, 6}) {
        auto v = build_type1(m, DegreePair(3, 0), lambda);
        SweepPolicy policy;
        policy.left = 1.0;
        auto est = ess_bottom(v, policy);
        CHECK(est.status == EssStatus::bottom);
        CHECK(est.value == doctest::Approx(1.0).epsilon(5e-3));
        CHECK(est.monotone);
        policy.method = EssMethod::potential_liminf;
        CHECK(ess_bottom(v, policy).value == 1.0);
    }
}

TEST_CASE("bound states below the threshold are skipped") {
    ScalarPotential well{Expr(1) + Expr::term(-20, 1, -1), Expr(1), Coordinate::t};
    SweepPolicy policy;
    policy.left = 0.0;
    auto est = ess_bottom(well, policy);
    CHECK(est.status == EssStatus::bottom);
    CHECK(est.continuum_index > 0);
    CHECK(est.value == doctest::Approx(1.0).epsilon(5e-3));
    policy.skip_bound_states = false;
    auto naive = ess_bottom(well, policy);
    CHECK(naive.value < 0.5);
}

TEST_CASE("growing potentials have empty essential spectrum") {
    auto m = WarpedMetric::exponential(-1, 1);
    auto v = build_type1(m, DegreePair(4, 1), 3);
    CHECK(discreteness_test(v, kWindows));
    SweepPolicy policy;
    policy.left = 1.0;
    CHECK(ess_bottom(v, policy).status == EssStatus::empty);
    policy.method = EssMethod::potential_liminf;
    CHECK(ess_bottom(v, policy).status == EssStatus::empty);
}

TEST_CASE("discreteness test against window integrals") {
    struct Case {
        int a;
        Number b;
        int lambda;
        bool expected;
    };
    const Case cases[] = {{-1, 1, 2, true},      {-1, Number::fraction(1, 4), 1, true}, {-2, 1, 2, true},
                          {-3, Number::fraction(1, 2), 5, true}, {-1, -1, 2, false}, {-2, -1, 4, false},
                          {-1, 1, 0, false},     {-2, 2, 0, false},  {-1, 0, 3, false}};
    for (const auto& c : cases) {
        auto m = WarpedMetric::exponential(c.a, c.b);
        for (int p = 0; p < 3; ++p) {
            auto v = build_type1(m, DegreePair(3, p), c.lambda);
            CHECK(discreteness_test(v, kWindows) == c.expected);
            // Oracle: window integrals at increasing positions.
            double x0 = m.is_critical() ? 5.0 : 50.0;
            double i1 = window_integral(v.potential, x0, 0.5);
            double i2 = window_integral(v.potential, 16.0 * x0, 0.5);
            CHECK((i2 > 2.0 * i1 + 1.0) == c.expected);
        }
    }
    auto v = build_type1(WarpedMetric::exponential(-1, 1), DegreePair(3, 0), 1);
    const double bad[] = {1.0};
    CHECK_THROWS_AS(discreteness_test(v, bad), std::invalid_argument);
}

TEST_CASE("coupled discreteness") {
    auto grow = build_type3(WarpedMetric::exponential(-1, 1), DegreePair(3, 1), 2);
    auto decay = build_type3(WarpedMetric::exponential(-1, -1), DegreePair(3, 1), 2);
    auto power = build_type3(WarpedMetric::exponential(-2, 1), DegreePair(4, 2), 2);
    CHECK(discreteness_test(grow, kWindows));
    CHECK(discreteness_test(power, kWindows));
    CHECK_FALSE(discreteness_test(decay, kWindows));
}

TEST_CASE("coupled sweep on the critical end") {
    auto op = build_type3(WarpedMetric::exponential(-1, -1), DegreePair(3, 1), 4);
    SweepPolicy policy;
    policy.left = 1.0;
    auto est = ess_bottom(op, policy);
    CHECK(est.status == EssStatus::bottom);
    CHECK(est.value == doctest::Approx(0.0).scale(1.0).epsilon(5e-3));
    policy.method = EssMethod::potential_liminf;
    CHECK(ess_bottom(op, policy).value == doctest::Approx(0.0));
}

TEST_CASE("power end decays to zero") {
    auto m = WarpedMetric::exponential(-2, -1);
    auto v = build_type1(m, DegreePair(4, 0), 2);
    SweepPolicy policy;
    policy.left = r_coordinate(m, 1.0);
    // Scale-invariant r^-2 tail: the extrapolated error only falls like L^-3.
    policy.sweeps = 8;
    auto est = ess_bottom(v, policy);
    CHECK(est.status == EssStatus::bottom);
    CHECK(std::fabs(est.value) < 5e-3);
}

}
