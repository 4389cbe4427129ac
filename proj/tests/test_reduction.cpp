#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "warpspec/reduction.hpp"

using namespace warpspec;

namespace {

const Number kQuarter = Number::fraction(1, 4);

// Liouville oracle: with w = phi h the reduced potential is
// V = phi^{-1} (P phi')' + (operator applied to h = 1), P = 1/f.
double liouville_potential(FormType type, const Expr& f, const Expr& g, DegreePair deg, const Number& lambda,
                           double x) {
    const int n = deg.n;
    const int p = deg.p;
    Expr phi, on_one;
    if (type == FormType::type1) {
        phi = f.pow(kQuarter) * g.pow(Number::fraction(n - 2 * p - 1, 4));
        on_one = Expr(lambda) / g;
    } else {
        phi = f.pow(-kQuarter) * g.pow(Number::fraction(n - 2 * p + 1, 4));
        Expr inner = f.pow(Number::fraction(-1, 2)) * g.pow(Number::fraction(n + 1 - 2 * p, 2));
        Expr outer = f.pow(Number::fraction(-1, 2)) * g.pow(Number::fraction(-n - 1 + 2 * p, 2));
        on_one = Expr(lambda) / g - (outer * inner.derivative()).derivative();
    }
    Expr flux = (phi.derivative() / f).derivative();
    return flux(x) / phi(x) + on_one(x);
}

Expr random_warp(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(1, 5), q(-3, 3), r(-4, 4);
    return Expr::term(Number::fraction(c(rng), 2), Number::fraction(q(rng), 2), Number::fraction(r(rng), 2));
}

}  // namespace

TEST_SUITE("reduction") {

TEST_CASE("critical end, type1 potential") {
    auto m = WarpedMetric::exponential(-1, -1);
    auto v = build_type1(m, DegreePair(3, 0), 1);
    CHECK(v.to_string() == "V(t) = 1 + 1·exp(-2t)");
    CHECK(v.coordinate == Coordinate::t);
}

TEST_CASE("power end, type1 potential in r") {
    auto m = WarpedMetric::exponential(-2, 1);
    auto v = build_type1(m, DegreePair(3, 0), 0);
    CHECK(v.to_string() == "V(r) = 2·r^-2");
    CHECK(v.principal_weight == Expr(1));
}

TEST_CASE("type3 on the critical end") {
    auto m = WarpedMetric::exponential(-1, -1);
    auto op = build_type3(m, DegreePair(3, 1), 4);
    CHECK(op.v1.potential == Expr::exp(-2, 4));
    CHECK(op.v2.potential == Expr(1) + Expr::exp(-2, 4));
    CHECK(op.coupling == Expr::exp(-1, 4));
    CHECK_THROWS_AS(build_type3(m, DegreePair(3, 1), 0), std::invalid_argument);
    CHECK_THROWS_AS(build_type3(m, DegreePair(3, 0), 1), std::invalid_argument);
}

TEST_CASE("degree restrictions") {
    auto m = WarpedMetric::exponential(-1, -1);
    CHECK_THROWS_AS(build_type1(m, DegreePair(3, 3), 0), std::invalid_argument);
    CHECK_THROWS_AS(build_type2(m, DegreePair(3, 0), 0), std::invalid_argument);
    CHECK_THROWS_AS(build_type1(m, DegreePair(3, 1), -1), std::invalid_argument);
}

TEST_CASE("r^-2 coefficients") {
    // Independent values from a symbolic Liouville reduction.
    auto k = k_constants(DegreePair(3, 0), -2, 1);
    CHECK(k.k1 == Number(2));
    CHECK(k.k2 == Number(2));
    auto k2 = k_constants(DegreePair(4, 1), -3, Number::fraction(-1, 2));
    CHECK(k2.k1 == Number::fraction(-7, 64));
    CHECK(k2.k2 == Number::fraction(33, 64));
    CHECK_THROWS_AS(k_constants(DegreePair(3, 0), -1, 1), std::invalid_argument);
}

TEST_CASE("Hodge duality exchanges type1 and type2") {
    for (int n = 2; n <= 7; ++n)
        for (int p = 1; p <= n; ++p)
            for (int a : {-1, -2, -3})
                for (auto b : {Number(-2), Number::fraction(-1, 2), Number(0), Number::fraction(3, 2)}) {
                    auto m = WarpedMetric::exponential(a, b);
                    auto v2 = build_type2(m, DegreePair(n, p), 3);
                    auto v1 = build_type1(m, DegreePair(n, n - p), 3);
                    CHECK(v1.potential == v2.potential);
                    if (a < -1) CHECK(k_constants(DegreePair(n, p), a, b).k2 == k_constants(DegreePair(n, n - p), a, b).k1);
                }
}

TEST_CASE("general bracket specialises to the critical end") {
    for (int n = 2; n <= 8; ++n)
        for (int p = 0; p <= n; ++p)
            for (auto b : {Number(-2), Number::fraction(-1, 2), Number::fraction(1, 2), Number(2)})
                for (auto lambda : {Number(0), Number(3)}) {
                    auto m = WarpedMetric::exponential(-1, b);
                    DegreePair d(n, p);
                    if (p < n) CHECK(general_type1(Expr(1), Expr::exp(-2 * b), d, lambda).potential ==
                                     build_type1(m, d, lambda).potential);
                    if (p > 0) CHECK(general_type2(Expr(1), Expr::exp(-2 * b), d, lambda).potential ==
                                     build_type2(m, d, lambda).potential);
                    if (p > 0 && p < n && lambda > Number(0))
                        CHECK(general_coupling(Expr(1), Expr::exp(-2 * b), lambda) == build_type3(m, d, lambda).coupling);
                }
}

TEST_CASE("general bracket in r reproduces the power-end operators") {
    for (int a : {-2, -3, -5})
        for (auto b : {Number(-1), Number(1), Number(2)})
            for (int n = 2; n <= 6; ++n)
                for (int p = 0; p <= n; ++p) {
                    auto m = WarpedMetric::exponential(a, b);
                    DegreePair d(n, p);
                    Number s = Number(2) * b / (a + 1);
                    Expr g = Expr::monomial(s, Number(-(a + 1)).pow(s));
                    Number lambda(5);
                    if (p < n) CHECK(general_type1(Expr(1), g, d, lambda).potential == build_type1(m, d, lambda).potential);
                    if (p > 0) CHECK(general_type2(Expr(1), g, d, lambda).potential == build_type2(m, d, lambda).potential);
                    if (p > 0 && p < n) CHECK(general_coupling(Expr(1), g, lambda) == build_type3(m, d, lambda).coupling);
                }
}

TEST_CASE("coupling on the power end carries the 2b/(a+1) factor") {
    auto op = build_type3(WarpedMetric::exponential(-2, 1), DegreePair(3, 1), 1);
    CHECK(op.coupling(1.0) == doctest::Approx(-2.0));
    CHECK(op.coupling == Expr::monomial(0, -2));
}

TEST_CASE("general bracket matches the Liouville oracle") {
    std::mt19937 rng(5);
    for (int it = 0; it < 150; ++it) {
        Expr f = random_warp(rng), g = random_warp(rng);
        int n = 2 + it % 6;
        int p = it % (n + 1);
        DegreePair d(n, p);
        Number lambda = Number::fraction(it % 7, 2);
        for (double x : {0.7, 1.3, 2.1}) {
            if (p < n) {
                double ref = liouville_potential(FormType::type1, f, g, d, lambda, x);
                CHECK(general_type1(f, g, d, lambda)(x) == doctest::Approx(ref).epsilon(1e-9));
            }
            if (p > 0) {
                double ref = liouville_potential(FormType::type2, f, g, d, lambda, x);
                CHECK(general_type2(f, g, d, lambda)(x) == doctest::Approx(ref).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("conjugation residual is small and converges at fourth order") {
    struct Case {
        FormType type;
        int a;
        Number b;
        int n, p;
        Number lambda;
    };
    const Case cases[] = {
        {FormType::type1, -1, -1, 3, 0, 1},
        {FormType::type2, -1, Number::fraction(1, 2), 4, 2, 2},
        {FormType::type1, -2, 1, 3, 1, 2},
        {FormType::type2, -2, -1, 5, 3, 6},
        {FormType::type1, -3, Number::fraction(-1, 2), 4, 1, 0},
        {FormType::type2, -3, 2, 3, 3, 1},
    };
    for (const auto& c : cases) {
        auto metric = WarpedMetric::exponential(c.a, c.b);
        DegreePair d(c.n, c.p);
        auto pre = pre_transform(c.type, metric, d, c.lambda);
        auto reduced = c.type == FormType::type1 ? general_type1(metric.f(), metric.g(), d, c.lambda)
                                                 : general_type2(metric.f(), metric.g(), d, c.lambda);
        auto bump = TestFunction::bump(2.0, 0.8);
        double fine = conjugation_check(pre, reduced, bump, 1.0, 3.0, 1e-3);
        CHECK(fine <= 1e-6);
        double r1 = conjugation_check(pre, reduced, bump, 1.0, 3.0, 0.04);
        double r2 = conjugation_check(pre, reduced, bump, 1.0, 3.0, 0.02);
        CHECK(std::log2(r1 / r2) >= 1.8);
        CHECK(pre.weight == pre.phi * pre.phi);
    }
}

TEST_CASE("conjugation check detects a wrong potential") {
    auto metric = WarpedMetric::exponential(-2, 1);
    DegreePair d(4, 1);
    auto pre = pre_transform(FormType::type2, metric, d, 2);
    auto reduced = general_type2(metric.f(), metric.g(), d, 2);
    double exact = conjugation_check(pre, reduced, TestFunction::bump(2.0, 0.8), 1.0, 3.0, 1e-3);
    reduced.potential = reduced.potential + Expr::exp(-2, Number::fraction(1, 100));
    CHECK(conjugation_check(pre, reduced, TestFunction::bump(2.0, 0.8), 1.0, 3.0, 1e-3) > 100.0 * exact);
    CHECK_THROWS_AS(conjugation_check(pre, reduced, TestFunction::bump(1.5, 0.8), 1.0, 3.0, 1e-3),
                    std::invalid_argument);
}

TEST_CASE("r coordinate") {
    auto m = WarpedMetric::exponential(-2, 1);
    CHECK(r_coordinate(m, 1.0) == doctest::Approx(std::exp(1.0)));
    CHECK(operator_coordinate(WarpedMetric::exponential(-1, 1), 1.5) == 1.5);
    CHECK_THROWS_AS(r_coordinate(WarpedMetric::exponential(-1, 1), 1.0), std::invalid_argument);
}

}
