#pragma once

#include <functional>
#include <string>

#include "warpspec/model.hpp"
#include "warpspec/number.hpp"
#include "warpspec/symbolic.hpp"

namespace warpspec {

/// The three pieces of the form Laplacian after separating boundary eigenforms:
/// type1 from coclosed p-forms on N, type2 from closed (p-1)-forms wedged with dt,
/// type3 the coupled pair built from a coclosed (p-1)-form with nonzero eigenvalue.
enum class FormType { type1, type2, type3 };

const char* to_string(FormType t);

enum class Coordinate { t, r };

/// Sturm-Liouville operator -(P w')' + V w on a half-line, P the principal weight.
struct ScalarPotential {
    Expr potential;
    Expr principal_weight = Expr(1);
    Coordinate coordinate = Coordinate::t;

    double operator()(double x) const { return potential(x); }
    /// "V(t) = 1 + 1·exp(-2t)"
    std::string to_string() const;
};

/// -w'' + [[V1, W], [W, V2]] w, both channels sharing the coordinate.
struct CoupledOperator {
    ScalarPotential v1;
    ScalarPotential v2;
    Expr coupling;
};

/// Reduced potentials for arbitrary single-term warps f, g in the t variable.
ScalarPotential general_type1(const Expr& f, const Expr& g, DegreePair deg, const Number& lambda);
ScalarPotential general_type2(const Expr& f, const Expr& g, DegreePair deg, const Number& lambda);
/// Off-diagonal entry g^{-3/2} f^{-1/2} g' sqrt(lambda) of the coupled operator.
Expr general_coupling(const Expr& f, const Expr& g, const Number& lambda);

/// Reduced operators for a metric and a boundary eigenvalue lambda >= 0.
/// Exponential ends with a = -1 use t; a < -1 uses r = exp(-(a+1)t)/|a+1|,
/// where the principal weight becomes 1. General warps use t.
ScalarPotential build_type1(const WarpedMetric& metric, DegreePair deg, const Number& lambda);
ScalarPotential build_type2(const WarpedMetric& metric, DegreePair deg, const Number& lambda);
/// Requires lambda > 0.
CoupledOperator build_type3(const WarpedMetric& metric, DegreePair deg, const Number& lambda);

/// Coordinate in which the operators of `metric` are expressed, evaluated at t.
double operator_coordinate(const WarpedMetric& metric, double t);
/// r = exp(-(a+1)t)/|a+1|; requires a < -1.
double r_coordinate(const WarpedMetric& metric, double t);

/// Coefficients of r^{-2} in the a < -1 reduced potentials.
struct KConstants {
    Number k1;
    Number k2;
};
KConstants k_constants(DegreePair deg, const Number& a, const Number& b);

/// Untransformed type1 or type2 operator acting on coefficient functions h(t), with the
/// multiplier w = phi h that carries it to the reduced form.
struct PreTransformOperator {
    FormType type;
    DegreePair deg;
    Number lambda;
    Expr f;
    Expr g;
    Expr outer;  ///< type1: factor before the outer derivative; type2: inside it
    Expr inner;
    Expr phi;
    Expr weight;  ///< L2 density, equal to phi^2

    /// Applies the operator to nodal samples by nested central differences.
    /// Entries within four nodes of either end are left at zero.
    std::vector<double> apply(const std::vector<double>& h, double left, double step) const;
};

PreTransformOperator pre_transform(FormType type, const WarpedMetric& metric, DegreePair deg, const Number& lambda);

/// Smooth test function supported in [left, right].
struct TestFunction {
    std::function<double(double)> value;
    double left;
    double right;

    static TestFunction bump(double center, double radius);
};

/// max |phi * (pre h) - reduced (phi h)| over interior nodes of [left, right] spaced by step,
/// using fourth-order central differences. Throws if the test function reaches the grid ends.
double conjugation_check(const PreTransformOperator& pre, const ScalarPotential& reduced, const TestFunction& h,
                         double left, double right, double step);

}  // namespace warpspec
