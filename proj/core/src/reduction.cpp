#include "warpspec/reduction.hpp"

#include <cmath>
#include <stdexcept>

namespace warpspec {

namespace {

const Number kHalf = Number::fraction(1, 2);

// Liouville-reduced potential for the family parametrised by m:
//   -7/16 f'^2/f^3 + 1/4 f''/f^2 - (m/8) f'g'/(f^2 g)
//   + m(m-4)/16 g'^2/(f g^2) + (m/4) g''/(f g) + lambda/g.
// Type1 uses m = n-2p-1 and type2 uses m = -(n-2p+1).
Expr reduced_bracket(const Expr& f, const Expr& g, const Number& m, const Number& lambda) {
    const Expr fp = f.derivative();
    const Expr fpp = fp.derivative();
    const Expr gp = g.derivative();
    const Expr gpp = gp.derivative();
    const Number q = m / 4;

    Expr v = Expr(Number::fraction(-7, 16)) * fp * fp / f.pow(3);
    v = v + Expr(Number::fraction(1, 4)) * fpp / f.pow(2);
    v = v - Expr(q / 2) * fp * gp / (f.pow(2) * g);
    v = v + Expr(q * (q - 1)) * gp * gp / (f * g.pow(2));
    v = v + Expr(q) * gpp / (f * g);
    v = v + Expr(lambda) / g;
    return v;
}

void require_lambda(const Number& lambda) {
    if (lambda.sign() < 0) throw std::invalid_argument("boundary eigenvalue must be non-negative");
}

Number m1(DegreePair d) { return Number(d.n - 2 * d.p - 1); }
Number m2(DegreePair d) { return Number(d.n - 2 * d.p + 1); }

// (m/2)^2 b^2 + lambda exp(2bt)
ScalarPotential critical_potential(const Number& m, const Number& b, const Number& lambda) {
    Number half_m = m / 2;
    return {Expr(half_m * half_m * b * b) + Expr::exp(Number(2) * b, lambda), Expr(1), Coordinate::t};
}

// K r^{-2} + lambda |a+1|^{-2b/(a+1)} r^{-2b/(a+1)}
ScalarPotential power_potential(const Number& k, const Number& a, const Number& b, const Number& lambda) {
    Number s = Number(-2) * b / (a + 1);
    Number scale = (a + 1).abs().pow(s);
    return {Expr::monomial(-2, k) + Expr::monomial(s, lambda * scale), Expr(1), Coordinate::r};
}

void require_type2_degree(DegreePair deg) {
    if (deg.p == 0) throw std::invalid_argument("type2 forms need p >= 1");
}

void require_type1_degree(DegreePair deg) {
    if (deg.p == deg.n) throw std::invalid_argument("type1 forms need p <= n-1");
}

}  // namespace

const char* to_string(FormType t) {
    switch (t) {
    case FormType::type1: return "I";
    case FormType::type2: return "II";
    case FormType::type3: return "III";
    }
    return "?";
}

std::string ScalarPotential::to_string() const {
    const char* var = coordinate == Coordinate::t ? "t" : "r";
    return std::string("V(") + var + ") = " + potential.to_string(var);
}

ScalarPotential general_type1(const Expr& f, const Expr& g, DegreePair deg, const Number& lambda) {
    require_lambda(lambda);
    return {reduced_bracket(f, g, m1(deg), lambda), f.pow(-1), Coordinate::t};
}

ScalarPotential general_type2(const Expr& f, const Expr& g, DegreePair deg, const Number& lambda) {
    require_lambda(lambda);
    return {reduced_bracket(f, g, -m2(deg), lambda), f.pow(-1), Coordinate::t};
}

Expr general_coupling(const Expr& f, const Expr& g, const Number& lambda) {
    require_lambda(lambda);
    return g.pow(Number::fraction(-3, 2)) * f.pow(-kHalf) * g.derivative() * Expr(lambda.sqrt());
}

KConstants k_constants(DegreePair deg, const Number& a, const Number& b) {
    if (!(a < Number(-1))) throw std::invalid_argument("r^{-2} coefficients need a < -1");
    Number beta = b / (a + 1).abs();
    Number h1 = m1(deg) / 2;
    Number h2 = m2(deg) / 2;
    return {h1 * h1 * beta * beta + h1 * beta, h2 * h2 * beta * beta - h2 * beta};
}

ScalarPotential build_type1(const WarpedMetric& metric, DegreePair deg, const Number& lambda) {
    require_lambda(lambda);
    require_type1_degree(deg);
    if (!metric.is_exponential()) return general_type1(metric.f(), metric.g(), deg, lambda);
    if (metric.is_critical()) return critical_potential(m1(deg), metric.b(), lambda);
    return power_potential(k_constants(deg, metric.a(), metric.b()).k1, metric.a(), metric.b(), lambda);
}

ScalarPotential build_type2(const WarpedMetric& metric, DegreePair deg, const Number& lambda) {
    require_lambda(lambda);
    require_type2_degree(deg);
    if (!metric.is_exponential()) return general_type2(metric.f(), metric.g(), deg, lambda);
    if (metric.is_critical()) return critical_potential(m2(deg), metric.b(), lambda);
    return power_potential(k_constants(deg, metric.a(), metric.b()).k2, metric.a(), metric.b(), lambda);
}

CoupledOperator build_type3(const WarpedMetric& metric, DegreePair deg, const Number& lambda) {
    if (!(lambda > Number(0))) throw std::invalid_argument("type3 needs a positive boundary eigenvalue");
    if (deg.p == 0 || deg.p == deg.n) throw std::invalid_argument("type3 forms need 1 <= p <= n-1");
    CoupledOperator op{build_type1(metric, deg, lambda), build_type2(metric, deg, lambda), Expr()};
    const Number root = lambda.sqrt();
    if (!metric.is_exponential()) {
        op.coupling = general_coupling(metric.f(), metric.g(), lambda);
    } else if (metric.is_critical()) {
        // -2b sqrt(lambda) exp(bt)
        op.coupling = Expr::exp(metric.b(), Number(-2) * metric.b() * root);
    } else {
        // (2b/(a+1)) sqrt(lambda) |a+1|^{-b/(a+1)} r^{-b/(a+1)-1}
        const Number& a = metric.a();
        const Number& b = metric.b();
        Number e = -b / (a + 1);
        op.coupling = Expr::monomial(e - 1, Number(2) * b / (a + 1) * root * (a + 1).abs().pow(e));
    }
    return op;
}

double r_coordinate(const WarpedMetric& metric, double t) {
    if (!metric.is_exponential() || metric.is_critical())
        throw std::invalid_argument("the r coordinate needs an exponential end with a < -1");
    double k = -(metric.a().value() + 1.0);
    return std::exp(k * t) / k;
}

double operator_coordinate(const WarpedMetric& metric, double t) {
    if (metric.is_exponential() && !metric.is_critical()) return r_coordinate(metric, t);
    return t;
}

PreTransformOperator pre_transform(FormType type, const WarpedMetric& metric, DegreePair deg,
                                   const Number& lambda) {
    require_lambda(lambda);
    const Expr& f = metric.f();
    const Expr& g = metric.g();
    const Expr f_half_inv = f.pow(-kHalf);
    const int n = deg.n;
    const int p = deg.p;
    PreTransformOperator op{type, deg, lambda, f, g, Expr(), Expr(), Expr(), Expr()};
    switch (type) {
    case FormType::type1:
        require_type1_degree(deg);
        op.outer = f_half_inv * g.pow(Number::fraction(-n + 1 + 2 * p, 2));
        op.inner = f_half_inv * g.pow(Number::fraction(n - 1 - 2 * p, 2));
        op.phi = f.pow(Number::fraction(1, 4)) * g.pow(Number::fraction(n - 2 * p - 1, 4));
        op.weight = f.pow(kHalf) * g.pow(Number::fraction(n - 2 * p - 1, 2));
        break;
    case FormType::type2:
        require_type2_degree(deg);
        op.outer = f_half_inv * g.pow(Number::fraction(-n - 1 + 2 * p, 2));
        op.inner = f_half_inv * g.pow(Number::fraction(n + 1 - 2 * p, 2));
        op.phi = f.pow(Number::fraction(-1, 4)) * g.pow(Number::fraction(n - 2 * p + 1, 4));
        op.weight = f_half_inv * g.pow(Number::fraction(n - 2 * p + 1, 2));
        break;
    case FormType::type3:
        throw std::invalid_argument("the coupled operator has no scalar pre-transform form");
    }
    return op;
}

namespace {

// Fourth-order central first derivative; zero within two nodes of the ends.
std::vector<double> d1(const std::vector<double>& u, double step) {
    std::vector<double> out(u.size(), 0.0);
    for (std::size_t i = 2; i + 2 < u.size(); ++i)
        out[i] = (-u[i + 2] + 8.0 * u[i + 1] - 8.0 * u[i - 1] + u[i - 2]) / (12.0 * step);
    return out;
}

std::vector<double> sample(const Expr& e, double left, double step, std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = e(left + static_cast<double>(i) * step);
    return out;
}

}  // namespace

std::vector<double> PreTransformOperator::apply(const std::vector<double>& h, double left, double step) const {
    const std::size_t count = h.size();
    const auto outer_s = sample(outer, left, step, count);
    const auto inner_s = sample(inner, left, step, count);
    const auto g_s = sample(g, left, step, count);
    const double lam = lambda.value();

    std::vector<double> result(count, 0.0);
    std::vector<double> flux(count);
    if (type == FormType::type1) {
        auto dh = d1(h, step);
        for (std::size_t i = 0; i < count; ++i) flux[i] = inner_s[i] * dh[i];
        auto dflux = d1(flux, step);
        for (std::size_t i = 4; i + 4 < count; ++i) result[i] = lam / g_s[i] * h[i] - outer_s[i] * dflux[i];
    } else {
        std::vector<double> ih(count);
        for (std::size_t i = 0; i < count; ++i) ih[i] = inner_s[i] * h[i];
        auto dih = d1(ih, step);
        for (std::size_t i = 0; i < count; ++i) flux[i] = outer_s[i] * dih[i];
        auto dflux = d1(flux, step);
        for (std::size_t i = 4; i + 4 < count; ++i) result[i] = lam / g_s[i] * h[i] - dflux[i];
    }
    return result;
}

TestFunction TestFunction::bump(double center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("bump radius must be positive");
    auto value = [center, radius](double x) {
        double s = (x - center) / radius;
        if (std::fabs(s) >= 1.0) return 0.0;
        return std::exp(-1.0 / (1.0 - s * s));
    };
    return {value, center - radius, center + radius};
}

double conjugation_check(const PreTransformOperator& pre, const ScalarPotential& reduced, const TestFunction& h,
                         double left, double right, double step) {
    if (!(step > 0.0) || !(right > left)) throw std::invalid_argument("invalid conjugation grid");
    if (h.left <= left + 4.0 * step || h.right >= right - 4.0 * step)
        throw std::invalid_argument("test function support touches the grid boundary");
    const auto count = static_cast<std::size_t>(std::floor((right - left) / step)) + 1;

    std::vector<double> hv(count), w(count);
    const auto phi = sample(pre.phi, left, step, count);
    for (std::size_t i = 0; i < count; ++i) {
        hv[i] = h.value(left + static_cast<double>(i) * step);
        w[i] = phi[i] * hv[i];
    }
    const auto lhs = pre.apply(hv, left, step);

    // Reduced side: -(P w')' + V w.
    const auto weight = sample(reduced.principal_weight, left, step, count);
    const auto pot = sample(reduced.potential, left, step, count);
    auto dw = d1(w, step);
    std::vector<double> flux(count);
    for (std::size_t i = 0; i < count; ++i) flux[i] = weight[i] * dw[i];
    auto dflux = d1(flux, step);

    double worst = 0.0;
    for (std::size_t i = 4; i + 4 < count; ++i) {
        double rhs = -dflux[i] + pot[i] * w[i];
        worst = std::max(worst, std::fabs(phi[i] * lhs[i] - rhs));
    }
    return worst;
}

}  // namespace warpspec
