#include "warpspec/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace warpspec {

namespace {

bool same_shape(const Term& x, const Term& y) { return x.power == y.power && x.rate == y.rate; }

bool growth_less(const Term& x, const Term& y) {
    if (!(x.rate == y.rate)) return x.rate < y.rate;
    if (!(x.power == y.power)) return x.power < y.power;
    return false;
}

std::string format_exponent(const Number& q) {
    std::string s = q.to_string();
    if (s.find('/') != std::string::npos) return "(" + s + ")";
    return s;
}

std::string format_term(const Term& t, const Number& coeff, std::string_view var) {
    std::string out = coeff.to_string();
    if (!t.power.is_zero()) {
        out += "·";
        out += var;
        if (!(t.power == Number(1))) out += "^" + format_exponent(t.power);
    }
    if (!t.rate.is_zero()) {
        out += "·exp(";
        if (t.rate == Number(-1))
            out += "-";
        else if (!(t.rate == Number(1)))
            out += format_exponent(t.rate);
        out += var;
        out += ")";
    }
    return out;
}

}  // namespace

Expr::Expr(const Number& constant) {
    if (!constant.is_zero()) terms_.push_back({constant, 0, 0});
}

Expr Expr::term(const Number& coeff, const Number& power, const Number& rate) {
    Expr e;
    if (!coeff.is_zero()) e.terms_.push_back({coeff, power, rate});
    return e;
}

void Expr::normalize() {
    std::stable_sort(terms_.begin(), terms_.end(), growth_less);
    std::vector<Term> merged;
    for (const auto& t : terms_) {
        if (!merged.empty() && same_shape(merged.back(), t))
            merged.back().coeff += t.coeff;
        else
            merged.push_back(t);
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(merged);
}

bool Expr::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].power.is_zero() && terms_[0].rate.is_zero());
}

Number Expr::constant_term() const {
    for (const auto& t : terms_)
        if (t.power.is_zero() && t.rate.is_zero()) return t.coeff;
    return Number(0);
}

Expr Expr::derivative() const {
    // d/dx c x^q e^{rx} = c q x^{q-1} e^{rx} + c r x^q e^{rx}
    Expr out;
    for (const auto& t : terms_) {
        if (!t.power.is_zero()) out.terms_.push_back({t.coeff * t.power, t.power - 1, t.rate});
        if (!t.rate.is_zero()) out.terms_.push_back({t.coeff * t.rate, t.power, t.rate});
    }
    out.normalize();
    return out;
}

Expr Expr::pow(const Number& exponent) const {
    if (exponent.is_zero()) return Expr(1);
    if (terms_.size() != 1) throw std::domain_error("power of a non-monomial expression");
    const Term& t = terms_[0];
    return term(t.coeff.pow(exponent), t.power * exponent, t.rate * exponent);
}

double Expr::operator()(double x) const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        double v = t.coeff.value();
        if (!t.power.is_zero()) v *= std::pow(x, t.power.value());
        if (!t.rate.is_zero()) v *= std::exp(t.rate.value() * x);
        sum += v;
    }
    return sum;
}

Expr operator+(const Expr& x, const Expr& y) {
    Expr out = x;
    out.terms_.insert(out.terms_.end(), y.terms_.begin(), y.terms_.end());
    out.normalize();
    return out;
}

Expr Expr::operator-() const {
    Expr out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Expr operator-(const Expr& x, const Expr& y) { return x + (-y); }

Expr operator*(const Expr& x, const Expr& y) {
    Expr out;
    for (const auto& a : x.terms_)
        for (const auto& b : y.terms_) out.terms_.push_back({a.coeff * b.coeff, a.power + b.power, a.rate + b.rate});
    out.normalize();
    return out;
}

Expr operator/(const Expr& x, const Expr& y) {
    if (y.terms_.size() != 1) throw std::domain_error("division by a non-monomial expression");
    const Term& d = y.terms_[0];
    Expr out;
    for (const auto& a : x.terms_) out.terms_.push_back({a.coeff / d.coeff, a.power - d.power, a.rate - d.rate});
    out.normalize();
    return out;
}

bool operator==(const Expr& x, const Expr& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    for (std::size_t i = 0; i < x.terms_.size(); ++i) {
        const Term& a = x.terms_[i];
        const Term& b = y.terms_[i];
        if (!(a.coeff == b.coeff && same_shape(a, b))) return false;
    }
    return true;
}

const Term& Expr::dominant() const {
    if (terms_.empty()) throw std::domain_error("zero expression has no leading term");
    return terms_.back();
}

Expr::Growth Expr::growth() const {
    if (terms_.empty()) return Growth::decays;
    const Term& t = dominant();
    int rs = t.rate.sign();
    if (rs > 0) return Growth::grows;
    if (rs < 0) return Growth::decays;
    int ps = t.power.sign();
    if (ps > 0) return Growth::grows;
    if (ps < 0) return Growth::decays;
    return Growth::bounded;
}

double Expr::shortest_decay_length() const {
    double best = 0.0;
    for (const auto& t : terms_) {
        if (t.rate.is_zero()) continue;
        double len = 1.0 / std::fabs(t.rate.value());
        if (best == 0.0 || len < best) best = len;
    }
    return best;
}

std::string Expr::to_string(std::string_view var) const {
    if (terms_.empty()) return "0";
    // Constant first, then the remaining terms from slowest to fastest growth.
    std::vector<const Term*> order;
    for (const auto& t : terms_)
        if (t.power.is_zero() && t.rate.is_zero()) order.push_back(&t);
    for (const auto& t : terms_)
        if (!(t.power.is_zero() && t.rate.is_zero())) order.push_back(&t);

    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Term& t = *order[i];
        if (i == 0) {
            out += format_term(t, t.coeff, var);
        } else if (t.coeff.sign() < 0) {
            out += " - " + format_term(t, -t.coeff, var);
        } else {
            out += " + " + format_term(t, t.coeff, var);
        }
    }
    return out;
}

}  // namespace warpspec
