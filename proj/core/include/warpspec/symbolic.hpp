#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "warpspec/number.hpp"

namespace warpspec {

/// One term coeff * x^power * exp(rate * x).
struct Term {
    Number coeff;
    Number power;
    Number rate;
};

/// Finite sum of terms coeff * x^q * exp(rho * x) in a single variable x > 0.
///
/// Closed under sums, products, differentiation and division by a single term,
/// which is everything the reduced potentials need. Terms are kept merged and
/// sorted by growth at +infinity (rate first, then power).
class Expr {
public:
    Expr() = default;
    Expr(const Number& constant);
    Expr(int constant) : Expr(Number(constant)) {}

    static Expr term(const Number& coeff, const Number& power, const Number& rate);
    static Expr exp(const Number& rate, const Number& coeff = 1) { return term(coeff, 0, rate); }
    static Expr monomial(const Number& power, const Number& coeff = 1) { return term(coeff, power, 0); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_single_term() const { return terms_.size() == 1; }
    bool is_constant() const;
    /// Coefficient of the x^0 exp(0) term.
    Number constant_term() const;

    Expr derivative() const;
    /// Rational or real power of a single term. Throws std::domain_error otherwise,
    /// or when a negative coefficient would need a non-integer power.
    Expr pow(const Number& exponent) const;

    double operator()(double x) const;

    friend Expr operator+(const Expr& x, const Expr& y);
    friend Expr operator-(const Expr& x, const Expr& y);
    friend Expr operator*(const Expr& x, const Expr& y);
    /// Division by a single-term expression.
    friend Expr operator/(const Expr& x, const Expr& y);
    Expr operator-() const;
    friend bool operator==(const Expr& x, const Expr& y);

    enum class Growth { decays, bounded, grows };
    /// Behaviour of the leading term at +infinity; a zero expression decays.
    Growth growth() const;
    /// Leading term at +infinity. Throws std::domain_error for the zero expression.
    const Term& dominant() const;
    /// Smallest positive 1/|rate| over the exponential terms, or 0 when there are none.
    double shortest_decay_length() const;

    std::string to_string(std::string_view var = "x") const;

private:
    void normalize();
    std::vector<Term> terms_;
};

}  // namespace warpspec
