#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace warpspec {

/// Exact rational with 64-bit numerator and denominator.
/// Always stored in lowest terms with a positive denominator.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_integer() const { return den_ == 1; }

    /// Checked arithmetic; nullopt when the result does not fit in 64 bits.
    static std::optional<Rational> add(const Rational& x, const Rational& y);
    static std::optional<Rational> sub(const Rational& x, const Rational& y);
    static std::optional<Rational> mul(const Rational& x, const Rational& y);
    static std::optional<Rational> div(const Rational& x, const Rational& y);

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

    std::string to_string() const;

private:
    struct Reduced {};
    constexpr Rational(std::int64_t num, std::int64_t den, Reduced) : num_(num), den_(den) {}
    friend std::optional<Rational> make_reduced(std::int64_t num, std::int64_t den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Real number that stays an exact rational while the operations permit,
/// and falls back to a double otherwise (overflow, irrational roots, inexact input).
class Number {
public:
    /// Relative tolerance used when at least one operand is inexact.
    static constexpr double kTolerance = 1e-12;

    Number() : Number(std::int64_t{0}) {}
    Number(int v) : Number(static_cast<std::int64_t>(v)) {}
    Number(std::int64_t v);
    Number(const Rational& r);

    /// Inexact value.
    static Number real(double v);
    static Number fraction(std::int64_t num, std::int64_t den);

    /// Parses integers, "p/q" fractions and decimal literals; decimals are kept exact
    /// when they fit. Throws std::invalid_argument on malformed input.
    static Number parse(std::string_view text);

    bool is_exact() const { return exact_.has_value(); }
    const std::optional<Rational>& rational() const { return exact_; }
    double value() const { return value_; }

    bool is_zero() const;
    bool is_integer() const;
    int sign() const;

    Number operator-() const;
    friend Number operator+(const Number& x, const Number& y);
    friend Number operator-(const Number& x, const Number& y);
    friend Number operator*(const Number& x, const Number& y);
    friend Number operator/(const Number& x, const Number& y);
    Number& operator+=(const Number& y) { return *this = *this + y; }
    Number& operator-=(const Number& y) { return *this = *this - y; }
    Number& operator*=(const Number& y) { return *this = *this * y; }
    Number& operator/=(const Number& y) { return *this = *this / y; }

    Number abs() const;
    /// Real power. Exact when the base is exact and the result is rational.
    /// Throws std::domain_error for negative bases with non-integer exponents
    /// and for zero raised to a negative power.
    Number pow(const Number& exponent) const;
    Number sqrt() const { return pow(fraction(1, 2)); }

    /// Exact comparison between exact operands; tolerance-based otherwise.
    friend bool operator==(const Number& x, const Number& y);
    friend std::partial_ordering operator<=>(const Number& x, const Number& y);

    /// "p/q" for exact values, shortest round-trip decimal otherwise.
    std::string to_string() const;

private:
    std::optional<Rational> exact_;
    double value_ = 0.0;
};

inline Number min(const Number& x, const Number& y) { return (y < x) ? y : x; }
inline Number max(const Number& x, const Number& y) { return (x < y) ? y : x; }

}  // namespace warpspec
