#include "warpspec/number.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace warpspec {

std::optional<Rational> make_reduced(std::int64_t num, std::int64_t den);

namespace {

__extension__ typedef __int128 i128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::optional<Rational> make_checked(i128 num, i128 den) {
    if (den == 0) return std::nullopt;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    if (num > kMax || num < -kMax || den > kMax) return std::nullopt;
    return make_reduced(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

// Checked integer power; nullopt on overflow.
std::optional<std::int64_t> ipow(std::int64_t base, std::uint64_t e) {
    i128 result = 1;
    i128 b = base;
    while (e > 0) {
        if (e & 1U) {
            result *= b;
            if (result > kMax || result < -kMax) return std::nullopt;
        }
        e >>= 1U;
        if (e > 0) {
            b *= b;
            if (b > kMax || b < -kMax) return std::nullopt;
        }
    }
    return static_cast<std::int64_t>(result);
}

// Exact q-th root of a non-negative integer, if it exists.
std::optional<std::int64_t> iroot(std::int64_t v, std::int64_t q) {
    if (v < 0) return std::nullopt;
    if (v == 0 || v == 1) return v;
    auto guess = static_cast<std::int64_t>(
        std::llround(std::pow(static_cast<double>(v), 1.0 / static_cast<double>(q))));
    for (std::int64_t r = std::max<std::int64_t>(guess - 1, 0); r <= guess + 1; ++r) {
        auto p = ipow(r, static_cast<std::uint64_t>(q));
        if (p && *p == v) return r;
    }
    return std::nullopt;
}

std::optional<Rational> rational_pow_int(const Rational& r, std::int64_t k) {
    if (k == 0) return Rational(1);
    if (r.num() == 0) {
        if (k < 0) throw std::domain_error("zero raised to a negative power");
        return Rational(0);
    }
    std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
    auto n = ipow(r.num(), e);
    auto d = ipow(r.den(), e);
    if (!n || !d) return std::nullopt;
    return k > 0 ? make_checked(*n, *d) : make_checked(*d, *n);
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::optional<Rational> make_reduced(std::int64_t num, std::int64_t den) {
    return Rational(num, den, Rational::Reduced{});
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    auto r = make_checked(num, den);
    if (!r) throw std::overflow_error("rational out of range");
    num_ = r->num_;
    den_ = r->den_;
}

std::optional<Rational> Rational::add(const Rational& x, const Rational& y) {
    return make_checked(static_cast<i128>(x.num_) * y.den_ + static_cast<i128>(y.num_) * x.den_,
                        static_cast<i128>(x.den_) * y.den_);
}

std::optional<Rational> Rational::sub(const Rational& x, const Rational& y) {
    return make_checked(static_cast<i128>(x.num_) * y.den_ - static_cast<i128>(y.num_) * x.den_,
                        static_cast<i128>(x.den_) * y.den_);
}

std::optional<Rational> Rational::mul(const Rational& x, const Rational& y) {
    return make_checked(static_cast<i128>(x.num_) * y.num_, static_cast<i128>(x.den_) * y.den_);
}

std::optional<Rational> Rational::div(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("division by zero");
    return make_checked(static_cast<i128>(x.num_) * y.den_, static_cast<i128>(x.den_) * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    i128 lhs = static_cast<i128>(x.num_) * y.den_;
    i128 rhs = static_cast<i128>(y.num_) * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Number::Number(std::int64_t v) : exact_(Rational(v)), value_(static_cast<double>(v)) {}

Number::Number(const Rational& r) : exact_(r), value_(r.to_double()) {}

Number Number::real(double v) {
    Number n;
    n.exact_.reset();
    n.value_ = v;
    return n;
}

Number Number::fraction(std::int64_t num, std::int64_t den) { return Number(Rational(num, den)); }

Number Number::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Number num = parse(text.substr(0, slash));
        Number den = parse(text.substr(slash + 1));
        if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return num / den;
    }

    // Decimal literal: [sign] digits [. digits] [e|E [sign] digits]
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    std::int64_t scale = 0;
    bool seen_digit = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i++];
        seen_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits += text[i++];
            --scale;
            seen_digit = true;
        }
    }
    if (!seen_digit) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        if (i >= text.size()) throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
        int exp = 0;
        auto res = std::from_chars(text.data() + i + (text[i] == '+' ? 1 : 0), text.data() + text.size(), exp);
        if (res.ec != std::errc() || res.ptr != text.data() + text.size())
            throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
        scale += exp;
        i = text.size();
    }
    if (i != text.size()) throw std::invalid_argument("malformed number '" + std::string(text) + "'");

    double approx = 0.0;
    {
        std::string s(text);
        auto res = std::from_chars(s.data(), s.data() + s.size(), approx);
        if (res.ec == std::errc::result_out_of_range) throw std::invalid_argument("number out of range");
        if (s[0] == '+') approx = std::stod(s.substr(1));
    }

    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    if (digits.empty()) return Number(0);
    if (digits.size() > 18 || scale > 18 || scale < -18) return real(approx);
    std::int64_t mantissa = std::stoll(digits);
    if (negative) mantissa = -mantissa;
    auto p10 = ipow(10, static_cast<std::uint64_t>(scale < 0 ? -scale : scale));
    if (!p10) return real(approx);
    auto r = scale >= 0 ? make_checked(static_cast<i128>(mantissa) * *p10, 1) : make_checked(mantissa, *p10);
    if (!r) return real(approx);
    return Number(*r);
}

bool Number::is_zero() const { return exact_ ? exact_->num() == 0 : value_ == 0.0; }

bool Number::is_integer() const {
    return exact_ ? exact_->is_integer() : (std::isfinite(value_) && value_ == std::floor(value_));
}

int Number::sign() const {
    if (exact_) return (exact_->num() > 0) - (exact_->num() < 0);
    return (value_ > 0) - (value_ < 0);
}

Number Number::operator-() const {
    if (exact_) return Number(Rational(-exact_->num(), exact_->den()));
    return real(-value_);
}

Number operator+(const Number& x, const Number& y) {
    if (x.exact_ && y.exact_)
        if (auto r = Rational::add(*x.exact_, *y.exact_)) return Number(*r);
    return Number::real(x.value_ + y.value_);
}

Number operator-(const Number& x, const Number& y) {
    if (x.exact_ && y.exact_)
        if (auto r = Rational::sub(*x.exact_, *y.exact_)) return Number(*r);
    return Number::real(x.value_ - y.value_);
}

Number operator*(const Number& x, const Number& y) {
    if (x.exact_ && y.exact_)
        if (auto r = Rational::mul(*x.exact_, *y.exact_)) return Number(*r);
    if (x.is_zero() || y.is_zero()) return Number(0);
    return Number::real(x.value_ * y.value_);
}

Number operator/(const Number& x, const Number& y) {
    if (y.is_zero()) throw std::domain_error("division by zero");
    if (x.exact_ && y.exact_)
        if (auto r = Rational::div(*x.exact_, *y.exact_)) return Number(*r);
    return Number::real(x.value_ / y.value_);
}

Number Number::abs() const { return sign() < 0 ? -*this : *this; }

Number Number::pow(const Number& exponent) const {
    if (exponent.is_zero()) return Number(1);
    if (is_zero()) {
        if (exponent.sign() < 0) throw std::domain_error("zero raised to a negative power");
        return Number(0);
    }
    if (exact_ && exponent.exact_) {
        const Rational& e = *exponent.exact_;
        if (e.is_integer()) {
            if (auto r = rational_pow_int(*exact_, e.num())) return Number(*r);
            return real(std::pow(value_, exponent.value_));
        }
        if (exact_->num() < 0) throw std::domain_error("negative base with non-integer exponent");
        auto rn = iroot(exact_->num(), e.den());
        auto rd = iroot(exact_->den(), e.den());
        if (rn && rd) {
            if (auto r = rational_pow_int(Rational(*rn, *rd), e.num())) return Number(*r);
        }
        return real(std::pow(value_, exponent.value_));
    }
    if (value_ < 0 && !exponent.is_integer())
        throw std::domain_error("negative base with non-integer exponent");
    return real(std::pow(value_, exponent.value_));
}

bool operator==(const Number& x, const Number& y) {
    if (x.exact_ && y.exact_) return *x.exact_ == *y.exact_;
    double scale = std::max({1.0, std::fabs(x.value_), std::fabs(y.value_)});
    return std::fabs(x.value_ - y.value_) <= Number::kTolerance * scale;
}

std::partial_ordering operator<=>(const Number& x, const Number& y) {
    if (x.exact_ && y.exact_) return *x.exact_ <=> *y.exact_;
    if (x == y) return std::partial_ordering::equivalent;
    return x.value_ <=> y.value_;
}

std::string Number::to_string() const {
    if (exact_) return exact_->to_string();
    return format_double(value_);
}

}  // namespace warpspec
