#pragma once

#include <optional>
#include <string>
#include <vector>

#include "warpspec/number.hpp"

namespace warpspec {

enum class ZeroStatus { included, excluded, unknown };

const char* to_string(ZeroStatus z);

/// Essential spectrum of the form Laplacian: finitely many isolated points below at most
/// one half-line [start, inf), together with what is known about the value 0.
///
/// Kept in normal form: points are sorted, distinct and strictly below the ray start;
/// zero is `included` whenever the set itself contains 0, and an included zero always
/// appears in the set. The empty set with zero excluded is the identity for union.
class SpectrumDescription {
public:
    SpectrumDescription() = default;

    static SpectrumDescription empty(ZeroStatus zero = ZeroStatus::excluded);
    /// [start, inf).
    static SpectrumDescription ray(const Number& start, ZeroStatus zero = ZeroStatus::excluded);
    static SpectrumDescription make(std::optional<Number> ray_start, std::vector<Number> points, ZeroStatus zero);

    const std::optional<Number>& ray_start() const { return ray_; }
    const std::vector<Number>& points() const { return points_; }
    ZeroStatus zero() const { return zero_; }
    bool is_empty() const { return !ray_ && points_.empty(); }
    /// Infimum of the set; nullopt when empty.
    std::optional<Number> bottom() const;
    bool contains(const Number& mu) const;

    /// Set union. Zero status joins as included > unknown > excluded.
    friend SpectrumDescription operator|(const SpectrumDescription& x, const SpectrumDescription& y);
    friend bool operator==(const SpectrumDescription& x, const SpectrumDescription& y);
    /// Equality of the sets with 0 removed, ignoring the zero status.
    bool same_away_from_zero(const SpectrumDescription& other) const;

    /// e.g. "{0} ∪ [1/4, inf), zero included" or "empty (zero unknown)".
    std::string to_string() const;

private:
    void normalize();
    std::optional<Number> ray_;
    std::vector<Number> points_;
    ZeroStatus zero_ = ZeroStatus::excluded;
};

}  // namespace warpspec
