#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "warpspec/number.hpp"
#include "warpspec/symbolic.hpp"

namespace warpspec {

/// Raised when the warping exponents describe an incomplete end (a > -1).
class incomplete_metric : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Manifold dimension n >= 2 and form degree 0 <= p <= n.
struct DegreePair {
    int n;
    int p;

    DegreePair(int n_, int p_);
    /// The degree paired with p by the Hodge star.
    DegreePair dual() const { return DegreePair(n, n - p); }
};

enum class WarpFamily { exponential, general };

/// End (c, inf) x N with metric f(t) dt^2 + g(t) g_N.
///
/// The exponential family uses f = exp(-2(a+1)t), g = exp(-2bt) and requires a <= -1.
/// The general family carries arbitrary positive single-term warps f and g.
class WarpedMetric {
public:
    static WarpedMetric exponential(const Number& a, const Number& b, const Number& c = 1);
    static WarpedMetric general(const Expr& f, const Expr& g, const Number& c = 1);

    WarpFamily family() const { return family_; }
    bool is_exponential() const { return family_ == WarpFamily::exponential; }
    /// Exponential-family parameters; throw std::logic_error for the general family.
    const Number& a() const;
    const Number& b() const;
    const Number& c() const { return c_; }
    const Expr& f() const { return f_; }
    const Expr& g() const { return g_; }
    /// a == -1, where the end is parametrised by arclength.
    bool is_critical() const { return is_exponential() && a_ == Number(-1); }

private:
    WarpedMetric() = default;
    WarpFamily family_ = WarpFamily::exponential;
    Number a_;
    Number b_;
    Number c_;
    Expr f_;
    Expr g_;
};

/// Spectral data of the closed cross-section N, of dimension n - 1.
///
/// Betti numbers are indexed by degree 0..n-1. Coclosed eigenvalue lists are optional
/// per degree; when present they are ascending, non-negative, and contain 0 exactly
/// when the Betti number of that degree is positive.
class BoundaryData {
public:
    BoundaryData(int n, std::vector<int> betti, std::map<int, std::vector<Number>> coclosed = {},
                 bool is_sphere = false);

    /// Round sphere S^{n-1}, with the first `modes` coclosed eigenvalues in every degree.
    static BoundaryData sphere(int n, int modes = 6);

    int n() const { return n_; }
    bool is_sphere() const { return is_sphere_; }
    const std::vector<int>& betti() const { return betti_; }
    /// Betti number in degree q, or 0 outside 0..n-1.
    int betti_at(int q) const;
    /// Coclosed eigenvalue list in degree q; nullptr when not supplied.
    /// Degrees outside 0..n-1 have no forms and return an empty list.
    const std::vector<Number>* coclosed_at(int q) const;
    const std::map<int, std::vector<Number>>& coclosed() const { return coclosed_; }

private:
    int n_;
    std::vector<int> betti_;
    std::map<int, std::vector<Number>> coclosed_;
    bool is_sphere_;
};

}  // namespace warpspec
