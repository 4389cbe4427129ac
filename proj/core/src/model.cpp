#include "warpspec/model.hpp"

#include <string>

namespace warpspec {

namespace {

// Positive on (c, inf): a single term with a positive coefficient.
void require_positive_warp(const Expr& w, const char* name) {
    if (!w.is_single_term() || w.dominant().coeff.sign() <= 0)
        throw std::invalid_argument(std::string("warp ") + name + " must be a single term with positive coefficient");
}

const std::vector<Number> kNoForms{};

}  // namespace

DegreePair::DegreePair(int n_, int p_) : n(n_), p(p_) {
    if (n < 2) throw std::invalid_argument("dimension n must be at least 2");
    if (p < 0 || p > n) throw std::invalid_argument("degree p must lie in 0..n");
}

WarpedMetric WarpedMetric::exponential(const Number& a, const Number& b, const Number& c) {
    if (a > Number(-1))
        throw incomplete_metric("a = " + a.to_string() + " > -1 gives an incomplete end; need a <= -1");
    if (!(c > Number(0))) throw std::invalid_argument("left endpoint c must be positive");
    WarpedMetric m;
    m.family_ = WarpFamily::exponential;
    m.a_ = a;
    m.b_ = b;
    m.c_ = c;
    m.f_ = Expr::exp(Number(-2) * (a + 1));
    m.g_ = Expr::exp(Number(-2) * b);
    return m;
}

WarpedMetric WarpedMetric::general(const Expr& f, const Expr& g, const Number& c) {
    if (!(c > Number(0))) throw std::invalid_argument("left endpoint c must be positive");
    require_positive_warp(f, "f");
    require_positive_warp(g, "g");
    WarpedMetric m;
    m.family_ = WarpFamily::general;
    m.c_ = c;
    m.f_ = f;
    m.g_ = g;
    return m;
}

const Number& WarpedMetric::a() const {
    if (!is_exponential()) throw std::logic_error("a is defined only for the exponential family");
    return a_;
}

const Number& WarpedMetric::b() const {
    if (!is_exponential()) throw std::logic_error("b is defined only for the exponential family");
    return b_;
}

BoundaryData::BoundaryData(int n, std::vector<int> betti, std::map<int, std::vector<Number>> coclosed,
                           bool is_sphere)
    : n_(n), betti_(std::move(betti)), coclosed_(std::move(coclosed)), is_sphere_(is_sphere) {
    if (n_ < 2) throw std::invalid_argument("dimension n must be at least 2");
    if (static_cast<int>(betti_.size()) != n_)
        throw std::invalid_argument("expected " + std::to_string(n_) + " Betti numbers (degrees 0.." +
                                    std::to_string(n_ - 1) + ")");
    for (int b : betti_)
        if (b < 0) throw std::invalid_argument("Betti numbers must be non-negative");
    for (const auto& [q, list] : coclosed_) {
        if (q < 0 || q >= n_) throw std::invalid_argument("coclosed eigenvalue degree out of range");
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i].sign() < 0) throw std::invalid_argument("negative boundary eigenvalue");
            if (i > 0 && list[i] < list[i - 1]) throw std::invalid_argument("boundary eigenvalues must ascend");
        }
        bool has_zero = !list.empty() && list.front().is_zero();
        if (has_zero != (betti_[q] > 0))
            throw std::invalid_argument("degree " + std::to_string(q) +
                                        ": eigenvalue 0 must appear exactly when the Betti number is positive");
    }
    if (is_sphere_) {
        for (int q = 0; q < n_; ++q) {
            int expected = (q == 0 || q == n_ - 1) ? 1 : 0;
            if (betti_[q] != expected) throw std::invalid_argument("sphere Betti numbers are 1 in degrees 0 and n-1");
        }
    }
}

BoundaryData BoundaryData::sphere(int n, int modes) {
    if (n < 2) throw std::invalid_argument("dimension n must be at least 2");
    if (modes < 1) throw std::invalid_argument("need at least one mode per degree");
    const int m = n - 1;  // dimension of the sphere
    std::vector<int> betti(n, 0);
    betti[0] = 1;
    betti[m] = 1;
    std::map<int, std::vector<Number>> coclosed;
    for (int q = 0; q <= m; ++q) {
        std::vector<Number> list;
        if (q == m) {
            list.push_back(0);  // only the volume form
        } else {
            if (q == 0) list.push_back(0);
            // Coclosed q-forms: (k+q)(k+m-q-1), k >= 1.
            for (int k = 1; static_cast<int>(list.size()) < modes; ++k)
                list.push_back(Number(static_cast<std::int64_t>(k + q) * (k + m - q - 1)));
        }
        coclosed.emplace(q, std::move(list));
    }
    return BoundaryData(n, std::move(betti), std::move(coclosed), true);
}

int BoundaryData::betti_at(int q) const {
    if (q < 0 || q >= n_) return 0;
    return betti_[q];
}

const std::vector<Number>* BoundaryData::coclosed_at(int q) const {
    if (q < 0 || q >= n_) return &kNoForms;
    auto it = coclosed_.find(q);
    return it == coclosed_.end() ? nullptr : &it->second;
}

}  // namespace warpspec
