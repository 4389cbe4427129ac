#include "warpspec/classifier.hpp"

#include <stdexcept>

namespace warpspec {

namespace {

using SD = SpectrumDescription;

const Number kZero(0);

void require_exponential(const WarpedMetric& metric) {
    if (!metric.is_exponential()) throw std::invalid_argument("classification needs an exponential end");
}

void require_matching(DegreePair deg, const BoundaryData& boundary) {
    if (boundary.n() != deg.n) throw std::invalid_argument("boundary data dimension does not match n");
}

// Ray whose start alone settles the zero question: excluded unless it starts at 0.
SD exact_ray(const Number& start) { return SD::ray(start, ZeroStatus::excluded); }

std::optional<Number> min_of(const std::vector<Number>& values, bool skip_zero) {
    std::optional<Number> best;
    for (const auto& v : values) {
        if (skip_zero && v.is_zero()) continue;
        if (!best || v < *best) best = v;
    }
    return best;
}

const std::vector<Number>& require_list(const BoundaryData& boundary, int q) {
    const auto* list = boundary.coclosed_at(q);
    if (!list) throw std::invalid_argument("b = 0 needs coclosed eigenvalues in degree " + std::to_string(q));
    return *list;
}

// Eigenvalues of closed (p-1)-forms: harmonic ones plus the exact part, which mirrors
// the nonzero coclosed spectrum one degree lower.
std::vector<Number> closed_eigenvalues(DegreePair deg, const BoundaryData& boundary) {
    std::vector<Number> out;
    if (boundary.betti_at(deg.p - 1) > 0) out.push_back(kZero);
    for (const auto& v : require_list(boundary, deg.p - 2))
        if (!v.is_zero()) out.push_back(v);
    return out;
}

SD ray_or_empty(const std::optional<Number>& start) { return start ? exact_ray(*start) : SD::empty(); }

std::string betti_tag(const char* label, int value) { return std::string(label) + (value > 0 ? ">0" : "=0"); }

}  // namespace

const char* to_string(HarmonicDimension h) {
    switch (h) {
    case HarmonicDimension::zero: return "zero";
    case HarmonicDimension::one_dimensional: return "one-dimensional";
    case HarmonicDimension::infinite_dimensional: return "infinite-dimensional";
    }
    return "?";
}

Number type1_threshold(DegreePair deg, const Number& b) {
    Number h = Number::fraction(deg.n - 2 * deg.p - 1, 2);
#ifdef WARPSPEC_FAULT_INJECTION
    return h * h * b * b + Number::fraction(1, 100);
#else
    return h * h * b * b;
#endif
}

Number type2_threshold(DegreePair deg, const Number& b) {
    Number h = Number::fraction(deg.n - 2 * deg.p + 1, 2);
    return h * h * b * b;
}

Number boundary_gap(DegreePair deg, const BoundaryData& boundary) {
    require_matching(deg, boundary);
    std::vector<Number> all;
    for (const auto& v : require_list(boundary, deg.p)) all.push_back(v);
    for (const auto& v : require_list(boundary, deg.p - 1)) all.push_back(v);
    for (const auto& v : require_list(boundary, deg.p - 2))
        if (!v.is_zero()) all.push_back(v);
    auto best = min_of(all, false);
    if (!best) throw std::invalid_argument("no boundary eigenvalues in degrees p, p-1");
    return *best;
}

Classification classify_general(const WarpedMetric& metric, DegreePair deg, const BoundaryData& boundary) {
    require_exponential(metric);
    require_matching(deg, boundary);
    const Number& b = metric.b();

    if (b.is_zero()) {
        Number gap = boundary_gap(deg, boundary);
        return {exact_ray(gap), "b=0"};
    }

    if (metric.is_critical()) {
        const Number t1 = type1_threshold(deg, b);
        const Number t2 = type2_threshold(deg, b);
        if (b < kZero) {
            Number start = min(t1, t2);
            return {SD::ray(start, ZeroStatus::unknown), "a=-1,b<0"};
        }
        const int bp = boundary.betti_at(deg.p);
        const int bq = boundary.betti_at(deg.p - 1);
        std::string branch = "a=-1,b>0," + betti_tag("betti(p)", bp) + "," + betti_tag("betti(p-1)", bq);
        if (bp == 0 && bq == 0) return {SD::empty(ZeroStatus::unknown), branch};
        if (bq == 0) return {SD::ray(t1, ZeroStatus::unknown), branch};
        if (bp == 0) return {SD::ray(t2, ZeroStatus::unknown), branch};
        return {SD::ray(min(t1, t2), ZeroStatus::unknown), branch};
    }

    if (b < kZero) return {SD::ray(kZero), "a<-1,b<0"};
    const int bp = boundary.betti_at(deg.p);
    const int bq = boundary.betti_at(deg.p - 1);
    if (bp == 0 && bq == 0) return {SD::empty(ZeroStatus::unknown), "a<-1,b>0,betti(p)=0,betti(p-1)=0"};
    return {SD::ray(kZero), "a<-1,b>0,betti(p)>0 or betti(p-1)>0"};
}

Classification classify_rotsym(const WarpedMetric& metric, DegreePair deg, const BoundaryData& boundary) {
    require_exponential(metric);
    require_matching(deg, boundary);
    if (!boundary.is_sphere()) throw std::invalid_argument("rotationally symmetric classification needs a sphere");
    const Number& b = metric.b();
    const int n = deg.n;
    const int p = deg.p;
    const bool middle = (1 < p && p < n - 1);

    if (b.is_zero()) return {exact_ray(boundary_gap(deg, boundary)), "sphere,b=0"};

    if (metric.is_critical()) {
        if (b < kZero) {
            if (2 * p == n) {
                return {SD::make(b * b / 4, {kZero}, ZeroStatus::included), "sphere,a=-1,b<0,p=n/2"};
            }
            return {exact_ray(min(type1_threshold(deg, b), type2_threshold(deg, b))), "sphere,a=-1,b<0,p!=n/2"};
        }
        if (middle) return {SD::empty(), "sphere,a=-1,b>0,1<p<n-1"};
        Number h = Number::fraction(n - 1, 2);
        return {exact_ray(h * h * b * b), "sphere,a=-1,b>0,p in {0,1,n-1,n}"};
    }

    if (b < kZero) return {SD::ray(kZero), "sphere,a<-1,b<0"};
    if (middle) return {SD::empty(), "sphere,a<-1,b>0,1<p<n-1"};
    return {SD::ray(kZero), "sphere,a<-1,b>0,p in {0,1,n-1,n}"};
}

HarmonicDimension harmonic_classify(const WarpedMetric& metric, DegreePair deg) {
    require_exponential(metric);
    const Number& a = metric.a();
    const Number& b = metric.b();
    const int n = deg.n;
    const int p = deg.p;
    if (p == 0 || p == n) {
        // Constants (or volume forms) are L2 exactly when the end has finite volume.
        Number threshold = -(a + 1) / (n - 1);
        return b > threshold ? HarmonicDimension::one_dimensional : HarmonicDimension::zero;
    }
    if (2 * p == n) return b < a + 1 ? HarmonicDimension::infinite_dimensional : HarmonicDimension::zero;
    return HarmonicDimension::zero;
}

ComponentSpectra component_spectra(const WarpedMetric& metric, DegreePair deg, const BoundaryData& boundary) {
    require_exponential(metric);
    require_matching(deg, boundary);
    const Number& b = metric.b();
    const bool has1 = deg.p < deg.n;
    const bool has2 = deg.p > 0;
    const bool has3 = has1 && has2;

    SD s1, s2, s3;
    bool bound3 = false;
    if (b.is_zero()) {
        if (has1) s1 = ray_or_empty(min_of(require_list(boundary, deg.p), false));
        if (has2) s2 = ray_or_empty(min_of(closed_eigenvalues(deg, boundary), false));
        if (has3) s3 = ray_or_empty(min_of(require_list(boundary, deg.p - 1), true));
    } else if (metric.is_critical()) {
        const Number t1 = type1_threshold(deg, b);
        const Number t2 = type2_threshold(deg, b);
        if (b < kZero) {
            s1 = exact_ray(t1);
            s2 = exact_ray(t2);
            s3 = SD::ray(min(t1, t2), ZeroStatus::unknown);
        } else {
            s1 = boundary.betti_at(deg.p) > 0 ? exact_ray(t1) : SD::empty();
            s2 = boundary.betti_at(deg.p - 1) > 0 ? exact_ray(t2) : SD::empty();
            // Only an enclosure is available for the coupled part.
            s3 = SD::make((s1 | s2).ray_start(), {}, ZeroStatus::unknown);
            bound3 = true;
        }
    } else {
        if (b < kZero) {
            s1 = s2 = s3 = SD::ray(kZero);
        } else {
            const bool bp = boundary.betti_at(deg.p) > 0;
            const bool bq = boundary.betti_at(deg.p - 1) > 0;
            s1 = bp ? SD::ray(kZero) : SD::empty();
            s2 = bq ? SD::ray(kZero) : SD::empty();
            if (bp || bq) {
                s3 = SD::ray(kZero);
                bound3 = true;
            } else {
                s3 = SD::empty(ZeroStatus::unknown);
            }
        }
    }

    ComponentSpectra out;
    if (has1) out.type1 = ComponentSpectrum{s1, false};
    if (has2) out.type2 = ComponentSpectrum{s2, false};
    if (has3) out.type3 = ComponentSpectrum{s3, bound3};
    return out;
}

SpectrumDescription operator_spectrum(const WarpedMetric& metric, DegreePair deg, FormType type,
                                      const Number& lambda) {
    require_exponential(metric);
    if (lambda.sign() < 0) throw std::invalid_argument("boundary eigenvalue must be non-negative");
    if (type == FormType::type1 && deg.p == deg.n) throw std::invalid_argument("type1 forms need p <= n-1");
    if (type == FormType::type2 && deg.p == 0) throw std::invalid_argument("type2 forms need p >= 1");
    if (type == FormType::type3) {
        if (deg.p == 0 || deg.p == deg.n) throw std::invalid_argument("type3 forms need 1 <= p <= n-1");
        if (!(lambda > kZero)) throw std::invalid_argument("type3 needs a positive boundary eigenvalue");
    }
    const Number& b = metric.b();

    if (b.is_zero()) return exact_ray(lambda);

    if (metric.is_critical()) {
        const Number t1 = type1_threshold(deg, b);
        const Number t2 = type2_threshold(deg, b);
        if (b < kZero) {
            switch (type) {
            case FormType::type1: return exact_ray(t1);
            case FormType::type2: return exact_ray(t2);
            case FormType::type3: return exact_ray(min(t1, t2));
            }
        }
        // Growing potential unless lambda = 0.
        if (type == FormType::type3 || lambda > kZero) return SD::empty();
        return exact_ray(type == FormType::type1 ? t1 : t2);
    }

    if (b < kZero) return SD::ray(kZero);
    if (type == FormType::type3 || lambda > kZero) return SD::empty();
    return SD::ray(kZero);
}

}  // namespace warpspec
