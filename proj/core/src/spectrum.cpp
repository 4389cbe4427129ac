#include "warpspec/spectrum.hpp"

#include <algorithm>

namespace warpspec {

namespace {

ZeroStatus join(ZeroStatus x, ZeroStatus y) {
    if (x == ZeroStatus::included || y == ZeroStatus::included) return ZeroStatus::included;
    if (x == ZeroStatus::unknown || y == ZeroStatus::unknown) return ZeroStatus::unknown;
    return ZeroStatus::excluded;
}

}  // namespace

const char* to_string(ZeroStatus z) {
    switch (z) {
    case ZeroStatus::included: return "included";
    case ZeroStatus::excluded: return "excluded";
    case ZeroStatus::unknown: return "unknown";
    }
    return "unknown";
}

SpectrumDescription SpectrumDescription::empty(ZeroStatus zero) { return make(std::nullopt, {}, zero); }

SpectrumDescription SpectrumDescription::ray(const Number& start, ZeroStatus zero) {
    return make(start, {}, zero);
}

SpectrumDescription SpectrumDescription::make(std::optional<Number> ray_start, std::vector<Number> points,
                                              ZeroStatus zero) {
    SpectrumDescription s;
    s.ray_ = std::move(ray_start);
    s.points_ = std::move(points);
    s.zero_ = zero;
    s.normalize();
    return s;
}

void SpectrumDescription::normalize() {
    std::sort(points_.begin(), points_.end(), [](const Number& x, const Number& y) { return x < y; });
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    if (ray_) std::erase_if(points_, [&](const Number& x) { return !(x < *ray_); });

    // A closed set containing 0 settles the zero question.
    bool covers_zero = (ray_ && !(Number(0) < *ray_)) ||
                       std::any_of(points_.begin(), points_.end(), [](const Number& x) { return x.is_zero(); });
    if (covers_zero) {
        zero_ = ZeroStatus::included;
    } else if (zero_ == ZeroStatus::included) {
        points_.insert(points_.begin(), Number(0));
        normalize();
    }
}

std::optional<Number> SpectrumDescription::bottom() const {
    if (!points_.empty()) return points_.front();
    return ray_;
}

bool SpectrumDescription::contains(const Number& mu) const {
    if (ray_ && !(mu < *ray_)) return true;
    return std::any_of(points_.begin(), points_.end(), [&](const Number& x) { return x == mu; });
}

SpectrumDescription operator|(const SpectrumDescription& x, const SpectrumDescription& y) {
    std::optional<Number> r = x.ray_;
    if (y.ray_ && (!r || *y.ray_ < *r)) r = y.ray_;
    std::vector<Number> pts = x.points_;
    pts.insert(pts.end(), y.points_.begin(), y.points_.end());
    return SpectrumDescription::make(r, std::move(pts), join(x.zero_, y.zero_));
}

bool operator==(const SpectrumDescription& x, const SpectrumDescription& y) {
    return x.zero_ == y.zero_ && x.ray_ == y.ray_ && x.points_ == y.points_;
}

bool SpectrumDescription::same_away_from_zero(const SpectrumDescription& other) const {
    auto strip = [](const SpectrumDescription& s) {
        std::vector<Number> pts;
        for (const auto& p : s.points_)
            if (!p.is_zero()) pts.push_back(p);
        return std::make_pair(s.ray_, pts);
    };
    return strip(*this) == strip(other);
}

std::string SpectrumDescription::to_string() const {
    std::string zero = std::string("zero ") + warpspec::to_string(zero_);
    if (is_empty()) return "empty (" + zero + ")";
    std::string out;
    if (!points_.empty()) {
        out += "{";
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (i > 0) out += ", ";
            out += points_[i].to_string();
        }
        out += "}";
    }
    if (ray_) {
        if (!out.empty()) out += " ∪ ";
        out += "[" + ray_->to_string() + ", inf)";
    }
    return out + ", " + zero;
}

}  // namespace warpspec
