#include "report.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace warpspec::cli {

Json to_json(const Number& x) {
    Json j;
    j["exact"] = x.is_exact() ? Json(x.rational()->to_string()) : Json(nullptr);
    j["value"] = x.value();
    return j;
}

Number number_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("value")) throw std::invalid_argument("number: expected {exact, value}");
    if (j.contains("exact") && !j["exact"].is_null()) return Number::parse(j["exact"].get<std::string>());
    return Number::real(j["value"].get<double>());
}

Json to_json(const SpectrumDescription& s) {
    Json j;
    j["ray"] = s.ray_start() ? to_json(*s.ray_start()) : Json(nullptr);
    j["points"] = Json::array();
    for (const auto& p : s.points()) j["points"].push_back(to_json(p));
    j["zero"] = to_string(s.zero());
    return j;
}

SpectrumDescription spectrum_from_json(const Json& j) {
    std::optional<Number> ray;
    if (!j.at("ray").is_null()) ray = number_from_json(j.at("ray"));
    std::vector<Number> points;
    for (const auto& p : j.at("points")) points.push_back(number_from_json(p));
    const auto zero = j.at("zero").get<std::string>();
    ZeroStatus z;
    if (zero == "included")
        z = ZeroStatus::included;
    else if (zero == "excluded")
        z = ZeroStatus::excluded;
    else if (zero == "unknown")
        z = ZeroStatus::unknown;
    else
        throw std::invalid_argument("spectrum: bad zero status '" + zero + "'");
    return SpectrumDescription::make(ray, std::move(points), z);
}

std::string format_value(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return fmt::format("{:.6g}", v);
}

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace warpspec::cli
