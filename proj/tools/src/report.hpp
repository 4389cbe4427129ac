#pragma once

#include <string>

#include "json.hpp"
#include "warpspec/number.hpp"
#include "warpspec/spectrum.hpp"

namespace warpspec::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"exact": "p/q" or null, "value": double}
Json to_json(const Number& x);
Number number_from_json(const Json& j);

/// {"ray": number or null, "points": [...], "zero": "included" | "excluded" | "unknown"}
Json to_json(const SpectrumDescription& s);
SpectrumDescription spectrum_from_json(const Json& j);

/// Finite doubles for text tables with a fixed format; "inf" and "nan" otherwise.
std::string format_value(double v);

/// Json has no infinity; non-finite doubles go out as null.
Json finite_or_null(double v);

}  // namespace warpspec::cli
