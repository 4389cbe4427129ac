#include "options.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace warpspec::cli {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return s;
}

}  // namespace

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    if (trim(text).empty()) return parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(trim(text.substr(start, pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::vector<Number> parse_numbers(const std::string& text, const char* flag) {
    std::vector<Number> out;
    for (const auto& item : split(text, ',')) {
        try {
            out.push_back(Number::parse(item));
        } catch (const std::invalid_argument&) {
            throw usage_error(std::string("--") + flag + ": not a number: '" + item + "'");
        }
    }
    return out;
}

Number parse_one_number(const std::string& text, const char* flag) {
    auto values = parse_numbers(text, flag);
    if (values.size() != 1) throw usage_error(std::string("--") + flag + " needs exactly one value");
    return values.front();
}

std::vector<int> parse_ints(const std::string& text, const char* flag) {
    std::vector<int> out;
    for (const auto& item : split(text, ',')) {
        int v = 0;
        const char* end = item.data() + item.size();
        auto [ptr, ec] = std::from_chars(item.data(), end, v);
        if (ec != std::errc() || ptr != end || item.empty())
            throw usage_error(std::string("--") + flag + ": not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

int parse_one_int(const std::string& text, const char* flag) {
    auto values = parse_ints(text, flag);
    if (values.size() != 1) throw usage_error(std::string("--") + flag + " needs exactly one value");
    return values.front();
}

std::vector<int> parse_degrees(const std::string& text, int n) {
    if (trim(text).empty()) throw usage_error("--p is required");
    std::vector<int> out;
    if (lower(trim(text)) == "all") {
        for (int p = 0; p <= n; ++p) out.push_back(p);
        return out;
    }
    out = parse_ints(text, "p");
    for (int p : out)
        if (p < 0 || p > n) throw usage_error("--p must lie in 0.." + std::to_string(n));
    return out;
}

FormType parse_one_type(const std::string& text) {
    const std::string t = lower(trim(text));
    if (t == "1" || t == "i" || t == "type1") return FormType::type1;
    if (t == "2" || t == "ii" || t == "type2") return FormType::type2;
    if (t == "3" || t == "iii" || t == "type3") return FormType::type3;
    throw usage_error("--type: expected 1, 2 or 3, got '" + text + "'");
}

std::vector<FormType> parse_types(const std::string& text) {
    if (trim(text).empty() || lower(trim(text)) == "all") return {FormType::type1, FormType::type2, FormType::type3};
    std::vector<FormType> out;
    for (const auto& item : split(text, ',')) {
        FormType t = parse_one_type(item);
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<int, std::vector<Number>> parse_coclosed(const std::string& text) {
    std::map<int, std::vector<Number>> out;
    for (const auto& block : split(text, ';')) {
        if (block.empty()) continue;
        const auto colon = block.find(':');
        if (colon == std::string::npos) throw usage_error("--coclosed: expected 'degree:v1,v2,...', got '" + block + "'");
        const int q = parse_one_int(trim(block.substr(0, colon)), "coclosed");
        if (out.count(q)) throw usage_error("--coclosed: degree " + std::to_string(q) + " given twice");
        out[q] = parse_numbers(block.substr(colon + 1), "coclosed");
    }
    return out;
}

WarpedMetric make_metric(const Number& a, const Number& b, const Number& c) {
    try {
        return WarpedMetric::exponential(a, b, c);
    } catch (const incomplete_metric&) {
        throw usage_error("a = " + a.to_string() +
                          " > -1 gives an incomplete end (finite distance to infinity); need a <= -1");
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

BoundaryData make_boundary(const Options& opts, int n) {
    if (opts.sphere) {
        if (!opts.betti.empty() || !opts.coclosed.empty())
            throw usage_error("--sphere cannot be combined with --betti or --coclosed");
        return BoundaryData::sphere(n);
    }
    if (opts.betti.empty()) throw usage_error("boundary data needed: pass --sphere or --betti");
    try {
        return BoundaryData(n, parse_ints(opts.betti, "betti"), parse_coclosed(opts.coclosed));
    } catch (const std::invalid_argument& e) {
        throw usage_error(std::string("invalid boundary data: ") + e.what());
    }
}

}  // namespace warpspec::cli
