#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "warpspec/model.hpp"
#include "warpspec/number.hpp"
#include "warpspec/reduction.hpp"

namespace warpspec::cli {

/// Bad flags or config values; reported with exit code 1.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raw option values shared by all subcommands. Lists stay as text until a command
/// knows whether it accepts one value or many.
struct Options {
    std::string a;
    std::string b;
    std::string c = "1";
    std::string n;
    std::string p;
    std::string lambda;
    std::string betti;
    std::string coclosed;
    std::string type;
    bool sphere = false;
    std::optional<int> grid_points;
    std::optional<double> l_max;
    double tol = 5e-3;
    int jobs = 1;
    int count = 6;
    bool json = false;
    std::string out;
};

std::vector<std::string> split(const std::string& text, char sep);

/// "-1,-2,1/2" -> numbers. Empty text gives an empty list.
std::vector<Number> parse_numbers(const std::string& text, const char* flag);
Number parse_one_number(const std::string& text, const char* flag);
std::vector<int> parse_ints(const std::string& text, const char* flag);
int parse_one_int(const std::string& text, const char* flag);

/// "all" expands to 0..n.
std::vector<int> parse_degrees(const std::string& text, int n);

/// "1", "II", "type3", comma lists, or "all"; empty means all three.
std::vector<FormType> parse_types(const std::string& text);
FormType parse_one_type(const std::string& text);

/// "0:0,2,6;1:2,6,12" -> degree -> ascending eigenvalues.
std::map<int, std::vector<Number>> parse_coclosed(const std::string& text);

/// Exponential metric; a > -1 becomes a usage error.
WarpedMetric make_metric(const Number& a, const Number& b, const Number& c);

/// Boundary data from --sphere or --betti/--coclosed.
BoundaryData make_boundary(const Options& opts, int n);

}  // namespace warpspec::cli
