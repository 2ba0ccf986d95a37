#pragma once

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "rational.hpp"
#include "walk.hpp"

namespace pw {

using json = nlohmann::ordered_json;

enum class Format { csv, json };

struct OutputSpec {
    Format format = Format::csv;
    int precision = 12;
    std::optional<std::string> path;
};

inline Format parse_format(const std::string& s)
{
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw DomainError("format must be csv or json");
}

inline std::string format_double(double x, int precision)
{
    require(precision >= 1 && precision <= 17, "precision must lie in [1, 17]");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return buf;
}

// Rounds to the requested number of significant digits before it reaches the JSON writer.
inline double rounded(double x, int precision)
{
    return std::stod(format_double(x, precision));
}

inline json complex_json(std::complex<double> z, int precision)
{
    return json::array({rounded(z.real(), precision), rounded(z.imag(), precision)});
}

inline json rational_json(const Rational& q)
{
    return to_string(q);
}

inline std::string measure_csv(const SignedMeasure& m)
{
    std::ostringstream os;
    os << "k,numerator,denominator\n";
    for (const auto& [k, v] : m.masses()) os << k << ',' << v.get_num().get_str() << ',' << v.get_den().get_str() << '\n';
    return os.str();
}

inline json measure_json(const SignedMeasure& m)
{
    json arr = json::array();
    for (const auto& [k, v] : m.masses()) arr.push_back({{"k", k}, {"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}});
    return arr;
}

inline void emit(const OutputSpec& spec, const std::string& text)
{
    if (spec.path) {
        std::ofstream f(*spec.path, std::ios::binary);
        if (!f) throw DomainError("cannot open output file " + *spec.path);
        f << text;
    } else {
        std::cout << text;
    }
}

} // namespace pw
