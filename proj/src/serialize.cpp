#include "loopdec/serialize.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace loopdec {

nlohmann::json json_from_int(const Int& v)
{
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi)
        return v.convert_to<std::int64_t>();
    return v.str();
}

Int int_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer() || j.is_number_unsigned())
        return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw std::invalid_argument("not a decimal integer: \"" + j.get<std::string>() + "\"");
        }
    }
    throw std::invalid_argument("expected an integer or a decimal string, got " +
                                std::string(j.type_name()));
}

nlohmann::json json_from_series(const TruncatedSeries& s)
{
    nlohmann::json coeffs = nlohmann::json::object();
    for (int d = 0; d <= s.cutoff(); ++d)
        if (s.coeff(d) != 0)
            coeffs[std::to_string(d)] = json_from_int(s.coeff(d));
    return nlohmann::json{{"cutoff", s.cutoff()}, {"coeffs", std::move(coeffs)}};
}

namespace {

int parse_degree_key(const std::string& key)
{
    size_t used = 0;
    int degree = 0;
    try {
        degree = std::stoi(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != key.size() || key.empty())
        throw std::invalid_argument("series degree key \"" + key + "\" is not an integer");
    return degree;
}

}  // namespace

TruncatedSeries series_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("cutoff") || !j.contains("coeffs"))
        throw std::invalid_argument("a series needs the shape {\"cutoff\": N, \"coeffs\": {...}}");
    if (!j["cutoff"].is_number_integer())
        throw std::invalid_argument("series cutoff must be an integer");
    const int cutoff = j["cutoff"].get<int>();
    if (cutoff < 0)
        throw std::invalid_argument("series cutoff must be >= 0, got " + std::to_string(cutoff));
    if (!j["coeffs"].is_object())
        throw std::invalid_argument("series coeffs must be an object keyed by degree");
    TruncatedSeries s = TruncatedSeries::zero(cutoff);
    for (const auto& [key, value] : j["coeffs"].items()) {
        const int degree = parse_degree_key(key);
        if (degree < 0 || degree > cutoff)
            throw std::invalid_argument("series degree " + key + " lies outside [0, " +
                                        std::to_string(cutoff) + "]");
        s.set_coeff(degree, int_from_json(value));
    }
    return s;
}

}  // namespace loopdec
