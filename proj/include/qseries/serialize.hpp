#ifndef QSERIES_SERIALIZE_HPP
#define QSERIES_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include <qseries/series.hpp>

namespace qseries
{

// A series serializes as a JSON array of decimal strings indexed by exponent. Strings keep
// coefficients beyond 64 bits intact for consumers that parse numbers as doubles.
inline nlohmann::json series_to_json(const trunc_series &s)
{
    auto arr = nlohmann::json::array();
    for (const auto &c : s.coeffs()) {
        arr.push_back(c.str());
    }
    return arr;
}

inline trunc_series series_from_json(const nlohmann::json &j)
{
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("series JSON must be a nonempty array of decimal strings");
    }
    std::vector<bigint> v;
    v.reserve(j.size());
    for (const auto &e : j) {
        if (!e.is_string()) {
            throw std::invalid_argument("series coefficients must be decimal strings");
        }
        const auto &text = e.get_ref<const std::string &>();
        const auto body = text.substr(!text.empty() && text[0] == '-' ? 1 : 0);
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("not a decimal integer: " + text);
        }
        v.emplace_back(text);
    }
    return trunc_series(std::move(v));
}

} // namespace qseries

#endif
