#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "arrays.hpp"
#include "bijection.hpp"

namespace astz {

using json = nlohmann::ordered_json;

struct json_input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline json to_json(const Astz& a) { return json{{"l", a.l}, {"rows", a.rows}}; }
inline json to_json(const Csspp& c) { return json{{"class", c.k}, {"rows", c.rows}}; }

inline json to_json(const StatProfile& s) {
    return json{{"mu", s.mu}, {"r", s.r}, {"p", s.p}, {"q", s.q}, {"inv", s.inv}};
}

inline json to_json(const BijectionConfig& c) {
    return json{{"d", c.d},
                {"rotation", c.rotation == Rotation::Clockwise ? "cw" : "ccw"},
                {"reflection", c.reflection == Reflection::VerticalAxis ? "v" : "h"}};
}

namespace detail {

inline Rows rows_field(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("rows")) throw json_input_error(where + ": missing field \"rows\"");
    const json& rows = j["rows"];
    if (!rows.is_array()) throw json_input_error(where + ": field \"rows\" must be an array");
    Rows out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array())
            throw json_input_error(where + ": field \"rows[" + std::to_string(r) + "]\" must be an array");
        std::vector<int> row;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (!rows[r][c].is_number_integer())
                throw json_input_error(where + ": field \"rows[" + std::to_string(r) + "][" + std::to_string(c) +
                                       "]\" must be an integer");
            row.push_back(rows[r][c].get<int>());
        }
        out.push_back(row);
    }
    return out;
}

inline int int_field(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw json_input_error(where + ": field \"" + key + "\" must be an integer");
    return j[key].get<int>();
}

}  // namespace detail

inline Astz astz_from_json(const json& j, const std::string& where = "input") {
    Rows rows = detail::rows_field(j, where);
    int l = detail::int_field(j, "l", where);
    try {
        return validate_astz(rows, l);
    } catch (const invalid_astz& e) {
        throw json_input_error(where + ": invalid array: " + e.what());
    }
}

inline Csspp csspp_from_json(const json& j, const std::string& where = "input") {
    Rows rows = detail::rows_field(j, where);
    int k = detail::int_field(j, "class", where);
    try {
        return validate_csspp(rows, k);
    } catch (const std::invalid_argument& e) {
        throw json_input_error(where + ": invalid partition: " + e.what());
    }
}

}  // namespace astz
