// Minimal JSON Schema checker covering exactly the constructs used by
// schemas/output.schema.json: type, enum, oneOf, properties, required,
// additionalProperties (boolean), patternProperties, items, pattern,
// minProperties. Test-only.
#pragma once

#include <json.hpp>
#include <regex>
#include <string>

namespace schema {

using json = nlohmann::json;

inline bool validate(const json& schema_node, const json& value);

inline bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

inline bool validate(const json& s, const json& v) {
    if (s.contains("oneOf")) {
        int hits = 0;
        for (const auto& branch : s["oneOf"])
            if (validate(branch, v)) ++hits;
        if (hits != 1) return false;
    }
    if (s.contains("type") && !type_matches(s["type"].get<std::string>(), v)) return false;
    if (s.contains("enum")) {
        bool found = false;
        for (const auto& e : s["enum"])
            if (e == v) found = true;
        if (!found) return false;
    }
    if (s.contains("pattern") && v.is_string()) {
        if (!std::regex_match(v.get<std::string>(), std::regex(s["pattern"].get<std::string>()))) return false;
    }
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto& k : s["required"])
                if (!v.contains(k.get<std::string>())) return false;
        if (s.contains("minProperties") && v.size() < s["minProperties"].get<size_t>()) return false;
        for (const auto& [key, member] : v.items()) {
            bool matched = false;
            if (s.contains("properties") && s["properties"].contains(key)) {
                if (!validate(s["properties"][key], member)) return false;
                matched = true;
            }
            if (s.contains("patternProperties"))
                for (const auto& [pat, sub] : s["patternProperties"].items())
                    if (std::regex_match(key, std::regex(pat))) {
                        if (!validate(sub, member)) return false;
                        matched = true;
                    }
            if (!matched && s.contains("additionalProperties") && s["additionalProperties"].is_boolean() &&
                !s["additionalProperties"].get<bool>())
                return false;
        }
    }
    if (v.is_array() && s.contains("items")) {
        for (const auto& item : v)
            if (!validate(s["items"], item)) return false;
    }
    return true;
}

}  // namespace schema
