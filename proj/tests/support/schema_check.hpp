#pragma once

#include <regex>
#include <string>
#include <vector>

#include <json.hpp>

// Just enough of JSON Schema to enforce the shipped solution schema: type,
// required, properties, patternProperties, additionalProperties and minimum,
// applied recursively. Unknown keywords are ignored, matching validator
// behavior for annotations.

namespace schema_check {

inline bool type_matches(const nlohmann::json& doc, const std::string& type) {
    if (type == "object") return doc.is_object();
    if (type == "array") return doc.is_array();
    if (type == "string") return doc.is_string();
    if (type == "integer") return doc.is_number_integer();
    if (type == "number") return doc.is_number();
    if (type == "boolean") return doc.is_boolean();
    if (type == "null") return doc.is_null();
    return false;
}

inline void check(const nlohmann::json& schema, const nlohmann::json& doc,
                  const std::string& path, std::vector<std::string>& errors) {
    if (auto it = schema.find("type"); it != schema.end()) {
        if (!type_matches(doc, it->get<std::string>())) {
            errors.push_back(path + ": expected type " + it->get<std::string>());
            return;
        }
    }
    if (auto it = schema.find("minimum"); it != schema.end()) {
        if (doc.is_number() && doc.get<double>() < it->get<double>()) {
            errors.push_back(path + ": below minimum");
        }
    }
    if (!doc.is_object()) return;

    if (auto it = schema.find("required"); it != schema.end()) {
        for (const auto& key : *it) {
            if (!doc.contains(key.get<std::string>())) {
                errors.push_back(path + ": missing required \"" + key.get<std::string>() + "\"");
            }
        }
    }
    const auto props = schema.find("properties");
    const auto patterns = schema.find("patternProperties");
    const auto additional = schema.find("additionalProperties");
    for (const auto& [key, value] : doc.items()) {
        bool matched = false;
        if (props != schema.end()) {
            if (auto p = props->find(key); p != props->end()) {
                matched = true;
                check(*p, value, path + "/" + key, errors);
            }
        }
        if (patterns != schema.end()) {
            for (const auto& [pattern, sub] : patterns->items()) {
                if (std::regex_search(key, std::regex(pattern))) {
                    matched = true;
                    check(sub, value, path + "/" + key, errors);
                }
            }
        }
        if (!matched && additional != schema.end() && additional->is_boolean() &&
            !additional->get<bool>()) {
            errors.push_back(path + ": unexpected property \"" + key + "\"");
        }
    }
}

inline std::vector<std::string> validate(const nlohmann::json& schema,
                                         const nlohmann::json& doc) {
    std::vector<std::string> errors;
    check(schema, doc, "", errors);
    return errors;
}

}  // namespace schema_check
