#include "solenoid/schema.hpp"

#include <algorithm>

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

using nlohmann::json;

bool has_type(const json& v, const std::string& t)
{
    if (t == "object")
        return v.is_object();
    if (t == "array")
        return v.is_array();
    if (t == "string")
        return v.is_string();
    if (t == "boolean")
        return v.is_boolean();
    if (t == "integer")
        return v.is_number_integer();
    if (t == "number")
        return v.is_number();
    if (t == "null")
        return v.is_null();
    throw Error("invalid_schema", "unknown type '" + t + "'");
}

class Validator
{
public:
    explicit Validator(const json& root) : root_(root) {}

    void check(const json& s, const json& v, const std::string& path, std::vector<std::string>& errors) const
    {
        if (s.contains("$ref"))
        {
            check(resolve(s.at("$ref").get<std::string>()), v, path, errors);
            return;
        }
        if (s.contains("type"))
        {
            const json& t = s.at("type");
            bool ok = false;
            if (t.is_string())
                ok = has_type(v, t.get<std::string>());
            else
                for (const json& e : t)
                    ok = ok || has_type(v, e.get<std::string>());
            if (!ok)
            {
                errors.push_back(path + ": expected type " + t.dump());
                return;
            }
        }
        if (s.contains("const") && v != s.at("const"))
            errors.push_back(path + ": must equal " + s.at("const").dump());
        if (s.contains("enum"))
        {
            const json& e = s.at("enum");
            if (std::find(e.begin(), e.end(), v) == e.end())
                errors.push_back(path + ": must be one of " + e.dump());
        }
        if (v.is_number())
        {
            if (s.contains("minimum") && v.get<double>() < s.at("minimum").get<double>())
                errors.push_back(path + ": below minimum " + s.at("minimum").dump());
            if (s.contains("exclusiveMinimum") && v.get<double>() <= s.at("exclusiveMinimum").get<double>())
                errors.push_back(path + ": must exceed " + s.at("exclusiveMinimum").dump());
        }
        if (v.is_object())
        {
            if (s.contains("required"))
                for (const json& r : s.at("required"))
                    if (!v.contains(r.get<std::string>()))
                        errors.push_back(path + ": missing required field '" + r.get<std::string>() + "'");
            const json* props = s.contains("properties") ? &s.at("properties") : nullptr;
            for (const auto& [key, value] : v.items())
            {
                if (props && props->contains(key))
                    check(props->at(key), value, path + "/" + key, errors);
                else if (s.contains("additionalProperties"))
                {
                    const json& extra = s.at("additionalProperties");
                    if (extra.is_boolean() && !extra.get<bool>())
                        errors.push_back(path + ": unexpected field '" + key + "'");
                    else if (extra.is_object())
                        check(extra, value, path + "/" + key, errors);
                }
            }
        }
        if (v.is_array())
        {
            if (s.contains("minItems") && v.size() < s.at("minItems").get<std::size_t>())
                errors.push_back(path + ": needs at least " + s.at("minItems").dump() + " items");
            if (s.contains("items"))
                for (std::size_t i = 0; i < v.size(); ++i)
                    check(s.at("items"), v[i], path + "/" + std::to_string(i), errors);
        }
        if (s.contains("oneOf") || s.contains("anyOf"))
        {
            const bool one = s.contains("oneOf");
            std::size_t matches = 0;
            for (const json& option : s.at(one ? "oneOf" : "anyOf"))
            {
                std::vector<std::string> sub;
                check(option, v, path, sub);
                matches += sub.empty();
            }
            if (matches == 0 || (one && matches > 1))
                errors.push_back(path + (matches == 0 ? ": matches none of the allowed forms"
                                                      : ": matches more than one allowed form"));
        }
    }

private:
    const json& resolve(const std::string& ref) const
    {
        if (ref.rfind("#/", 0) != 0)
            throw Error("invalid_schema", "only local references are supported: " + ref);
        return root_.at(json::json_pointer(ref.substr(1)));
    }

    const json& root_;
};

} // namespace

std::vector<std::string> schema_errors(const nlohmann::json& schema, const nlohmann::json& document)
{
    std::vector<std::string> errors;
    Validator(schema).check(schema, document, "", errors);
    return errors;
}

} // namespace solenoid
