#pragma once

// The identity catalog: a JSON file of entries, each binding a family to
// default parameters, path-handling settings and a verbatim source quote.

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "logint/identities.hpp"

namespace logint {

inline constexpr int catalog_schema_version = 1;

using json = nlohmann::ordered_json;

// ------------------------------------------------------------- json helpers

inline json complex_to_json(cx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

// Accepts {re, im}, [re, im] or a bare number.
inline cx complex_from_json(const json& j, const std::string& field)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_object() && j.contains("re") && j.contains("im") && j.size() == 2 && j["re"].is_number() &&
        j["im"].is_number())
        return {j["re"].get<double>(), j["im"].get<double>()};
    throw CatalogError(field + ": expected a complex number {\"re\": x, \"im\": y}");
}

inline json params_to_json(const ParamSet& p)
{
    json j = json::object();
    for (const auto& [k, v] : p.values())
        j[k] = complex_to_json(v);
    return j;
}

inline ParamSet params_from_json(const json& j, const std::string& field)
{
    if (!j.is_object())
        throw CatalogError(field + ": expected an object of parameters");
    ParamSet p;
    for (const auto& [k, v] : j.items())
        p.set(k, complex_from_json(v, field + "." + k));
    return p;
}

inline Side side_from_string(const std::string& s, const std::string& field)
{
    if (s == "above")
        return Side::above;
    if (s == "below")
        return Side::below;
    if (s == "none")
        return Side::none;
    throw CatalogError(field + ": unknown side '" + s + "' (expected above, below or none)");
}

// ------------------------------------------------------------------- entries

struct Reference {
    std::string topic;
    std::string quote;  // verbatim from the source text
    bool operator==(const Reference&) const = default;
};

inline const std::vector<std::string>& status_names()
{
    static const std::vector<std::string> names = {"pass", "fail", "skipped-unsupported-regime",
                                                   "lhs-nonconvergent", "flagged-discrepancy"};
    return names;
}

struct CatalogEntry {
    std::string id;
    std::string family;
    std::string description;
    ParamSet params;                      // defaults
    std::vector<std::string> conditions;  // extra tags on top of the family's own
    std::vector<std::string> tags;
    std::optional<Side> deformation_side;
    std::optional<Side> pole_side;
    cx erratum_multiplier{1.0, 0.0};
    std::optional<std::string> known_discrepancy;
    std::optional<std::string> expected_status;
    std::optional<double> rel_tol;
    std::optional<double> abs_tol;
    Reference reference;

    bool operator==(const CatalogEntry&) const = default;

    const Family& family_ref() const { return logint::family(family); }

    // unset means below the axis
    Side side() const { return deformation_side.value_or(Side::below); }
    Side residue_side() const { return pole_side.value_or(Side::none); }

    std::vector<std::string> validity() const
    {
        std::vector<std::string> v = family_ref().conditions;
        for (const auto& c : conditions)
            if (std::find(v.begin(), v.end(), c) == v.end())
                v.push_back(c);
        return v;
    }

    bool has_tag(const std::string& t) const { return std::find(tags.begin(), tags.end(), t) != tags.end(); }
};

inline json entry_to_json(const CatalogEntry& e)
{
    json j;
    j["id"] = e.id;
    j["family"] = e.family;
    j["description"] = e.description;
    j["params"] = params_to_json(e.params);
    if (!e.conditions.empty())
        j["conditions"] = e.conditions;
    j["tags"] = e.tags;
    if (e.deformation_side)
        j["deformation_side"] = to_string(*e.deformation_side);
    if (e.pole_side)
        j["pole_side"] = to_string(*e.pole_side);
    if (e.erratum_multiplier != cx{1.0, 0.0})
        j["erratum_multiplier"] = complex_to_json(e.erratum_multiplier);
    if (e.known_discrepancy)
        j["known_discrepancy"] = *e.known_discrepancy;
    if (e.expected_status)
        j["expected_status"] = *e.expected_status;
    if (e.rel_tol)
        j["rel_tol"] = *e.rel_tol;
    if (e.abs_tol)
        j["abs_tol"] = *e.abs_tol;
    j["reference"] = json{{"topic", e.reference.topic}, {"quote", e.reference.quote}};
    return j;
}

namespace detail {

inline const json& required(const json& j, const char* key, const std::string& where)
{
    if (!j.contains(key))
        throw CatalogError(where + ": missing field '" + key + "'");
    return j.at(key);
}

inline std::string string_field(const json& j, const char* key, const std::string& where)
{
    const json& v = required(j, key, where);
    if (!v.is_string())
        throw CatalogError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

inline std::vector<std::string> string_list(const json& j, const char* key, const std::string& where)
{
    if (!j.contains(key))
        return {};
    const json& v = j.at(key);
    if (!v.is_array())
        throw CatalogError(where + "." + key + ": expected a list of strings");
    std::vector<std::string> out;
    for (const auto& s : v) {
        if (!s.is_string())
            throw CatalogError(where + "." + key + ": expected a list of strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

inline std::optional<double> positive_field(const json& j, const char* key, const std::string& where)
{
    if (!j.contains(key))
        return std::nullopt;
    const json& v = j.at(key);
    if (!v.is_number() || !(v.get<double>() > 0.0))
        throw CatalogError(where + "." + key + ": expected a positive number");
    return v.get<double>();
}

inline const std::set<std::string>& entry_keys()
{
    static const std::set<std::string> k = {"id", "family", "description", "params", "conditions",
                                            "tags", "deformation_side", "pole_side", "erratum_multiplier",
                                            "known_discrepancy", "expected_status", "rel_tol", "abs_tol",
                                            "reference"};
    return k;
}

}  // namespace detail

// Structural parse plus semantic checks: family known, parameters exactly the
// family's symbols, conditions known, defaults valid.
inline CatalogEntry entry_from_json(const json& j, const std::string& where_in)
{
    using namespace detail;
    if (!j.is_object())
        throw CatalogError(where_in + ": expected an object");
    CatalogEntry e;
    e.id = string_field(j, "id", where_in);
    std::string where = where_in + " ('" + e.id + "')";
    for (const auto& [k, v] : j.items())
        if (!entry_keys().count(k))
            throw CatalogError(where + ": unknown field '" + k + "'");

    e.family = string_field(j, "family", where);
    const Family* fam = find_family(e.family);
    if (!fam)
        throw CatalogError(where + ".family: unknown family '" + e.family + "'");
    if (j.contains("description"))
        e.description = string_field(j, "description", where);
    e.params = params_from_json(required(j, "params", where), where + ".params");
    e.conditions = string_list(j, "conditions", where);
    e.tags = string_list(j, "tags", where);
    if (j.contains("deformation_side"))
        e.deformation_side = side_from_string(string_field(j, "deformation_side", where), where + ".deformation_side");
    if (j.contains("pole_side"))
        e.pole_side = side_from_string(string_field(j, "pole_side", where), where + ".pole_side");
    if (j.contains("erratum_multiplier"))
        e.erratum_multiplier = complex_from_json(j["erratum_multiplier"], where + ".erratum_multiplier");
    if (j.contains("known_discrepancy"))
        e.known_discrepancy = string_field(j, "known_discrepancy", where);
    if (j.contains("expected_status")) {
        e.expected_status = string_field(j, "expected_status", where);
        const auto& names = status_names();
        if (std::find(names.begin(), names.end(), *e.expected_status) == names.end())
            throw CatalogError(where + ".expected_status: unknown status '" + *e.expected_status + "'");
    }
    e.rel_tol = positive_field(j, "rel_tol", where);
    e.abs_tol = positive_field(j, "abs_tol", where);
    const json& ref = required(j, "reference", where);
    e.reference.topic = string_field(ref, "topic", where + ".reference");
    e.reference.quote = string_field(ref, "quote", where + ".reference");
    if (e.reference.quote.empty())
        throw CatalogError(where + ".reference.quote: must not be empty");

    for (const auto& [k, v] : e.params.values())
        if (std::find(fam->symbols.begin(), fam->symbols.end(), k) == fam->symbols.end())
            throw CatalogError(where + ".params." + k + ": not a parameter of family '" + e.family + "'");
    for (const auto& s : fam->symbols)
        if (!e.params.has(s))
            throw CatalogError(where + ".params: missing default for '" + s + "'");
    for (const auto& c : e.conditions)
        if (!conditions().count(c))
            throw CatalogError(where + ".conditions: unknown condition '" + c + "'");
    std::string bad = violated_condition(e.validity(), e.params);
    if (!bad.empty())
        throw CatalogError(where + ".params: invalid defaults, violates " + bad);
    return e;
}

// ------------------------------------------------------------------- catalog

struct CatalogMetadata {
    std::string stirling_convention = "signed";
    std::string stirling_calibration_family = "polynomial_log_power";
    ParamSet stirling_calibration_params;
    bool operator==(const CatalogMetadata&) const = default;
};

inline std::string to_string(StirlingConvention c) { return c == StirlingConvention::signed_ ? "signed" : "unsigned"; }

struct Catalog {
    int schema_version = catalog_schema_version;
    CatalogMetadata metadata;
    std::vector<CatalogEntry> entries;

    bool operator==(const Catalog&) const = default;

    const CatalogEntry* find(const std::string& id) const
    {
        for (const auto& e : entries)
            if (e.id == id)
                return &e;
        return nullptr;
    }

    const CatalogEntry& entry(const std::string& id) const
    {
        if (const CatalogEntry* e = find(id))
            return *e;
        throw CatalogError("no catalog entry '" + id + "'");
    }
};

inline json catalog_to_json(const Catalog& c)
{
    json j;
    j["schema_version"] = c.schema_version;
    j["metadata"] = json{{"stirling_convention", c.metadata.stirling_convention},
                         {"stirling_calibration",
                          {{"family", c.metadata.stirling_calibration_family},
                           {"params", params_to_json(c.metadata.stirling_calibration_params)}}}};
    j["entries"] = json::array();
    for (const auto& e : c.entries)
        j["entries"].push_back(entry_to_json(e));
    return j;
}

inline std::string dump_catalog(const Catalog& c) { return catalog_to_json(c).dump(2) + "\n"; }

inline Catalog catalog_from_json(const json& j)
{
    using namespace detail;
    if (!j.is_object())
        throw CatalogError("catalog: expected a top-level object");
    const json& ver = required(j, "schema_version", "catalog");
    if (!ver.is_number_integer())
        throw CatalogError("catalog.schema_version: expected an integer");
    Catalog c;
    c.schema_version = ver.get<int>();
    if (c.schema_version != catalog_schema_version)
        throw CatalogError("catalog.schema_version: unsupported version " + std::to_string(c.schema_version));

    if (j.contains("metadata")) {
        const json& m = j["metadata"];
        c.metadata.stirling_convention = string_field(m, "stirling_convention", "catalog.metadata");
        std::string expected = to_string(calibrated_stirling_convention);
        if (c.metadata.stirling_convention != expected)
            throw CatalogError("catalog.metadata.stirling_convention: '" + c.metadata.stirling_convention +
                               "' disagrees with the library's calibrated convention '" + expected + "'");
        if (m.contains("stirling_calibration")) {
            const json& cal = m["stirling_calibration"];
            c.metadata.stirling_calibration_family =
                string_field(cal, "family", "catalog.metadata.stirling_calibration");
            c.metadata.stirling_calibration_params =
                params_from_json(required(cal, "params", "catalog.metadata.stirling_calibration"),
                                 "catalog.metadata.stirling_calibration.params");
        }
    }

    const json& entries = required(j, "entries", "catalog");
    if (!entries.is_array())
        throw CatalogError("catalog.entries: expected a list");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CatalogEntry e = entry_from_json(entries[i], "catalog.entries[" + std::to_string(i) + "]");
        if (!seen.insert(e.id).second)
            throw CatalogError("catalog.entries[" + std::to_string(i) + "]: duplicate id '" + e.id + "'");
        c.entries.push_back(std::move(e));
    }
    return c;
}

// Syntax errors report the line and column of the offending byte.
inline Catalog parse_catalog(const std::string& text, const std::string& source = "<catalog>")
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n')
                ++line, col = 1;
            else
                ++col;
        }
        throw CatalogError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                           ": parse error: " + e.what());
    }
    try {
        return catalog_from_json(j);
    } catch (const CatalogError& e) {
        throw CatalogError(source + ": " + e.what());
    }
}

inline Catalog load_catalog(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CatalogError("cannot open catalog '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str(), path);
}

inline void save_catalog(const Catalog& c, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw CatalogError("cannot write catalog '" + path + "'");
    out << dump_catalog(c);
    if (!out)
        throw CatalogError("write failed for catalog '" + path + "'");
}

#ifndef LOGINT_DEFAULT_CATALOG
#define LOGINT_DEFAULT_CATALOG "data/catalog.json"
#endif

// The LOGINT_CATALOG environment variable overrides the compiled-in path.
inline std::string default_catalog_path()
{
    if (const char* env = std::getenv("LOGINT_CATALOG"); env && *env)
        return env;
    return LOGINT_DEFAULT_CATALOG;
}

inline const Catalog& bundled_catalog()
{
    static const Catalog c = load_catalog(default_catalog_path());
    return c;
}

// ------------------------------------------------------------ bind and list

// Defaults merged with overrides; overrides may only name the family's symbols
// and the merged set must satisfy every validity condition.
inline ParamSet bind(const CatalogEntry& e, const ParamSet& overrides)
{
    const Family& fam = e.family_ref();
    for (const auto& [k, v] : overrides.values())
        if (std::find(fam.symbols.begin(), fam.symbols.end(), k) == fam.symbols.end())
            throw CatalogError("entry '" + e.id + "': '" + k + "' is not a parameter of family '" + e.family + "'");
    ParamSet p = ParamSet::merge(e.params, overrides);
    std::string bad = violated_condition(e.validity(), p);
    if (!bad.empty())
        throw CatalogError("entry '" + e.id + "' rejects the parameters: violates " + bad);
    return p;
}

// Entries whose id, family or one of whose tags contains `filter`, sorted by id.
inline std::vector<const CatalogEntry*> list_entries(const Catalog& c, const std::string& filter = "")
{
    auto contains = [&](const std::string& s) { return s.find(filter) != std::string::npos; };
    std::vector<const CatalogEntry*> out;
    for (const auto& e : c.entries) {
        bool hit = filter.empty() || contains(e.id) || contains(e.family) ||
                   std::any_of(e.tags.begin(), e.tags.end(), contains);
        if (hit)
            out.push_back(&e);
    }
    std::sort(out.begin(), out.end(), [](const CatalogEntry* a, const CatalogEntry* b) { return a->id < b->id; });
    return out;
}

}  // namespace logint
