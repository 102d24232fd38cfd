#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "doomlc/diagnostic.hpp"
#include "doomlc/ir.hpp"
#include "doomlc/model.hpp"
#include "doomlc/printer.hpp"

// JSON views of the model, the three IRs and diagnostics, for `dump-ir` and
// the JSON-lines diagnostic report. Key order is fixed so output is stable.

namespace doomlc {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json opt(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

inline Json dual_type_json(const DualType& t) { return Json{{"code", opt(t.code)}, {"db", opt(t.db)}}; }

inline Json classifier_json(const Classifier& c) {
    return Json{{"lifeline", std::string(1, lifeline_letter(c.lifeline))},
                {"visibility", std::string(to_string(c.visibility))}};
}

inline Json field_json(const Field& f) {
    return Json{{"name", f.name},
                {"classifier", classifier_json(f.classifier)},
                {"type", dual_type_json(f.type)},
                {"primaryKey", f.primary_key}};
}

}  // namespace detail

inline Json to_json(const Model& m) {
    Json archetypes = Json::array();
    for (const auto& a : m.archetypes) {
        Json fields = Json::array();
        for (const auto& f : a.fields) fields.push_back(detail::field_json(f));
        Json methods = Json::array();
        for (const auto& mt : a.methods) {
            Json params = Json::array();
            for (const auto& p : mt.params) params.push_back({{"name", p.name}, {"type", detail::dual_type_json(p.type)}});
            methods.push_back({{"name", mt.name},
                               {"classifier", detail::classifier_json(mt.classifier)},
                               {"params", params},
                               {"result", mt.result ? detail::dual_type_json(*mt.result) : Json(nullptr)}});
        }
        Json relations = Json::array();
        for (const auto& e : a.relations) {
            relations.push_back({{"classifier", detail::classifier_json(e.classifier)},
                                 {"localField", e.local_field},
                                 {"targetKind", std::string(1, kind_letter(e.target.kind))},
                                 {"targetArchetype", e.target.name},
                                 {"targetField", e.target_field},
                                 {"participation", e.participation == Participation::Filled ? "filled" : "open"}});
        }
        archetypes.push_back({{"kind", std::string(1, kind_letter(a.kind))},
                              {"name", a.name},
                              {"fields", fields},
                              {"methods", methods},
                              {"relations", relations}});
    }
    Json relationships = Json::array();
    for (const auto& r : m.relationships) {
        Json ends = Json::array();
        for (const auto& e : r.ends) {
            ends.push_back({{"archetype", e.archetype},
                            {"cardinality", std::string(1, cardinality_letter(e.cardinality))},
                            {"total", e.total}});
        }
        Json attrs = Json::array();
        for (const auto& f : r.attributes) attrs.push_back(detail::field_json(f));
        relationships.push_back({{"name", r.name}, {"ends", ends}, {"attributes", attrs}});
    }
    return Json{{"archetypes", archetypes}, {"relationships", relationships}};
}

inline Json to_json(const ClassIR& ir) {
    Json classes = Json::array();
    for (const auto& c : ir.classes) {
        Json props = Json::array();
        for (const auto& p : c.properties) {
            props.push_back({{"name", p.name},
                             {"visibility", std::string(to_string(p.visibility))},
                             {"codeType", detail::opt(p.code_type)},
                             {"identifier", p.identifier}});
        }
        Json methods = Json::array();
        for (const auto& m : c.methods) {
            Json params = Json::array();
            for (const auto& p : m.params) params.push_back({{"name", p.name}, {"codeType", detail::opt(p.code_type)}});
            methods.push_back({{"name", m.name},
                               {"visibility", std::string(to_string(m.visibility))},
                               {"params", params},
                               {"returnCodeType", m.has_return ? detail::opt(m.return_code_type) : Json(nullptr)}});
        }
        classes.push_back({{"name", c.name}, {"archetype", c.archetype}, {"properties", props}, {"methods", methods}});
    }
    return Json{{"classes", classes}};
}

inline Json to_json(const SchemaIR& ir) {
    Json tables = Json::array();
    for (const auto& t : ir.tables) {
        Json columns = Json::array();
        for (const auto& c : t.columns) {
            columns.push_back({{"name", c.name},
                               {"dbType", detail::opt(c.db_type)},
                               {"nullable", c.nullable},
                               {"unsigned", c.is_unsigned},
                               {"autoIncrement", c.auto_increment}});
        }
        Json fks = Json::array();
        for (const auto& fk : t.foreign_keys) {
            fks.push_back({{"column", fk.column},
                           {"targetTable", fk.target_table},
                           {"targetColumn", fk.target_column},
                           {"unique", fk.unique},
                           {"relationship", fk.relationship.empty() ? Json(nullptr) : Json(fk.relationship)}});
        }
        Json asserts = Json::array();
        for (const auto& a : t.assertions) {
            asserts.push_back({{"table", a.table},
                               {"keyColumn", a.key_column},
                               {"referencingTable", a.referencing_table},
                               {"referencingColumn", a.referencing_column}});
        }
        tables.push_back({{"name", t.name},
                          {"columns", columns},
                          {"primaryKey", detail::opt(t.primary_key)},
                          {"foreignKeys", fks},
                          {"uniqueConstraints", t.unique_constraints},
                          {"assertions", asserts}});
    }
    Json functions = Json::array();
    for (const auto& f : ir.functions) {
        Json params = Json::array();
        for (const auto& p : f.params) params.push_back({{"name", p.name}, {"dbType", detail::opt(p.db_type)}});
        functions.push_back({{"name", f.name},
                             {"params", params},
                             {"returnDbType", f.has_return ? detail::opt(f.return_db_type) : Json(nullptr)}});
    }
    return Json{{"tables", tables}, {"functions", functions}};
}

inline Json to_json(const ApiIR& ir) {
    Json resources = Json::array();
    for (const auto& r : ir.resources) {
        Json props = Json::array();
        for (const auto& p : r.properties) props.push_back({{"name", p.name}, {"codeType", detail::opt(p.code_type)}});
        Json eps = Json::array();
        for (const auto& e : r.endpoints) {
            eps.push_back({{"method", e.http_method}, {"path", e.path_template}, {"operationId", e.operation_id}});
        }
        resources.push_back(
            {{"resource", r.resource_name}, {"schema", r.schema_name}, {"properties", props}, {"endpoints", eps}});
    }
    return Json{{"resources", resources}};
}

/// One JSON-lines record.
inline Json to_json(const Diagnostic& d, const std::string& file_name) {
    return Json{{"severity", std::string(to_string(d.severity))},
                {"code", d.code},
                {"file", file_name},
                {"line", d.span.line},
                {"column", d.span.column},
                {"length", d.span.length},
                {"message", d.message}};
}

}  // namespace doomlc
