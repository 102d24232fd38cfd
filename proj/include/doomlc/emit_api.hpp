#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doomlc/emit.hpp"
#include "doomlc/ir.hpp"

namespace doomlc {

struct JsonType {
    std::string type;
    std::optional<std::string> format;
};

/// Maps a code type to a JSON-schema type. Parameters such as `(10,2)` are
/// ignored; unknown names yield nullopt.
inline std::optional<JsonType> json_type_for(std::string_view code_type) {
    const std::string base = to_lower(code_type.substr(0, code_type.find('(')));
    if (base == "string" || base == "str" || base == "text" || base == "char") return JsonType{"string", {}};
    if (base == "int" || base == "integer" || base == "short") return JsonType{"integer", {}};
    if (base == "long") return JsonType{"integer", "int64"};
    if (base == "bool" || base == "boolean") return JsonType{"boolean", {}};
    if (base == "decimal" || base == "float" || base == "double" || base == "number") return JsonType{"number", {}};
    if (base == "date") return JsonType{"string", "date"};
    if (base == "datetime" || base == "timestamp") return JsonType{"string", "date-time"};
    return std::nullopt;
}

namespace detail {

inline std::string yaml_quote(std::string_view s) { return "'" + std::string(s) + "'"; }

inline void yaml_schema_ref(std::string& y, int indent, const std::string& schema, bool array) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (array) {
        y += pad + "type: array\n";
        y += pad + "items:\n";
        y += pad + "  $ref: '#/components/schemas/" + schema + "'\n";
    } else {
        y += pad + "$ref: '#/components/schemas/" + schema + "'\n";
    }
}

inline void yaml_operation(std::string& y, const ApiResource& r, const ApiEndpoint& ep) {
    const std::string& s = r.schema_name;
    const bool collection = ep.path_template == "/" + r.resource_name;
    const bool is_action = !collection && ep.path_template != "/" + r.resource_name + "/{id}";
    y += "    " + to_lower(ep.http_method) + ":\n";
    y += "      operationId: " + ep.operation_id + '\n';
    if (!is_action && (ep.http_method == "POST" || ep.http_method == "PUT")) {
        y += "      requestBody:\n";
        y += "        required: true\n";
        y += "        content:\n";
        y += "          application/json:\n";
        y += "            schema:\n";
        yaml_schema_ref(y, 14, s, false);
    }
    y += "      responses:\n";
    if (ep.http_method == "DELETE") {
        y += "        '204':\n";
        y += "          description: Deleted\n";
        return;
    }
    const std::string code = ep.http_method == "POST" && collection ? "'201'" : "'200'";
    y += "        " + code + ":\n";
    y += "          description: " + std::string(code == "'201'" ? "Created" : "OK") + '\n';
    if (!is_action) {
        y += "          content:\n";
        y += "            application/json:\n";
        y += "              schema:\n";
        yaml_schema_ref(y, 16, s, collection && ep.http_method == "GET");
    }
}

}  // namespace detail

/// OpenAPI 3 document `api/openapi.yaml`: one schema per resource, one path
/// entry per distinct path template. Operations within a path follow the
/// endpoint order of the IR.
inline EmittedFile emit_api(const ApiIR& api, const EmitConfig& /*config*/) {
    std::vector<std::string> unmappable;
    for (const auto& r : api.resources) {
        for (const auto& p : r.properties) {
            if (!p.code_type) {
                unmappable.push_back(r.schema_name + '.' + p.name + " (no code type)");
            } else if (!json_type_for(*p.code_type)) {
                unmappable.push_back(r.schema_name + '.' + p.name + " (" + *p.code_type + ")");
            }
        }
    }
    if (!unmappable.empty()) {
        std::string msg = "cannot map code type to a JSON type for:";
        for (const auto& u : unmappable) msg += ' ' + u;
        throw Error(codes::kUnmappableType, msg);
    }

    std::string y;
    y += "openapi: 3.0.3\n";
    y += "info:\n";
    y += "  title: doomlc generated API\n";
    y += "  version: 1.0.0\n";

    y += "paths:";
    if (api.resources.empty()) y += " {}";
    y += '\n';
    for (const auto& r : api.resources) {
        std::vector<std::string> paths;
        for (const auto& ep : r.endpoints) {
            if (std::find(paths.begin(), paths.end(), ep.path_template) == paths.end()) {
                paths.push_back(ep.path_template);
            }
        }
        for (const auto& path : paths) {
            y += "  " + detail::yaml_quote(path) + ":\n";
            if (path.find("{id}") != std::string::npos) {
                y += "    parameters:\n";
                y += "      - name: id\n";
                y += "        in: path\n";
                y += "        required: true\n";
                y += "        schema:\n";
                y += "          type: string\n";
            }
            for (const auto& ep : r.endpoints) {
                if (ep.path_template == path) detail::yaml_operation(y, r, ep);
            }
        }
    }

    y += "components:\n";
    y += "  schemas:";
    if (api.resources.empty()) y += " {}";
    y += '\n';
    for (const auto& r : api.resources) {
        y += "    " + r.schema_name + ":\n";
        y += "      type: object\n";
        y += "      properties:";
        if (r.properties.empty()) y += " {}";
        y += '\n';
        for (const auto& p : r.properties) {
            const JsonType jt = *json_type_for(*p.code_type);
            y += "        " + p.name + ":\n";
            y += "          type: " + jt.type + '\n';
            if (jt.format) y += "          format: " + *jt.format + '\n';
        }
    }
    return EmittedFile("api/openapi.yaml", std::move(y));
}

}  // namespace doomlc
