#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "doomlc/model.hpp"

namespace doomlc {

// ---------------------------------------------------------------------------
// Code side
// ---------------------------------------------------------------------------

struct ClassProperty {
    std::string name;
    Visibility visibility = Visibility::Private;
    std::optional<std::string> code_type;
    bool identifier = false;

    friend bool operator==(const ClassProperty&, const ClassProperty&) = default;
};

struct ClassParameter {
    std::string name;
    std::optional<std::string> code_type;

    friend bool operator==(const ClassParameter&, const ClassParameter&) = default;
};

struct ClassMethod {
    std::string name;
    Visibility visibility = Visibility::Public;
    std::vector<ClassParameter> params;
    bool has_return = false;
    std::optional<std::string> return_code_type;

    friend bool operator==(const ClassMethod&, const ClassMethod&) = default;
};

struct ClassDef {
    std::string name;
    std::string archetype;
    ArchetypeKind kind = ArchetypeKind::Both;
    std::vector<ClassProperty> properties;
    std::vector<ClassMethod> methods;

    friend bool operator==(const ClassDef&, const ClassDef&) = default;
};

struct ClassIR {
    std::vector<ClassDef> classes;

    friend bool operator==(const ClassIR&, const ClassIR&) = default;
};

// ---------------------------------------------------------------------------
// Database side
// ---------------------------------------------------------------------------

struct Column {
    std::string name;
    std::optional<std::string> db_type;
    bool nullable = true;
    bool is_unsigned = false;
    bool auto_increment = false;

    friend bool operator==(const Column&, const Column&) = default;
};

struct ForeignKey {
    std::string column;
    std::string target_table;
    std::string target_column;
    bool unique = false;
    /// Relationship that generated the key; empty for relational-stack entries.
    std::string relationship;

    friend bool operator==(const ForeignKey&, const ForeignKey&) = default;
};

/// "Every value of table.key_column appears at least once in
/// referencing_table.referencing_column." Not expressible as portable DDL;
/// rendered as a query that returns the violating keys.
struct TotalParticipationAssertion {
    std::string table;
    std::string key_column;
    std::string referencing_table;
    std::string referencing_column;

    friend bool operator==(const TotalParticipationAssertion&,
                           const TotalParticipationAssertion&) = default;
};

struct TableDef {
    std::string name;
    std::vector<Column> columns;
    std::optional<std::string> primary_key;
    std::vector<ForeignKey> foreign_keys;
    /// Multi-column UNIQUE constraints (junction tables).
    std::vector<std::vector<std::string>> unique_constraints;
    /// Assertions about foreign keys held by this table.
    std::vector<TotalParticipationAssertion> assertions;

    Column* find_column(std::string_view n) {
        auto it = std::find_if(columns.begin(), columns.end(), [&](const Column& c) { return c.name == n; });
        return it == columns.end() ? nullptr : &*it;
    }
    const Column* find_column(std::string_view n) const {
        return const_cast<TableDef*>(this)->find_column(n);
    }
    ForeignKey* find_foreign_key(std::string_view column) {
        auto it = std::find_if(foreign_keys.begin(), foreign_keys.end(),
                               [&](const ForeignKey& fk) { return fk.column == column; });
        return it == foreign_keys.end() ? nullptr : &*it;
    }
    const Column* primary_key_column() const {
        return primary_key ? find_column(*primary_key) : nullptr;
    }

    friend bool operator==(const TableDef&, const TableDef&) = default;
};

struct SqlParameter {
    std::string name;
    std::optional<std::string> db_type;

    friend bool operator==(const SqlParameter&, const SqlParameter&) = default;
};

/// Database-side method (lifeline B or D): emitted as a commented skeleton.
struct SqlFunctionStub {
    std::string name;
    std::vector<SqlParameter> params;
    bool has_return = false;
    std::optional<std::string> return_db_type;

    friend bool operator==(const SqlFunctionStub&, const SqlFunctionStub&) = default;
};

struct SchemaIR {
    std::vector<TableDef> tables;
    std::vector<SqlFunctionStub> functions;

    TableDef* find_table(std::string_view n) {
        auto it = std::find_if(tables.begin(), tables.end(), [&](const TableDef& t) { return t.name == n; });
        return it == tables.end() ? nullptr : &*it;
    }
    const TableDef* find_table(std::string_view n) const {
        return const_cast<SchemaIR*>(this)->find_table(n);
    }

    friend bool operator==(const SchemaIR&, const SchemaIR&) = default;
};

// ---------------------------------------------------------------------------
// API side
// ---------------------------------------------------------------------------

struct ApiProperty {
    std::string name;
    std::optional<std::string> code_type;

    friend bool operator==(const ApiProperty&, const ApiProperty&) = default;
};

struct ApiEndpoint {
    std::string http_method;  // GET, POST, PUT, DELETE
    std::string path_template;
    std::string operation_id;

    friend bool operator==(const ApiEndpoint&, const ApiEndpoint&) = default;
};

struct ApiResource {
    std::string resource_name;  // lowercased plural, e.g. "clients"
    std::string schema_name;    // class-style name, e.g. "Client"
    std::vector<ApiProperty> properties;
    std::vector<ApiEndpoint> endpoints;

    friend bool operator==(const ApiResource&, const ApiResource&) = default;
};

struct ApiIR {
    std::vector<ApiResource> resources;

    friend bool operator==(const ApiIR&, const ApiIR&) = default;
};

// ---------------------------------------------------------------------------
// Naming
// ---------------------------------------------------------------------------

inline std::string table_name(std::string_view archetype_or_relationship) {
    return to_lower(archetype_or_relationship);
}

/// CLIENT -> Client, ORDER_LINE -> OrderLine. Names that already contain a
/// lowercase letter are taken as written.
inline std::string class_name(std::string_view archetype) {
    const bool has_lower = std::any_of(archetype.begin(), archetype.end(),
                                       [](unsigned char c) { return std::islower(c) != 0; });
    if (has_lower) return std::string(archetype);
    std::string out;
    bool start = true;
    for (const char c : archetype) {
        if (c == '_') {
            start = true;
            continue;
        }
        const auto uc = static_cast<unsigned char>(c);
        out += static_cast<char>(start ? std::toupper(uc) : std::tolower(uc));
        start = false;
    }
    return out.empty() ? std::string(archetype) : out;
}

inline std::string pluralize(std::string_view word) {
    std::string w(word);
    auto ends_with = [&](std::string_view s) { return w.size() >= s.size() && w.ends_with(s); };
    auto is_vowel = [](char c) { return std::string_view("aeiou").find(c) != std::string_view::npos; };
    if (ends_with("s") || ends_with("x") || ends_with("z") || ends_with("ch") || ends_with("sh")) {
        return w + "es";
    }
    if (w.size() >= 2 && w.back() == 'y' && !is_vowel(w[w.size() - 2])) {
        return w.substr(0, w.size() - 1) + "ies";
    }
    return w + "s";
}

inline std::string resource_name(std::string_view archetype) { return pluralize(to_lower(archetype)); }

}  // namespace doomlc
