#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "doomlc/diagnostic.hpp"
#include "doomlc/ir.hpp"
#include "doomlc/model.hpp"
#include "doomlc/resolve.hpp"

namespace doomlc {

enum class SqlDialect { Ansi, MySql };

// ---------------------------------------------------------------------------
// Code side
// ---------------------------------------------------------------------------

/// One class per non-draft archetype. Properties and methods come from the
/// A, B and C lifelines; visibility carries over unchanged and the PK field
/// is flagged as the object identifier.
inline ClassIR to_class_ir(const Model& model) {
    ClassIR ir;
    for (const auto& a : model.archetypes) {
        if (a.is_draft()) continue;
        ClassDef def;
        def.name = class_name(a.name);
        def.archetype = a.name;
        def.kind = a.kind;
        for (const auto& f : a.fields) {
            if (!is_code_side(f.classifier.lifeline)) continue;
            def.properties.push_back({f.name, f.classifier.visibility, f.type.code, f.primary_key});
        }
        for (const auto& m : a.methods) {
            if (!is_code_side(m.classifier.lifeline)) continue;
            ClassMethod cm;
            cm.name = m.name;
            cm.visibility = m.classifier.visibility;
            for (const auto& p : m.params) cm.params.push_back({p.name, p.type.code});
            if (m.result) {
                cm.has_return = true;
                cm.return_code_type = m.result->code;
            }
            def.methods.push_back(std::move(cm));
        }
        ir.classes.push_back(std::move(def));
    }
    return ir;
}

// ---------------------------------------------------------------------------
// Database side
// ---------------------------------------------------------------------------

namespace detail {

inline const Archetype& end_archetype(const Model& model, const Relationship& rel,
                                      const RelationshipEnd& end) {
    const Archetype* a = model.find_archetype(end.archetype);
    if (a == nullptr) {
        throw Error(codes::kUnknownEnd,
                    "relationship " + rel.name + " names unknown archetype '" + end.archetype + "'", end.span);
    }
    return *a;
}

inline const Field& referenced_key(const Archetype& a, const Relationship& rel, const RelationshipEnd& end) {
    const Field* pk = a.primary_key();
    if (pk == nullptr || !is_database_side(pk->classifier.lifeline)) {
        throw Error(codes::kNoPrimaryKey,
                    "relationship " + rel.name + " needs a database primary key on " + a.name, end.span);
    }
    return *pk;
}

inline TableDef& holder_table(SchemaIR& schema, const Archetype& a, const Relationship& rel,
                              const RelationshipEnd& end) {
    TableDef* t = schema.find_table(table_name(a.name));
    if (t == nullptr) {
        throw Error(codes::kNoTable,
                    "relationship " + rel.name + " needs a table for " + a.name +
                        " but it has no database-side fields",
                    end.span);
    }
    return *t;
}

inline void add_attribute_columns(TableDef& table, const Relationship& rel) {
    for (const auto& f : rel.attributes) {
        if (!is_database_side(f.classifier.lifeline)) continue;
        if (table.find_column(f.name) != nullptr) {
            throw Error(codes::kDuplicate,
                        "attribute '" + f.name + "' of relationship " + rel.name +
                            " collides with an existing column of table " + table.name,
                        f.span);
        }
        table.columns.push_back({f.name, f.type.db, true});
    }
}

/// Adds (or reuses) the FK column in `holder` that references `key` of
/// `target_table`. A relational-stack entry that already declares the same
/// reference is kept; a plain column with the key's name is adopted;
/// otherwise the column is created, falling back to `<target>_<key>` on a
/// name clash. Returns the column name.
inline std::string attach_foreign_key(TableDef& holder, const std::string& target_table, const Field& key,
                                      bool unique, bool holder_total, const Relationship& rel) {
    auto try_name = [&](const std::string& name) -> bool {
        Column* col = holder.find_column(name);
        if (col == nullptr) {
            holder.columns.push_back({name, key.type.db, !holder_total});
            holder.foreign_keys.push_back({name, target_table, key.name, unique, rel.name});
            return true;
        }
        ForeignKey* fk = holder.find_foreign_key(name);
        if (fk != nullptr) {
            const bool same_reference = fk->target_table == target_table && fk->target_column == key.name;
            if (!fk->relationship.empty() || !same_reference) return false;
            fk->unique = fk->unique || unique;
            col->nullable = col->nullable && !holder_total;
            return true;
        }
        if (holder.primary_key && *holder.primary_key == name) return false;
        col->nullable = col->nullable && !holder_total;
        holder.foreign_keys.push_back({name, target_table, key.name, unique, rel.name});
        return true;
    };
    if (try_name(key.name)) return key.name;
    const std::string fallback = target_table + "_" + key.name;
    if (try_name(fallback)) return fallback;
    throw Error(codes::kDuplicate,
                "relationship " + rel.name + " cannot place a foreign key to " + target_table + " in table " +
                    holder.name + ": columns '" + key.name + "' and '" + fallback + "' are taken",
                rel.span);
}

inline void require_binary(const Relationship& rel) {
    if (rel.ends.size() != 2) {
        throw Error(codes::kBadShape,
                    "relationship " + rel.name + " with a '1' end must be binary", rel.span);
    }
}

}  // namespace detail

/// Junction table for an all-many relationship: one NOT NULL FK per end,
/// relationship attributes as columns, composite uniqueness over the FKs.
/// Total ends add a participation assertion on the junction.
inline TableDef convert_many_to_many(const Model& model, const Relationship& rel) {
    if (rel.ends.size() < 2 || rel.ends.size() > 3) {
        throw Error(codes::kBadShape, "relationship " + rel.name + " must have 2 or 3 ends", rel.span);
    }
    TableDef junction;
    junction.name = table_name(rel.name);

    struct EndKey {
        const Archetype* archetype;
        const Field* key;
        const RelationshipEnd* end;
    };
    std::vector<EndKey> keys;
    std::map<std::string, int> key_name_count;
    for (const auto& end : rel.ends) {
        if (!is_many(end.cardinality)) {
            throw Error(codes::kBadShape, "relationship " + rel.name + " is not all-many", end.span);
        }
        const Archetype& a = detail::end_archetype(model, rel, end);
        const Field& pk = detail::referenced_key(a, rel, end);
        keys.push_back({&a, &pk, &end});
        ++key_name_count[pk.name];
    }

    std::vector<std::string> fk_columns;
    for (const auto& k : keys) {
        const std::string target = table_name(k.archetype->name);
        std::string column = key_name_count[k.key->name] > 1 ? target + "_" + k.key->name : k.key->name;
        if (junction.find_column(column) != nullptr) {
            throw Error(codes::kDuplicate,
                        "junction table " + junction.name + " has two columns named '" + column + "'",
                        k.end->span);
        }
        junction.columns.push_back({column, k.key->type.db, false});
        junction.foreign_keys.push_back({column, target, k.key->name, false, rel.name});
        fk_columns.push_back(column);
        if (k.end->total) {
            junction.assertions.push_back({target, k.key->name, junction.name, column});
        }
    }
    junction.unique_constraints.push_back(fk_columns);
    detail::add_attribute_columns(junction, rel);
    return junction;
}

/// The many side's table gains the FK to the one side's key plus the
/// relationship attributes; the one side is unchanged. A total many side makes
/// the FK NOT NULL, a total one side adds a participation assertion.
inline void convert_one_to_many(SchemaIR& schema, const Model& model, const Relationship& rel) {
    detail::require_binary(rel);
    const auto one_it = std::find_if(rel.ends.begin(), rel.ends.end(),
                                     [](const RelationshipEnd& e) { return e.cardinality == Cardinality::One; });
    const auto many_it = std::find_if(rel.ends.begin(), rel.ends.end(),
                                      [](const RelationshipEnd& e) { return e.cardinality == Cardinality::N; });
    if (one_it == rel.ends.end() || many_it == rel.ends.end()) {
        throw Error(codes::kBadShape, "relationship " + rel.name + " is not one-to-many", rel.span);
    }
    const Archetype& one = detail::end_archetype(model, rel, *one_it);
    const Archetype& many = detail::end_archetype(model, rel, *many_it);
    const Field& key = detail::referenced_key(one, rel, *one_it);
    TableDef& holder = detail::holder_table(schema, many, rel, *many_it);

    const std::string target = table_name(one.name);
    const std::string column = detail::attach_foreign_key(holder, target, key, false, many_it->total, rel);
    detail::add_attribute_columns(holder, rel);
    if (one_it->total) holder.assertions.push_back({target, key.name, holder.name, column});
}

/// Index (0 or 1) of the end whose table holds the FK of a one-to-one
/// relationship: the total end when exactly one end is total, otherwise the
/// end with the lexicographically smaller archetype name.
inline std::size_t one_to_one_holder(const Relationship& rel) {
    const bool t0 = rel.ends[0].total;
    const bool t1 = rel.ends[1].total;
    if (t0 != t1) return t0 ? 0 : 1;
    return rel.ends[1].archetype < rel.ends[0].archetype ? 1 : 0;
}

/// The holder's table gains a UNIQUE FK to the other end's key plus the
/// relationship attributes; the other end is unchanged.
inline void convert_one_to_one(SchemaIR& schema, const Model& model, const Relationship& rel) {
    detail::require_binary(rel);
    if (rel.ends[0].cardinality != Cardinality::One || rel.ends[1].cardinality != Cardinality::One) {
        throw Error(codes::kBadShape, "relationship " + rel.name + " is not one-to-one", rel.span);
    }
    const std::size_t h = one_to_one_holder(rel);
    const RelationshipEnd& holder_end = rel.ends[h];
    const RelationshipEnd& other_end = rel.ends[1 - h];
    const Archetype& holder_arch = detail::end_archetype(model, rel, holder_end);
    const Archetype& other_arch = detail::end_archetype(model, rel, other_end);
    const Field& key = detail::referenced_key(other_arch, rel, other_end);
    TableDef& holder = detail::holder_table(schema, holder_arch, rel, holder_end);

    const std::string target = table_name(other_arch.name);
    const std::string column = detail::attach_foreign_key(holder, target, key, true, holder_end.total, rel);
    detail::add_attribute_columns(holder, rel);
    if (other_end.total) holder.assertions.push_back({target, key.name, holder.name, column});
}

inline bool is_integer_type(std::string_view db_type) {
    const std::string base = to_lower(db_type.substr(0, db_type.find('(')));
    return base == "int" || base == "integer" || base == "tinyint" || base == "smallint" ||
           base == "mediumint" || base == "bigint";
}

/// MySQL marks an integer primary key UNSIGNED AUTO_INCREMENT; ANSI leaves
/// the column alone. Non-integer keys are never auto-incremented.
inline TableDef apply_pk_profile(TableDef table, SqlDialect dialect) {
    if (dialect != SqlDialect::MySql || !table.primary_key) return table;
    Column* pk = table.find_column(*table.primary_key);
    if (pk != nullptr && pk->db_type && is_integer_type(*pk->db_type)) {
        pk->is_unsigned = true;
        pk->auto_increment = true;
    }
    return table;
}

/// Applies the key profile to every table, then marks integer FK columns
/// UNSIGNED wherever they reference an UNSIGNED key (MySQL requires matching
/// signedness between a foreign key and the column it references).
inline SchemaIR apply_pk_profile(SchemaIR schema, SqlDialect dialect) {
    for (auto& t : schema.tables) t = apply_pk_profile(std::move(t), dialect);
    if (dialect != SqlDialect::MySql) return schema;
    for (auto& t : schema.tables) {
        for (const auto& fk : t.foreign_keys) {
            const TableDef* target = schema.find_table(fk.target_table);
            const Column* ref = target ? target->find_column(fk.target_column) : nullptr;
            Column* col = t.find_column(fk.column);
            if (ref && col && ref->is_unsigned && col->db_type && is_integer_type(*col->db_type)) {
                col->is_unsigned = true;
            }
        }
    }
    return schema;
}

/// Tables, FKs, participation assertions and SQL function stubs for the
/// model. Table order is archetype declaration order followed by junction
/// tables in relationship declaration order. Relationships touching a draft
/// archetype are left out.
inline SchemaIR to_schema_ir(const Model& model) {
    SchemaIR schema;
    for (const auto& a : model.archetypes) {
        if (a.is_draft()) continue;
        if (a.has_database_fields()) {
            TableDef t;
            t.name = table_name(a.name);
            for (const auto& f : a.fields) {
                if (!is_database_side(f.classifier.lifeline)) continue;
                t.columns.push_back({f.name, f.type.db, !f.primary_key});
                if (f.primary_key) t.primary_key = f.name;
            }
            schema.tables.push_back(std::move(t));
        }
        for (const auto& m : a.methods) {
            if (!is_database_side(m.classifier.lifeline)) continue;
            SqlFunctionStub fn;
            fn.name = table_name(a.name) + "_" + m.name;
            for (const auto& p : m.params) fn.params.push_back({p.name, p.type.db});
            if (m.result) {
                fn.has_return = true;
                fn.return_db_type = m.result->db;
            }
            schema.functions.push_back(std::move(fn));
        }
    }

    // Explicit relational-stack entries.
    for (const auto& a : model.archetypes) {
        if (a.is_draft()) continue;
        for (const auto& e : a.relations) {
            const Field* local = a.find_field(e.local_field);
            if (local == nullptr || !is_database_side(local->classifier.lifeline)) {
                throw Error(codes::kBadForeignKey,
                            "'" + e.local_field + "' is not a database-side field of " + a.name, e.span);
            }
            const ResolvedReference ref = resolve_reference(model, e);
            if (ref.archetype->is_draft() || !is_database_side(ref.field->classifier.lifeline)) {
                throw Error(codes::kBadForeignKey,
                            "'" + e.local_field + "' references " + ref.archetype->name + '.' + ref.field->name +
                                ", which is not a database column",
                            e.span);
            }
            TableDef& holder = *schema.find_table(table_name(a.name));
            if (holder.find_foreign_key(e.local_field) != nullptr) {
                throw Error(codes::kDuplicate, "'" + e.local_field + "' already has a foreign key", e.span);
            }
            Column* col = holder.find_column(e.local_field);
            col->nullable = !local->primary_key && e.participation == Participation::Open;
            holder.foreign_keys.push_back({e.local_field, table_name(ref.archetype->name), ref.field->name, false, {}});
        }
    }

    for (const auto& rel : model.relationships) {
        bool touches_draft = false;
        for (const auto& end : rel.ends) {
            touches_draft = touches_draft || detail::end_archetype(model, rel, end).is_draft();
        }
        if (touches_draft) continue;

        const bool all_many = std::all_of(rel.ends.begin(), rel.ends.end(),
                                          [](const RelationshipEnd& e) { return is_many(e.cardinality); });
        const bool has_m = std::any_of(rel.ends.begin(), rel.ends.end(),
                                       [](const RelationshipEnd& e) { return e.cardinality == Cardinality::M; });
        if (rel.ends.size() == 2 && has_m) {
            throw Error(codes::kTernaryCardinality,
                        "cardinality 'm' is reserved for ternary relationships (" + rel.name + ")", rel.span);
        }
        if (all_many) {
            TableDef junction = convert_many_to_many(model, rel);
            if (schema.find_table(junction.name) != nullptr) {
                throw Error(codes::kDuplicate,
                            "junction table " + junction.name + " collides with an existing table", rel.span);
            }
            schema.tables.push_back(std::move(junction));
        } else if (rel.ends.size() != 2) {
            throw Error(codes::kBadShape,
                        "ternary relationship " + rel.name + " must be all-many; a '1' end is unsupported",
                        rel.span);
        } else if (rel.ends[0].cardinality == Cardinality::One && rel.ends[1].cardinality == Cardinality::One) {
            convert_one_to_one(schema, model, rel);
        } else {
            convert_one_to_many(schema, model, rel);
        }
    }
    return schema;
}

// ---------------------------------------------------------------------------
// API side
// ---------------------------------------------------------------------------

/// One REST resource per non-draft archetype with at least one A or B member.
/// Every resource gets list/get/create/update/delete; A-lifeline methods add
/// `POST /<resource>/{id}/<method>`.
inline ApiIR to_api_ir(const Model& model) {
    ApiIR ir;
    for (const auto& a : model.archetypes) {
        if (a.is_draft()) continue;
        const bool visible =
            std::any_of(a.fields.begin(), a.fields.end(),
                        [](const Field& f) { return is_api_side(f.classifier.lifeline); }) ||
            std::any_of(a.methods.begin(), a.methods.end(),
                        [](const Method& m) { return is_api_side(m.classifier.lifeline); });
        if (!visible) continue;

        ApiResource r;
        r.resource_name = resource_name(a.name);
        r.schema_name = class_name(a.name);
        for (const auto& f : a.fields) {
            if (is_api_side(f.classifier.lifeline)) r.properties.push_back({f.name, f.type.code});
        }
        const std::string collection = "/" + r.resource_name;
        const std::string item = collection + "/{id}";
        r.endpoints = {
            {"GET", collection, "list" + r.schema_name},
            {"POST", collection, "create" + r.schema_name},
            {"GET", item, "get" + r.schema_name},
            {"PUT", item, "update" + r.schema_name},
            {"DELETE", item, "delete" + r.schema_name},
        };
        for (const auto& m : a.methods) {
            if (m.classifier.lifeline != Lifeline::Api) continue;
            ApiEndpoint ep{"POST", item + "/" + m.name, m.name + r.schema_name};
            const bool seen = std::any_of(r.endpoints.begin(), r.endpoints.end(), [&](const ApiEndpoint& x) {
                return x.http_method == ep.http_method && x.path_template == ep.path_template;
            });
            if (!seen) r.endpoints.push_back(std::move(ep));
        }
        ir.resources.push_back(std::move(r));
    }
    return ir;
}

}  // namespace doomlc
