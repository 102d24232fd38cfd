#pragma once

#include <set>
#include <string>
#include <vector>

#include "doomlc/emit.hpp"
#include "doomlc/ir.hpp"

namespace doomlc {

namespace detail {

class SqlWriter {
public:
    explicit SqlWriter(SqlDialect dialect) : dialect_(dialect) {}

    std::string quote(std::string_view id) const {
        if (dialect_ == SqlDialect::MySql) return "`" + std::string(id) + "`";
        return std::string(id);
    }

    std::string header(std::string_view what) const {
        return "-- " + std::string(what) + " generated by doomlc (dialect: " + std::string(to_string(dialect_)) +
               "). Do not edit.\n";
    }

    std::string column(const TableDef& t, const Column& c) const {
        if (!c.db_type) {
            throw Error(codes::kMissingDbType, "column " + t.name + '.' + c.name + " has no database type");
        }
        std::string s = "  " + quote(c.name) + ' ' + *c.db_type;
        if (c.is_unsigned) s += " UNSIGNED";
        const bool is_pk = t.primary_key && *t.primary_key == c.name;
        if (!c.nullable && !is_pk) s += " NOT NULL";
        if (c.auto_increment) s += " AUTO_INCREMENT";
        if (is_pk) s += " PRIMARY KEY";
        return s;
    }

    std::string foreign_key_clause(const TableDef& t, const ForeignKey& fk) const {
        return "CONSTRAINT " + quote("fk_" + t.name + "_" + fk.column) + " FOREIGN KEY (" + quote(fk.column) +
               ") REFERENCES " + quote(fk.target_table) + " (" + quote(fk.target_column) + ")";
    }

    std::string column_list(const std::vector<std::string>& cols) const {
        std::string s;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) s += ", ";
            s += quote(cols[i]);
        }
        return s;
    }

    std::string unique_clause(const TableDef& t, const std::vector<std::string>& cols) const {
        std::string name = "uq_" + t.name;
        for (const auto& c : cols) name += "_" + c;
        return "CONSTRAINT " + quote(name) + " UNIQUE (" + column_list(cols) + ")";
    }

    std::string type_or_placeholder(const std::optional<std::string>& t) const { return t.value_or("?"); }

private:
    SqlDialect dialect_;
};

/// Creation order: repeatedly the first table (in IR order) whose referenced
/// tables already exist; on a cycle, the first remaining table.
inline std::vector<std::size_t> creation_order(const SchemaIR& schema) {
    const std::size_t n = schema.tables.size();
    std::vector<bool> done(n, false);
    std::set<std::string> created;
    std::vector<std::size_t> order;
    while (order.size() < n) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n && pick == n; ++i) {
            if (done[i]) continue;
            const auto& t = schema.tables[i];
            const bool ready = std::all_of(t.foreign_keys.begin(), t.foreign_keys.end(), [&](const ForeignKey& fk) {
                return fk.target_table == t.name || created.count(fk.target_table) != 0;
            });
            if (ready) pick = i;
        }
        if (pick == n) {
            for (std::size_t i = 0; i < n; ++i) {
                if (!done[i]) {
                    pick = i;
                    break;
                }
            }
        }
        done[pick] = true;
        created.insert(schema.tables[pick].name);
        order.push_back(pick);
    }
    return order;
}

}  // namespace detail

/// Renders `sql/schema.sql` (and `sql/assertions.sql` when assertion queries
/// are enabled). Key profiles for the configured dialect are applied here.
/// FKs whose target table is created later are emitted as trailing
/// ALTER TABLE statements.
inline std::vector<EmittedFile> emit_sql(const SchemaIR& input, const EmitConfig& config) {
    const SchemaIR schema = apply_pk_profile(input, config.sql_dialect);
    const detail::SqlWriter w(config.sql_dialect);

    for (const auto& t : schema.tables) {
        for (const auto& fk : t.foreign_keys) {
            const TableDef* target = schema.find_table(fk.target_table);
            if (target == nullptr || target->find_column(fk.target_column) == nullptr) {
                throw Error(codes::kUnresolved, "foreign key " + t.name + '.' + fk.column + " references missing " +
                                                    fk.target_table + '.' + fk.target_column);
            }
        }
    }

    std::string sql = w.header("Schema");
    std::set<std::string> created;
    std::vector<std::string> deferred;
    for (const std::size_t idx : detail::creation_order(schema)) {
        const TableDef& t = schema.tables[idx];
        std::vector<std::string> lines;
        for (const auto& c : t.columns) lines.push_back(w.column(t, c));
        for (const auto& fk : t.foreign_keys) {
            if (fk.unique) lines.push_back("  " + w.unique_clause(t, {fk.column}));
        }
        for (const auto& cols : t.unique_constraints) lines.push_back("  " + w.unique_clause(t, cols));
        for (const auto& fk : t.foreign_keys) {
            if (fk.target_table == t.name || created.count(fk.target_table) != 0) {
                lines.push_back("  " + w.foreign_key_clause(t, fk));
            } else {
                deferred.push_back("ALTER TABLE " + w.quote(t.name) + " ADD " + w.foreign_key_clause(t, fk) + ";\n");
            }
        }
        sql += "\nCREATE TABLE " + w.quote(t.name) + " (\n";
        for (std::size_t i = 0; i < lines.size(); ++i) {
            sql += lines[i];
            sql += i + 1 < lines.size() ? ",\n" : "\n";
        }
        sql += ");\n";
        created.insert(t.name);
    }
    if (!deferred.empty()) {
        sql += '\n';
        for (const auto& d : deferred) sql += d;
    }

    if (!schema.functions.empty()) {
        sql += "\n-- Database-side methods. Bodies depend on the target engine:\n";
        for (const auto& fn : schema.functions) {
            std::string params;
            for (std::size_t i = 0; i < fn.params.size(); ++i) {
                if (i) params += ", ";
                params += fn.params[i].name + ' ' + w.type_or_placeholder(fn.params[i].db_type);
            }
            if (fn.has_return) {
                sql += "-- CREATE FUNCTION " + w.quote(fn.name) + "(" + params + ") RETURNS " +
                       w.type_or_placeholder(fn.return_db_type) + " ...;\n";
            } else {
                sql += "-- CREATE PROCEDURE " + w.quote(fn.name) + "(" + params + ") ...;\n";
            }
        }
    }

    std::vector<EmittedFile> files;
    files.emplace_back("sql/schema.sql", std::move(sql));

    if (config.emit_assert_queries) {
        std::string q = w.header("Total-participation checks");
        q += "-- Each query returns the keys that violate the check; an empty result means it holds.\n";
        for (const auto& t : schema.tables) {
            for (const auto& a : t.assertions) {
                const std::string key_alias(1, a.table.front());
                std::string ref_alias(1, a.referencing_table.front());
                if (ref_alias == key_alias) ref_alias += '2';
                q += "\n-- every " + a.table + '.' + a.key_column + " appears in " + a.referencing_table + '.' +
                     a.referencing_column + "\n";
                q += "SELECT " + key_alias + '.' + w.quote(a.key_column) + " FROM " + w.quote(a.table) + ' ' +
                     key_alias + " LEFT JOIN " + w.quote(a.referencing_table) + ' ' + ref_alias + " ON " +
                     ref_alias + '.' + w.quote(a.referencing_column) + " = " + key_alias + '.' +
                     w.quote(a.key_column) + " WHERE " + ref_alias + '.' + w.quote(a.referencing_column) +
                     " IS NULL;\n";
            }
        }
        files.emplace_back("sql/assertions.sql", std::move(q));
    }
    return files;
}

}  // namespace doomlc
