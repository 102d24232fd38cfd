#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doomlc/converter.hpp"
#include "doomlc/diagnostic.hpp"
#include "doomlc/ir.hpp"
#include "doomlc/model.hpp"
#include "doomlc/resolve.hpp"

namespace doomlc {

struct ValidationReport {
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
    std::size_t error_count() const { return count(Severity::Error); }
    std::size_t warning_count() const { return count(Severity::Warning); }

private:
    std::size_t count(Severity s) const {
        return static_cast<std::size_t>(std::count_if(diagnostics.begin(), diagnostics.end(),
                                                      [s](const Diagnostic& d) { return d.severity == s; }));
    }
};

namespace detail {

class Validator {
public:
    explicit Validator(const Model& model) : model_(model) {}

    ValidationReport run() {
        check_archetype_names();
        for (const auto& a : model_.archetypes) check_archetype(a);
        check_relationship_names();
        for (const auto& r : model_.relationships) check_relationship(r);

        // Whatever shape problem the targeted checks above did not name, the
        // converter will: a model is only accepted if it converts.
        if (!has_errors(diags_)) {
            try {
                (void)to_schema_ir(model_);
            } catch (const Error& e) {
                diags_.push_back(e.diagnostic());
            }
        }
        sort_diagnostics(diags_);
        return ValidationReport{std::move(diags_)};
    }

private:
    const Model& model_;
    std::vector<Diagnostic> diags_;

    void error(std::string_view code, std::string msg, SourceSpan span) {
        diags_.push_back(make_error(code, std::move(msg), span));
    }
    void warning(std::string_view code, std::string msg, SourceSpan span) {
        diags_.push_back(make_warning(code, std::move(msg), span));
    }

    void check_archetype_names() {
        std::map<std::string, const Archetype*> by_name;
        std::map<std::string, const Archetype*> by_class;
        for (const auto& a : model_.archetypes) {
            if (auto [it, fresh] = by_name.emplace(to_lower(a.name), &a); !fresh) {
                error(codes::kDuplicate, "duplicate archetype name '" + a.name + "'", a.span);
                continue;
            }
            if (a.is_draft()) continue;
            if (auto [it, fresh] = by_class.emplace(class_name(a.name), &a); !fresh) {
                error(codes::kDuplicate,
                      "archetypes " + it->second->name + " and " + a.name + " both map to class " + it->first,
                      a.span);
            }
        }
    }

    // Layers an archetype kind or member lifeline stands for; B and x span all.
    static unsigned kind_layers(ArchetypeKind k) {
        switch (k) {
            case ArchetypeKind::Api: return 1u;
            case ArchetypeKind::Code: return 2u;
            case ArchetypeKind::Database: return 4u;
            default: return 7u;
        }
    }
    static unsigned lifeline_layers(Lifeline l) {
        switch (l) {
            case Lifeline::Api: return 1u;
            case Lifeline::Code: return 2u;
            case Lifeline::Database: return 4u;
            default: return 7u;
        }
    }

    void check_kind(const Archetype& a, Lifeline l, const std::string& member, SourceSpan span) {
        if ((kind_layers(a.kind) & lifeline_layers(l)) == 0) {
            warning(codes::kKindMismatch,
                    std::string(1, lifeline_letter(l)) + "-lifeline member '" + member + "' inside " +
                        kind_keyword(a.kind) + ' ' + a.name,
                    span);
        }
    }

    void check_field_types(const Field& f, const std::string& owner) {
        const Lifeline l = f.classifier.lifeline;
        if (is_database_side(l) && !f.type.db) {
            warning(codes::kMissingDbType,
                    "database-side field " + owner + '.' + f.name + " has no database type", f.span);
        }
        if (is_code_side(l) && !f.type.code) {
            warning(codes::kMissingCodeType, "code-side field " + owner + '.' + f.name + " has no code type",
                    f.span);
        }
    }

    void check_archetype(const Archetype& a) {
        std::set<std::string> fields;
        bool seen_pk = false;
        for (const auto& f : a.fields) {
            if (!fields.insert(f.name).second) {
                error(codes::kDuplicate, "duplicate field '" + f.name + "' in archetype " + a.name, f.span);
            }
            if (f.primary_key) {
                if (seen_pk) {
                    error(codes::kMultiplePrimaryKeys,
                          "archetype " + a.name + " has more than one PK field ('" + f.name + "')", f.span);
                }
                seen_pk = true;
                if (!is_database_side(f.classifier.lifeline)) {
                    error(codes::kKeyLifeline,
                          "PK field " + a.name + '.' + f.name + " must have lifeline B or D", f.span);
                }
            }
            check_field_types(f, a.name);
            check_kind(a, f.classifier.lifeline, f.name, f.span);
        }

        std::set<std::pair<std::string, std::size_t>> methods;
        for (const auto& m : a.methods) {
            if (!methods.insert({m.name, m.params.size()}).second) {
                error(codes::kDuplicate,
                      "duplicate method '" + m.name + "' with " + std::to_string(m.params.size()) +
                          " parameter(s) in archetype " + a.name,
                      m.span);
            }
            if (is_code_side(m.classifier.lifeline)) {
                bool missing = m.result && !m.result->code;
                for (const auto& p : m.params) missing = missing || !p.type.code;
                if (missing) {
                    warning(codes::kMissingCodeType,
                            "code-side method " + a.name + '.' + m.name + " has a parameter or result without code type",
                            m.span);
                }
            }
            check_kind(a, m.classifier.lifeline, m.name, m.span);
        }

        std::set<std::string> fk_sources;
        for (const auto& e : a.relations) check_relational_entry(a, e, fk_sources);
    }

    void check_relational_entry(const Archetype& a, const RelationalEntry& e, std::set<std::string>& fk_sources) {
        if (!fk_sources.insert(e.local_field).second) {
            error(codes::kDuplicate, "'" + e.local_field + "' appears twice in the relational stack of " + a.name,
                  e.span);
        }
        const Field* local = a.find_field(e.local_field);
        if (local == nullptr) {
            error(codes::kBadForeignKey, "relational entry names unknown field '" + e.local_field + "' of " + a.name,
                  e.span);
        } else if (!is_database_side(local->classifier.lifeline)) {
            error(codes::kBadForeignKey,
                  "foreign key source " + a.name + '.' + e.local_field + " must have lifeline B or D", e.span);
        } else if (local->primary_key && e.participation == Participation::Open) {
            error(codes::kBadForeignKey,
                  "primary key " + a.name + '.' + e.local_field + " cannot be an open ('?') reference", e.span);
        }

        ResolvedReference ref;
        try {
            ref = resolve_reference(model_, e);
        } catch (const Error& err) {
            diags_.push_back(err.diagnostic());
            return;
        }
        if (!a.is_draft() && ref.archetype->is_draft()) {
            error(codes::kBadForeignKey,
                  "'" + e.local_field + "' references draft archetype " + ref.archetype->name + ", which has no table",
                  e.span);
            return;
        }
        if (!is_database_side(ref.field->classifier.lifeline)) {
            error(codes::kBadForeignKey,
                  "'" + e.local_field + "' references " + ref.archetype->name + '.' + ref.field->name +
                      ", which is not a database-side field",
                  e.span);
            return;
        }
        if (!ref.targets_primary_key()) {
            warning(codes::kNonKeyTarget,
                    "'" + e.local_field + "' references " + ref.archetype->name + '.' + ref.field->name +
                        ", which is not its primary key",
                    e.span);
        }
    }

    void check_relationship_names() {
        std::map<std::string, const Relationship*> seen;
        for (const auto& r : model_.relationships) {
            if (auto [it, fresh] = seen.emplace(to_lower(r.name), &r); !fresh) {
                error(codes::kDuplicate, "duplicate relationship name '" + r.name + "'", r.span);
            }
        }
    }

    const Field* require_key(const Relationship& r, const RelationshipEnd& end, const Archetype& a) {
        const Field* pk = a.primary_key();
        if (pk == nullptr) {
            error(codes::kNoPrimaryKey,
                  "relationship " + r.name + " references " + a.name + ", which has no PK field", end.span);
        }
        return pk;
    }

    void require_table(const Relationship& r, const RelationshipEnd& end, const Archetype& a) {
        if (!a.has_database_fields()) {
            error(codes::kNoTable,
                  "relationship " + r.name + " puts a foreign key into " + a.name +
                      ", which has no database-side fields",
                  end.span);
        }
    }

    void check_relationship(const Relationship& r) {
        for (const auto& f : r.attributes) {
            if (f.primary_key) {
                error(codes::kKeyLifeline, "relationship attribute " + r.name + '.' + f.name + " cannot be a PK",
                      f.span);
            }
            check_field_types(f, r.name);
        }
        std::set<std::string> attrs;
        for (const auto& f : r.attributes) {
            if (!attrs.insert(f.name).second) {
                error(codes::kDuplicate, "duplicate attribute '" + f.name + "' in relationship " + r.name, f.span);
            }
        }

        if (r.ends.size() < 2 || r.ends.size() > 3) {
            error(codes::kBadShape, "relationship " + r.name + " must have 2 or 3 ends", r.span);
            return;
        }
        std::vector<const Archetype*> archs;
        std::set<std::string> names;
        bool resolved = true;
        for (const auto& end : r.ends) {
            const Archetype* a = model_.find_archetype(end.archetype);
            if (a == nullptr) {
                error(codes::kUnknownEnd,
                      "relationship " + r.name + " names unknown archetype '" + end.archetype + "'", end.span);
                resolved = false;
            }
            if (!names.insert(end.archetype).second) {
                error(codes::kBadShape,
                      "relationship " + r.name + " names " + end.archetype + " more than once", end.span);
                resolved = false;
            }
            archs.push_back(a);
        }

        const bool binary = r.ends.size() == 2;
        bool shape_ok = true;
        for (const auto& end : r.ends) {
            if (binary && end.cardinality == Cardinality::M) {
                error(codes::kTernaryCardinality,
                      "cardinality 'm' belongs to ternary relationships; use 'n' in binary relationship " + r.name,
                      end.span);
                shape_ok = false;
            }
            if (!binary && end.cardinality == Cardinality::One) {
                error(codes::kBadShape,
                      "ternary relationship " + r.name + " must be all-many; '1' ends are unsupported", end.span);
                shape_ok = false;
            }
        }
        if (!resolved) return;

        const bool draft = std::any_of(archs.begin(), archs.end(), [](const Archetype* a) { return a->is_draft(); });
        if (draft) {
            warning(codes::kDraftRelationship,
                    "relationship " + r.name + " touches a draft (x) archetype and is left out of the schema", r.span);
            return;
        }
        if (!shape_ok) return;

        const bool all_many =
            std::all_of(r.ends.begin(), r.ends.end(), [](const RelationshipEnd& e) { return is_many(e.cardinality); });
        if (all_many) {
            for (std::size_t i = 0; i < r.ends.size(); ++i) require_key(r, r.ends[i], *archs[i]);
            if (model_.find_archetype(r.name) != nullptr ||
                std::any_of(model_.archetypes.begin(), model_.archetypes.end(),
                            [&](const Archetype& a) { return iequals(a.name, r.name); })) {
                error(codes::kDuplicate,
                      "junction table of relationship " + r.name + " collides with an archetype table", r.span);
            }
        } else if (r.ends[0].cardinality == Cardinality::One && r.ends[1].cardinality == Cardinality::One) {
            const std::size_t h = one_to_one_holder(r);
            require_key(r, r.ends[1 - h], *archs[1 - h]);
            require_table(r, r.ends[h], *archs[h]);
        } else {
            const std::size_t one = r.ends[0].cardinality == Cardinality::One ? 0 : 1;
            require_key(r, r.ends[one], *archs[one]);
            require_table(r, r.ends[1 - one], *archs[1 - one]);
        }
    }
};

}  // namespace detail

/// Semantic checks over a parsed model. Findings are data: the call itself
/// never throws. Diagnostics are sorted by (file, line, column, code).
inline ValidationReport validate(const Model& model) { return detail::Validator(model).run(); }

}  // namespace doomlc
