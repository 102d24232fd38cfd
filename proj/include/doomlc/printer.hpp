#pragma once

#include <string>

#include "doomlc/model.hpp"

namespace doomlc {

/// `int` when both sides agree, `string/varchar(500)` when they differ,
/// `string/` or `/INT` when one side is absent.
inline std::string format_type(const DualType& t) {
    if (t.code && t.db && *t.code == *t.db) return *t.code;
    return t.code.value_or("") + "/" + t.db.value_or("");
}

inline std::string format_classifier(const Classifier& c) {
    return {lifeline_letter(c.lifeline), visibility_symbol(c.visibility)};
}

inline std::string format_field(const Field& f) {
    std::string s = format_classifier(f.classifier) + ' ' + f.name + ": " + format_type(f.type);
    if (f.primary_key) s += " PK";
    return s;
}

inline std::string format_method(const Method& m) {
    std::string s = format_classifier(m.classifier) + ' ' + m.name + '(';
    for (std::size_t i = 0; i < m.params.size(); ++i) {
        if (i) s += ", ";
        s += m.params[i].name + ": " + format_type(m.params[i].type);
    }
    s += ')';
    if (m.result) s += ": " + format_type(*m.result);
    return s;
}

inline std::string format_relational_entry(const RelationalEntry& e) {
    return format_classifier(e.classifier) + ' ' + e.local_field + " -> " + kind_keyword(e.target.kind) +
           '.' + e.target.name + '.' + e.target_field +
           (e.participation == Participation::Filled ? " !" : " ?");
}

/// `(CLIENT 1 -- n RESERVATION)`; the first end carries its letter after the
/// name, every later end before it.
inline std::string format_relationship_ends(const Relationship& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.ends.size(); ++i) {
        const auto& e = r.ends[i];
        if (i == 0) {
            s += e.archetype + ' ' + cardinality_letter(e.cardinality);
        } else {
            s += std::string(" -- ") + cardinality_letter(e.cardinality) + ' ' + e.archetype;
        }
    }
    return s + ')';
}

/// Canonical text form. Archetypes come first, then relationships, each block
/// separated by one blank line; empty sections are omitted.
inline std::string pretty_print(const Model& model) {
    std::string out;
    auto block_separator = [&] {
        if (!out.empty()) out += '\n';
    };
    auto section = [&](const char* name, const auto& items, auto format) {
        if (items.empty()) return;
        out += "  ";
        out += name;
        out += " {\n";
        for (const auto& item : items) out += "    " + format(item) + '\n';
        out += "  }\n";
    };

    for (const auto& a : model.archetypes) {
        block_separator();
        out += "archetype " + kind_keyword(a.kind) + ' ' + a.name + " {\n";
        section("fields", a.fields, format_field);
        section("methods", a.methods, format_method);
        section("relations", a.relations, format_relational_entry);
        out += "}\n";
    }
    for (const auto& r : model.relationships) {
        block_separator();
        out += "relationship " + r.name + ' ' + format_relationship_ends(r) + " {\n";
        std::string totals;
        for (const auto& e : r.ends) {
            if (!e.total) continue;
            if (!totals.empty()) totals += ", ";
            totals += e.archetype;
        }
        if (!totals.empty()) out += "  total: " + totals + '\n';
        section("attributes", r.attributes, format_field);
        out += "}\n";
    }
    return out;
}

}  // namespace doomlc
