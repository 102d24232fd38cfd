#pragma once

#include <string>
#include <string_view>

#include "doomlc/emit.hpp"
#include "doomlc/model.hpp"
#include "doomlc/printer.hpp"

namespace doomlc {

/// Line style per archetype kind: b solid, x dashed, c dotted, d bold,
/// a dashed and colored.
struct DotStyle {
    std::string_view style;
    std::string_view color;
};

inline DotStyle dot_style(ArchetypeKind k) {
    switch (k) {
        case ArchetypeKind::Both: return {"solid", "black"};
        case ArchetypeKind::Draft: return {"dashed", "black"};
        case ArchetypeKind::Code: return {"dotted", "black"};
        case ArchetypeKind::Database: return {"bold", "black"};
        case ArchetypeKind::Api: return {"dashed", "blue"};
    }
    return {"solid", "black"};
}

namespace detail {

inline std::string dot_record_escape(std::string_view s) {
    std::string out;
    for (const char c : s) {
        if (c == '{' || c == '}' || c == '|' || c == '<' || c == '>' || c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

inline std::string dot_id(std::string_view s) { return "\"" + std::string(s) + "\""; }

template <typename Items, typename Format>
std::string dot_stack(const Items& items, Format format) {
    std::string s;
    for (const auto& item : items) s += dot_record_escape(format(item)) + "\\l";
    return s;
}

inline std::string dot_attrs(DotStyle st) {
    std::string s = "style=" + std::string(st.style);
    if (st.color != "black") s += ", color=" + std::string(st.color);
    return s;
}

// Edges take the style of the first end that is not a bObject; a draft end
// always makes the edge dashed.
inline DotStyle edge_style(const Model& model, const Relationship& r) {
    DotStyle st = dot_style(ArchetypeKind::Both);
    bool picked = false;
    for (const auto& e : r.ends) {
        const Archetype* a = model.find_archetype(e.archetype);
        if (a == nullptr) continue;
        if (a->is_draft()) return dot_style(ArchetypeKind::Draft);
        if (!picked && a->kind != ArchetypeKind::Both) {
            st = dot_style(a->kind);
            picked = true;
        }
    }
    return st;
}

}  // namespace detail

/// `diagram/model.dot`: one record node per archetype (name, field, method
/// and relational stacks), one edge per binary relationship labeled with its
/// cardinality letters, and a diamond hub for ternary relationships. Draft
/// archetypes are drawn too. Validation is not required.
inline EmittedFile emit_dot(const Model& model) {
    if (model.empty()) return EmittedFile("diagram/model.dot", "digraph dooml {}\n");

    std::string d = "digraph dooml {\n";
    d += "  graph [rankdir=LR];\n";
    d += "  node [shape=record, fontname=\"Helvetica\", fontsize=10];\n";
    d += "  edge [fontname=\"Helvetica\", fontsize=9];\n";
    for (const auto& a : model.archetypes) {
        std::string label = "{" + detail::dot_record_escape(kind_keyword(a.kind) + ' ' + a.name) + '|' +
                            detail::dot_stack(a.fields, format_field) + '|' +
                            detail::dot_stack(a.methods, format_method) + '|' +
                            detail::dot_stack(a.relations, format_relational_entry) + '}';
        d += "  " + detail::dot_id(a.name) + " [label=\"" + label + "\", " + detail::dot_attrs(dot_style(a.kind)) +
             "];\n";
    }
    for (const auto& r : model.relationships) {
        const std::string attrs = detail::dot_attrs(detail::edge_style(model, r));
        if (r.ends.size() == 2) {
            const auto& from = r.ends[0];
            const auto& to = r.ends[1];
            d += "  " + detail::dot_id(from.archetype) + " -> " + detail::dot_id(to.archetype) + " [label=\"" +
                 cardinality_letter(from.cardinality) + ".." + cardinality_letter(to.cardinality) +
                 "\", xlabel=\"" + r.name + "\", dir=none, " + attrs;
            if (from.total) d += ", taillabel=\"total\"";
            if (to.total) d += ", headlabel=\"total\"";
            d += "];\n";
            continue;
        }
        const std::string hub = detail::dot_id("rel_" + r.name);
        d += "  " + hub + " [shape=diamond, label=\"" + r.name + "\"];\n";
        for (const auto& e : r.ends) {
            d += "  " + hub + " -> " + detail::dot_id(e.archetype) + " [label=\"" + cardinality_letter(e.cardinality) +
                 "\", dir=none, " + attrs;
            if (e.total) d += ", headlabel=\"total\"";
            d += "];\n";
        }
    }
    d += "}\n";
    return EmittedFile("diagram/model.dot", std::move(d));
}

}  // namespace doomlc
