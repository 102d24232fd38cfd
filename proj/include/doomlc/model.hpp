#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "doomlc/diagnostic.hpp"

namespace doomlc {

/// The lifeline letter in front of every member: which implementation layers
/// the member exists in.
enum class Lifeline {
    Api,       // A
    Both,      // B
    Code,      // C
    Database,  // D
    Draft,     // x
};

enum class Visibility { Public, Private, Protected };

struct Classifier {
    Lifeline lifeline = Lifeline::Both;
    Visibility visibility = Visibility::Public;

    friend bool operator==(const Classifier&, const Classifier&) = default;
};

inline char lifeline_letter(Lifeline l) {
    switch (l) {
        case Lifeline::Api: return 'A';
        case Lifeline::Both: return 'B';
        case Lifeline::Code: return 'C';
        case Lifeline::Database: return 'D';
        case Lifeline::Draft: return 'x';
    }
    return '?';
}

inline std::optional<Lifeline> lifeline_from_letter(char c) {
    switch (c) {
        case 'A': return Lifeline::Api;
        case 'B': return Lifeline::Both;
        case 'C': return Lifeline::Code;
        case 'D': return Lifeline::Database;
        case 'x':
        case 'X': return Lifeline::Draft;
        default: return std::nullopt;
    }
}

inline char visibility_symbol(Visibility v) {
    switch (v) {
        case Visibility::Public: return '+';
        case Visibility::Private: return '-';
        case Visibility::Protected: return '#';
    }
    return '?';
}

inline std::optional<Visibility> visibility_from_symbol(char c) {
    switch (c) {
        case '+': return Visibility::Public;
        case '-': return Visibility::Private;
        case '#': return Visibility::Protected;
        default: return std::nullopt;
    }
}

inline std::string_view to_string(Visibility v) {
    switch (v) {
        case Visibility::Public: return "public";
        case Visibility::Private: return "private";
        case Visibility::Protected: return "protected";
    }
    return "";
}

inline bool is_code_side(Lifeline l) {
    return l == Lifeline::Api || l == Lifeline::Both || l == Lifeline::Code;
}
inline bool is_database_side(Lifeline l) { return l == Lifeline::Both || l == Lifeline::Database; }
inline bool is_api_side(Lifeline l) { return l == Lifeline::Api || l == Lifeline::Both; }

/// `code/db` type pair. A single token without a slash fills both sides.
struct DualType {
    std::optional<std::string> code;
    std::optional<std::string> db;

    static DualType same(std::string t) { return {t, t}; }

    friend bool operator==(const DualType&, const DualType&) = default;
};

struct Field {
    std::string name;
    Classifier classifier;
    DualType type;
    bool primary_key = false;
    SourceSpan span;

    friend bool operator==(const Field& a, const Field& b) {
        return a.name == b.name && a.classifier == b.classifier && a.type == b.type &&
               a.primary_key == b.primary_key;
    }
};

struct Parameter {
    std::string name;
    DualType type;

    friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct Method {
    std::string name;
    Classifier classifier;
    std::vector<Parameter> params;
    std::optional<DualType> result;
    SourceSpan span;

    friend bool operator==(const Method& a, const Method& b) {
        return a.name == b.name && a.classifier == b.classifier && a.params == b.params &&
               a.result == b.result;
    }
};

/// Prefix letter of xObject / aObject / bObject / cObject / dObject.
enum class ArchetypeKind { Draft, Api, Both, Code, Database };

inline char kind_letter(ArchetypeKind k) {
    switch (k) {
        case ArchetypeKind::Draft: return 'x';
        case ArchetypeKind::Api: return 'a';
        case ArchetypeKind::Both: return 'b';
        case ArchetypeKind::Code: return 'c';
        case ArchetypeKind::Database: return 'd';
    }
    return '?';
}

inline std::optional<ArchetypeKind> kind_from_letter(char c) {
    switch (c) {
        case 'x': return ArchetypeKind::Draft;
        case 'a': return ArchetypeKind::Api;
        case 'b': return ArchetypeKind::Both;
        case 'c': return ArchetypeKind::Code;
        case 'd': return ArchetypeKind::Database;
        default: return std::nullopt;
    }
}

/// "bObject" for ArchetypeKind::Both, and so on.
inline std::string kind_keyword(ArchetypeKind k) { return std::string(1, kind_letter(k)) + "Object"; }

enum class Participation {
    Filled,  // written `!` or ●: reference must be present
    Open,    // written `?` or ○: reference may be NULL
};

struct ArchetypeRef {
    ArchetypeKind kind = ArchetypeKind::Both;
    std::string name;

    friend bool operator==(const ArchetypeRef&, const ArchetypeRef&) = default;
};

/// Keyword that resolves to the target archetype's primary-key field.
inline constexpr std::string_view kPid = "PID";

struct RelationalEntry {
    Classifier classifier;
    std::string local_field;
    ArchetypeRef target;
    std::string target_field;  // a field name or kPid
    Participation participation = Participation::Filled;
    SourceSpan span;

    bool targets_pid() const { return target_field == kPid; }

    friend bool operator==(const RelationalEntry& a, const RelationalEntry& b) {
        return a.classifier == b.classifier && a.local_field == b.local_field &&
               a.target == b.target && a.target_field == b.target_field &&
               a.participation == b.participation;
    }
};

struct Archetype {
    ArchetypeKind kind = ArchetypeKind::Both;
    std::string name;
    std::vector<Field> fields;
    std::vector<Method> methods;
    std::vector<RelationalEntry> relations;
    SourceSpan span;

    const Field* find_field(std::string_view n) const {
        auto it = std::find_if(fields.begin(), fields.end(), [&](const Field& f) { return f.name == n; });
        return it == fields.end() ? nullptr : &*it;
    }

    const Field* primary_key() const {
        auto it = std::find_if(fields.begin(), fields.end(), [](const Field& f) { return f.primary_key; });
        return it == fields.end() ? nullptr : &*it;
    }

    bool is_draft() const { return kind == ArchetypeKind::Draft; }

    bool has_database_fields() const {
        return std::any_of(fields.begin(), fields.end(),
                           [](const Field& f) { return is_database_side(f.classifier.lifeline); });
    }

    friend bool operator==(const Archetype& a, const Archetype& b) {
        return a.kind == b.kind && a.name == b.name && a.fields == b.fields &&
               a.methods == b.methods && a.relations == b.relations;
    }
};

/// Cardinality letter of a relationship end: 1, n (binary many) or m (ternary many).
enum class Cardinality { One, N, M };

inline char cardinality_letter(Cardinality c) {
    switch (c) {
        case Cardinality::One: return '1';
        case Cardinality::N: return 'n';
        case Cardinality::M: return 'm';
    }
    return '?';
}

inline bool is_many(Cardinality c) { return c != Cardinality::One; }

struct RelationshipEnd {
    std::string archetype;
    Cardinality cardinality = Cardinality::One;
    bool total = false;
    SourceSpan span;

    friend bool operator==(const RelationshipEnd& a, const RelationshipEnd& b) {
        return a.archetype == b.archetype && a.cardinality == b.cardinality && a.total == b.total;
    }
};

struct Relationship {
    std::string name;
    std::vector<RelationshipEnd> ends;
    std::vector<Field> attributes;
    SourceSpan span;

    friend bool operator==(const Relationship& a, const Relationship& b) {
        return a.name == b.name && a.ends == b.ends && a.attributes == b.attributes;
    }
};

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

inline bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
               return std::tolower(x) == std::tolower(y);
           });
}

/// Root container. Declaration order is significant: every emitter walks
/// archetypes and relationships in the order they were written.
struct Model {
    std::vector<Archetype> archetypes;
    std::vector<Relationship> relationships;

    /// Exact-name lookup.
    const Archetype* find_archetype(std::string_view name) const {
        auto it = std::find_if(archetypes.begin(), archetypes.end(),
                               [&](const Archetype& a) { return a.name == name; });
        return it == archetypes.end() ? nullptr : &*it;
    }

    bool empty() const { return archetypes.empty() && relationships.empty(); }

    friend bool operator==(const Model& a, const Model& b) {
        return a.archetypes == b.archetypes && a.relationships == b.relationships;
    }
};

/// Concatenates several parsed sources into one namespace, keeping order.
inline Model merge_models(std::vector<Model> parts) {
    Model out;
    for (auto& m : parts) {
        std::move(m.archetypes.begin(), m.archetypes.end(), std::back_inserter(out.archetypes));
        std::move(m.relationships.begin(), m.relationships.end(),
                  std::back_inserter(out.relationships));
    }
    return out;
}

}  // namespace doomlc
