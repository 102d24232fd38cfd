#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "doomlc/emit.hpp"
#include "doomlc/ir.hpp"

namespace doomlc {

/// A named target syntax for class skeletons. New targets are added by
/// registering another profile.
struct ClassProfile {
    std::string name;
    std::string extension;
    std::function<std::string(const ClassDef&)> render;
};

namespace detail {

inline const std::string& code_type_of(const ClassDef& c, std::string_view member,
                                       const std::optional<std::string>& t) {
    if (!t) {
        throw Error(codes::kMissingCodeType,
                    "class " + c.name + ": member '" + std::string(member) + "' has no code type");
    }
    return *t;
}

inline std::string generated_banner(const ClassDef& c) {
    return "// Generated by doomlc from " + kind_keyword(c.kind) + ' ' + c.archetype + ". Do not edit.\n\n";
}

inline std::string render_java_like(const ClassDef& c) {
    std::string s = generated_banner(c);
    s += "public class " + c.name + " {\n";
    for (const auto& p : c.properties) {
        if (p.identifier) s += "    /** Object identifier (primary key). */\n";
        s += "    " + std::string(to_string(p.visibility)) + ' ' + code_type_of(c, p.name, p.code_type) + ' ' +
             p.name + ";\n";
    }
    for (const auto& m : c.methods) {
        if (!c.properties.empty() || &m != &c.methods.front()) s += '\n';
        const std::string ret = m.has_return ? code_type_of(c, m.name, m.return_code_type) : "void";
        s += "    " + std::string(to_string(m.visibility)) + ' ' + ret + ' ' + m.name + '(';
        for (std::size_t i = 0; i < m.params.size(); ++i) {
            if (i) s += ", ";
            s += code_type_of(c, m.name, m.params[i].code_type) + ' ' + m.params[i].name;
        }
        s += ") {\n    }\n";
    }
    s += "}\n";
    return s;
}

inline std::string render_generic(const ClassDef& c) {
    std::string s = generated_banner(c);
    s += "class " + c.name + '\n';
    for (const auto& p : c.properties) {
        s += "  property " + std::string(to_string(p.visibility)) + ' ' + p.name + ": " +
             code_type_of(c, p.name, p.code_type);
        if (p.identifier) s += " [identifier]";
        s += '\n';
    }
    for (const auto& m : c.methods) {
        s += "  method " + std::string(to_string(m.visibility)) + ' ' + m.name + '(';
        for (std::size_t i = 0; i < m.params.size(); ++i) {
            if (i) s += ", ";
            s += m.params[i].name + ": " + code_type_of(c, m.name, m.params[i].code_type);
        }
        s += ')';
        if (m.has_return) s += ": " + code_type_of(c, m.name, m.return_code_type);
        s += '\n';
    }
    s += "end\n";
    return s;
}

}  // namespace detail

inline const std::vector<ClassProfile>& class_profiles() {
    static const std::vector<ClassProfile> profiles = {
        {"generic", "txt", detail::render_generic},
        {"java-like", "java", detail::render_java_like},
    };
    return profiles;
}

inline const ClassProfile* find_class_profile(std::string_view name) {
    for (const auto& p : class_profiles()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

/// One file per class, `classes/<Name>.<ext>`, in ClassIR order.
inline std::vector<EmittedFile> emit_classes(const ClassIR& classes, const EmitConfig& config) {
    const ClassProfile* profile = find_class_profile(config.class_profile);
    if (profile == nullptr) {
        throw Error(codes::kConfig, "unknown class profile '" + config.class_profile + "'");
    }
    std::vector<EmittedFile> files;
    for (const auto& c : classes.classes) {
        files.emplace_back(std::filesystem::path("classes") / (c.name + "." + profile->extension),
                           profile->render(c));
    }
    return files;
}

}  // namespace doomlc
