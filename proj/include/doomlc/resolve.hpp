#pragma once

#include <string>

#include "doomlc/diagnostic.hpp"
#include "doomlc/model.hpp"

namespace doomlc {

struct ResolvedReference {
    const Archetype* archetype = nullptr;
    const Field* field = nullptr;

    bool targets_primary_key() const { return field != nullptr && field->primary_key; }
};

/// Finds the archetype and field a relational-stack entry points at. `PID`
/// resolves to the target's primary-key field. The target kind letter has to
/// match the declared kind (`bObject.CLIENT` does not resolve to a cObject).
///
/// Throws Error with E001 (unknown archetype or field) or E002 (PID on a
/// target without a primary key).
inline ResolvedReference resolve_reference(const Model& model, const RelationalEntry& entry) {
    const Archetype* target = model.find_archetype(entry.target.name);
    if (target == nullptr) {
        throw Error(codes::kUnresolved,
                    "unknown archetype '" + entry.target.name + "' referenced by '" + entry.local_field + "'",
                    entry.span);
    }
    if (target->kind != entry.target.kind) {
        throw Error(codes::kUnresolved,
                    "reference names " + kind_keyword(entry.target.kind) + '.' + entry.target.name +
                        " but " + target->name + " is declared as " + kind_keyword(target->kind),
                    entry.span);
    }
    if (entry.targets_pid()) {
        const Field* pk = target->primary_key();
        if (pk == nullptr) {
            throw Error(codes::kNoPrimaryKey,
                        "'" + entry.local_field + "' references " + target->name +
                            ".PID but " + target->name + " has no PK field",
                        entry.span);
        }
        return {target, pk};
    }
    const Field* field = target->find_field(entry.target_field);
    if (field == nullptr) {
        throw Error(codes::kUnresolved,
                    "archetype " + target->name + " has no field '" + entry.target_field + "'",
                    entry.span);
    }
    return {target, field};
}

}  // namespace doomlc
