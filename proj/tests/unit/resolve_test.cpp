#include <gtest/gtest.h>

#include "doomlc/resolve.hpp"
#include "test_support.hpp"

using namespace doomlc;

namespace {

RelationalEntry entry(std::string archetype, std::string field, ArchetypeKind kind = ArchetypeKind::Both) {
    RelationalEntry e;
    e.classifier = {Lifeline::Database, Visibility::Public};
    e.local_field = "ref";
    e.target = {kind, std::move(archetype)};
    e.target_field = std::move(field);
    return e;
}

std::string error_code(const Model& m, const RelationalEntry& e) {
    try {
        (void)resolve_reference(m, e);
    } catch (const Error& err) {
        return err.code();
    }
    return "";
}

}  // namespace

TEST(Resolve, PidResolvesToPrimaryKey) {
    const Model m = testkit::load_fixture("restaurant");
    const ResolvedReference r = resolve_reference(m, entry("CLIENT", "PID"));
    EXPECT_EQ(r.archetype->name, "CLIENT");
    EXPECT_EQ(r.field->name, "clientId");
    EXPECT_TRUE(r.targets_primary_key());
}

TEST(Resolve, NamedNonKeyField) {
    const Model m = testkit::load_fixture("restaurant");
    const ResolvedReference r = resolve_reference(m, entry("CLIENT", "clientName"));
    EXPECT_EQ(r.field->name, "clientName");
    EXPECT_FALSE(r.targets_primary_key());
}

TEST(Resolve, Failures) {
    const Model m = testkit::load_fixture("restaurant");
    EXPECT_EQ(error_code(m, entry("GHOST", "PID")), "E001");
    EXPECT_EQ(error_code(m, entry("CLIENT", "nope")), "E001");
    EXPECT_EQ(error_code(m, entry("CLIENT", "PID", ArchetypeKind::Database)), "E001");

    Model no_pk;
    no_pk.archetypes.push_back({ArchetypeKind::Both, "BARE", {{"x", {Lifeline::Both, Visibility::Private}, DualType::same("int"), false, {}}}, {}, {}, {}});
    EXPECT_EQ(error_code(no_pk, entry("BARE", "PID")), "E002");
}
