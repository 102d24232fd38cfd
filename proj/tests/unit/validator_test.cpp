#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "doomlc/parser.hpp"
#include "doomlc/validator.hpp"
#include "test_support.hpp"

using namespace doomlc;

namespace {

const char* const kAb =
    "archetype bObject A {\n  fields {\n    B- aId: int/INT PK\n  }\n}\n"
    "archetype bObject B {\n  fields {\n    B- bId: int/INT PK\n  }\n}\n";

ValidationReport check(const std::string& src) {
    ParseResult r = parse_model(src);
    EXPECT_TRUE(r.ok()) << (r.diagnostics.empty() ? "" : r.diagnostics.front().message);
    return validate(r.model);
}

std::vector<std::string> codes_for(const std::string& src) {
    std::vector<std::string> out;
    for (const auto& d : check(src).diagnostics) out.push_back(d.code);
    return out;
}

bool has(const std::vector<std::string>& v, const std::string& code) {
    return std::find(v.begin(), v.end(), code) != v.end();
}

}  // namespace

TEST(Validator, FixturesAreClean) {
    for (const auto& name : testkit::valid_fixtures()) {
        const ValidationReport rep = validate(testkit::load_fixture(name));
        EXPECT_TRUE(rep.ok()) << name;
        if (name != "kinds") {
            EXPECT_EQ(rep.warning_count(), 0u) << name;
        }
    }
}

TEST(Validator, MisspelledTargetIsUnresolved) {
    std::string src = testkit::fixture_text("restaurant");
    src.replace(src.find("bObject.CLIENT"), 14, "bObject.CLEINT");
    const ValidationReport rep = check(src);
    ASSERT_FALSE(rep.ok());
    EXPECT_EQ(rep.diagnostics.front().code, "E001");
    EXPECT_EQ(rep.diagnostics.front().span.line, 22u);
}

TEST(Validator, ErrorCodes) {
    // E001: kind prefix must match the target.
    EXPECT_TRUE(has(codes_for(std::string(kAb) + "archetype bObject C {\n fields { B- r: int/INT }\n relations { D+ r -> dObject.A.PID ! } }"), "E001"));
    // E002: PID of an archetype without PK.
    EXPECT_TRUE(has(codes_for("archetype bObject A { fields { B- x: int } }\n"
                          "archetype bObject C { fields { B- r: int } relations { D+ r -> bObject.A.PID ! } }"),
                    "E002"));
    // E002: relationship end without PK on the referenced side.
    EXPECT_TRUE(has(codes_for("archetype bObject A { fields { B- x: int } }\n"
                          "archetype bObject B { fields { B- bId: int PK } }\n"
                          "relationship r (A 1 -- n B) { }"),
                    "E002"));
    // E004: PK must live in the database.
    EXPECT_TRUE(has(codes_for("archetype bObject A { fields { C- aId: int PK } }"), "E004"));
    EXPECT_TRUE(has(codes_for(std::string(kAb) + "relationship r (A n -- n B) { attributes { B- k: int PK } }"), "E004"));
    // E005: 'm' in a binary relationship.
    EXPECT_TRUE(has(codes_for(std::string(kAb) + "relationship r (A m -- n B) { }"), "E005"));
    // E006: unknown end.
    EXPECT_TRUE(has(codes_for(std::string(kAb) + "relationship r (A 1 -- n GHOST) { }"), "E006"));
    // E007: two PK fields.
    EXPECT_TRUE(has(codes_for("archetype bObject A { fields { B- a: int PK\n B- b: int PK } }"), "E007"));
    // E008: FK source not in the database, and a draft target.
    EXPECT_TRUE(has(codes_for(std::string(kAb) + "archetype bObject C { fields { C- r: int } relations { D+ r -> bObject.A.PID ! } }"), "E008"));
    EXPECT_TRUE(has(codes_for("archetype xObject S { fields { x- sId: int PK } }\n"
                          "archetype bObject C { fields { B- r: int } relations { D+ r -> xObject.S.PID ! } }"),
                    "E008"));
    EXPECT_TRUE(has(codes_for(std::string(kAb) + "archetype bObject C { relations { D+ r -> bObject.A.PID ! } }"), "E008"));
    // E009: ternary with a '1' end, repeated end.
    EXPECT_TRUE(has(codes_for(std::string(kAb) + "archetype bObject C { fields { B- cId: int PK } }\n"
                                             "relationship r (A 1 -- m B -- m C) { }"),
                    "E009"));
    EXPECT_TRUE(has(codes_for(std::string(kAb) + "relationship r (A 1 -- n A) { }"), "E009"));
    // E010: FK holder without any database-side field.
    EXPECT_TRUE(has(codes_for(std::string(kAb) + "archetype cObject C { fields { C- x: int } }\n"
                                             "relationship r (A 1 -- n C) { }"),
                    "E010"));
    // E003: junction name collides with an archetype table.
    EXPECT_TRUE(has(codes_for(std::string(kAb) + "relationship a (A n -- n B) { }"), "E003"));
}

TEST(Validator, WarningCodes) {
    auto warns = [](const std::string& src) {
        const ValidationReport rep = check(src);
        EXPECT_TRUE(rep.ok()) << src;
        std::vector<std::string> out;
        for (const auto& d : rep.diagnostics) out.push_back(d.code);
        return out;
    };
    EXPECT_EQ(warns(std::string(kAb) + "archetype bObject C { fields { B- r: int/INT } relations { D+ r -> bObject.A.aId ! } }"),
              std::vector<std::string>{});
    EXPECT_EQ(warns("archetype bObject A { fields { B- aId: int/INT PK\n B- n: int/INT } }\n"
                    "archetype bObject C { fields { B- r: int/INT } relations { D+ r -> bObject.A.n ! } }"),
              std::vector<std::string>{"W001"});
    EXPECT_EQ(warns("archetype bObject A { fields { B- a: string/ } }"), std::vector<std::string>{"W002"});
    EXPECT_EQ(warns("archetype bObject A { fields { B- a: /INT } }"), std::vector<std::string>{"W003"});
    EXPECT_EQ(warns("archetype cObject A { methods { C+ f(x: /INT): int } }"), std::vector<std::string>{"W003"});
    EXPECT_EQ(warns("archetype xObject S { }\n" + std::string(kAb) + "relationship r (S 1 -- n A) { }"),
              std::vector<std::string>{"W004"});
    EXPECT_EQ(warns("archetype dObject A { fields { C- a: int } }"), std::vector<std::string>{"W005"});
    EXPECT_EQ(warns("archetype aObject A { methods { D+ f(): int } }"), std::vector<std::string>{"W005"});
}

TEST(Validator, ReportsAreOrderedAndRepeatable) {
    const std::string src =
        "archetype bObject A { fields { C- a: int PK\n B- b: int PK } }\n"
        "relationship r (A 1 -- n GHOST) { }\n"
        "archetype bObject B { fields { B- x: /INT } }\n";
    const ParseResult parsed = parse_model(src);
    ASSERT_TRUE(parsed.ok());
    const ValidationReport first = validate(parsed.model);
    const ValidationReport second = validate(parsed.model);
    ASSERT_EQ(first.diagnostics.size(), second.diagnostics.size());
    for (std::size_t i = 0; i < first.diagnostics.size(); ++i) {
        EXPECT_EQ(first.diagnostics[i].code, second.diagnostics[i].code);
        EXPECT_EQ(first.diagnostics[i].message, second.diagnostics[i].message);
    }
    for (std::size_t i = 1; i < first.diagnostics.size(); ++i) {
        const auto& a = first.diagnostics[i - 1].span;
        const auto& b = first.diagnostics[i].span;
        EXPECT_TRUE(a.line < b.line || (a.line == b.line && a.column <= b.column));
    }
    EXPECT_GE(first.error_count(), 3u);
}
