#include <gtest/gtest.h>

#include "doomlc/parser.hpp"
#include "doomlc/printer.hpp"
#include "test_support.hpp"

using namespace doomlc;

TEST(Printer, EmptyModelPrintsNothing) { EXPECT_EQ(pretty_print(Model{}), ""); }

TEST(Printer, FixturesAreCanonical) {
    for (const auto& name : testkit::valid_fixtures()) {
        const std::string src = testkit::fixture_text(name);
        EXPECT_EQ(pretty_print(testkit::load_fixture(name)), src) << name;
    }
}

TEST(Printer, FilledMarkerSurvivesRoundTrip) {
    const Model m = testkit::load_fixture("restaurant");
    const std::string text = pretty_print(m);
    EXPECT_NE(text.find("D+ clientId -> bObject.CLIENT.PID !"), std::string::npos);
    const ParseResult again = parse_model(text);
    ASSERT_TRUE(again.ok());
    EXPECT_EQ(again.model, m);
}

TEST(Printer, NormalizesLayoutAndAliases) {
    const ParseResult r = parse_model(
        "archetype  bObject A{fields{B- aId:int/INT PK;B- n: int}}\n"
        "archetype bObject B { fields { B- aRef: int/INT } relations { D+ aRef \xe2\x86\x92 bObject.A.PID \xe2\x97\x8f } }"
        "relationship r (A 1 -- n B) { total: B }");
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(pretty_print(r.model),
              "archetype bObject A {\n"
              "  fields {\n"
              "    B- aId: int/INT PK\n"
              "    B- n: int\n"
              "  }\n"
              "}\n"
              "\n"
              "archetype bObject B {\n"
              "  fields {\n"
              "    B- aRef: int/INT\n"
              "  }\n"
              "  relations {\n"
              "    D+ aRef -> bObject.A.PID !\n"
              "  }\n"
              "}\n"
              "\n"
              "relationship r (A 1 -- n B) {\n"
              "  total: B\n"
              "}\n");
}

TEST(Printer, TypeForms) {
    EXPECT_EQ(format_type(DualType::same("int")), "int");
    EXPECT_EQ(format_type({"string", "varchar(500)"}), "string/varchar(500)");
    EXPECT_EQ(format_type({"string", std::nullopt}), "string/");
    EXPECT_EQ(format_type({std::nullopt, "INT"}), "/INT");
}
