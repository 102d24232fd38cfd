#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <map>
#include <string>

#include "doomlc/pipeline.hpp"
#include "test_support.hpp"

// Whole output trees for every fixture, compared byte for byte against
// tests/golden/<fixture>/. Run with DOOMLC_UPDATE_GOLDEN=1 to rewrite them,
// then review the diff before committing.

using namespace doomlc;

namespace {

bool updating() {
    const char* v = std::getenv("DOOMLC_UPDATE_GOLDEN");
    return v != nullptr && std::string(v) == "1";
}

EmitConfig golden_config() {
    EmitConfig c;
    c.sql_dialect = SqlDialect::MySql;
    c.class_profile = "java-like";
    c.emit_assert_queries = true;
    return c;
}

class Golden : public ::testing::TestWithParam<std::string> {};

}  // namespace

TEST_P(Golden, OutputTreeMatches) {
    const std::string name = GetParam();
    const auto files = render_outputs(testkit::load_fixture(name), golden_config());
    const auto dir = testkit::golden_dir() / name;
    if (updating()) {
        std::filesystem::remove_all(dir);
        write_outputs(files, dir);
    }
    std::map<std::string, std::string> rendered;
    for (const auto& f : files) rendered[f.relative_path.generic_string()] = f.contents;
    const auto expected = testkit::read_tree(dir);
    ASSERT_FALSE(expected.empty()) << "no golden tree at " << dir << "; run with DOOMLC_UPDATE_GOLDEN=1";
    for (const auto& [path, text] : expected) {
        auto it = rendered.find(path);
        ASSERT_NE(it, rendered.end()) << name << ": missing " << path;
        EXPECT_EQ(it->second, text) << name << ": " << path << " differs";
    }
    EXPECT_EQ(rendered.size(), expected.size()) << name;
}

INSTANTIATE_TEST_SUITE_P(Fixtures, Golden, ::testing::ValuesIn(testkit::valid_fixtures()),
                         [](const auto& info) { return info.param; });
