#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doomlc/cli.hpp"
#include "test_support.hpp"

using namespace doomlc;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

class Cli : public ::testing::Test {
protected:
    fs::path dir;

    void SetUp() override {
        dir = testkit::scratch_dir(::testing::UnitTest::GetInstance()->current_test_info()->name());
    }
    void TearDown() override { fs::remove_all(dir); }

    Result run(std::vector<std::string> args) {
        std::ostringstream out, err;
        cli::RunOptions opts;
        opts.color = false;
        opts.working_dir = dir;
        const int code = cli::run(args, out, err, opts);
        return {code, out.str(), err.str()};
    }

    std::string write(const std::string& name, const std::string& text) {
        const fs::path p = dir / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }

    std::string fixture(const std::string& name) { return (testkit::fixtures_dir() / (name + ".dooml")).string(); }
};

}  // namespace

TEST_F(Cli, BuildRestaurant) {
    const Result r = run({"build", fixture("restaurant")});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const char* sub : {"out", "out/sql", "out/classes", "out/api", "out/diagram"}) {
        EXPECT_TRUE(fs::is_directory(dir / sub)) << sub;
    }
    EXPECT_TRUE(fs::exists(dir / "out/sql/schema.sql"));
    EXPECT_TRUE(fs::exists(dir / "out/classes/Client.java"));
    EXPECT_TRUE(fs::exists(dir / "out/classes/Reservation.java"));
    EXPECT_TRUE(fs::exists(dir / "out/api/openapi.yaml"));
    EXPECT_TRUE(fs::exists(dir / "out/diagram/model.dot"));
    EXPECT_FALSE(fs::exists(dir / "out/sql/assertions.sql"));
}

TEST_F(Cli, CheckEmptyFile) {
    const Result r = run({"check", write("empty.dooml", "")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("0 archetypes"), std::string::npos) << r.out;
}

TEST_F(Cli, BrokenModelLeavesOutputUntouched) {
    fs::create_directories(dir / "out");
    std::ofstream(dir / "out/keep.txt") << "previous build";
    std::string src = testkit::fixture_text("restaurant");
    src.replace(src.find("bObject.CLIENT"), 14, "bObject.CLEINT");
    const Result r = run({"build", write("broken.dooml", src)});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("error[E001]"), std::string::npos) << r.err;
    const auto tree = testkit::read_tree(dir / "out");
    ASSERT_EQ(tree.size(), 1u);
    EXPECT_EQ(tree.begin()->second, "previous build");
}

TEST_F(Cli, EmissionFailureWritesNothing) {
    // W003 is only a warning during validation but fatal once classes are emitted.
    const Result r = run({"build", write("partial.dooml", "archetype bObject A { fields { B- a: /INT } }\n")});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(fs::exists(dir / "out"));
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({"build", "--frobnicate", fixture("restaurant")}).code, 2);
    EXPECT_EQ(run({"build", (dir / "missing.dooml").string()}).code, 2);
    EXPECT_EQ(run({"build", "--dialect", "oracle", fixture("restaurant")}).code, 2);
    EXPECT_EQ(run({"build", "--profile", "cobol", fixture("restaurant")}).code, 2);
    EXPECT_EQ(run({"launch", fixture("restaurant")}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_FALSE(fs::exists(dir / "out"));
}

TEST_F(Cli, FmtIsIdempotent) {
    const std::string path =
        write("messy.dooml", "archetype bObject A{fields{B- aId:int/INT PK}}\n\n\nrelationship r (A n -- n A2) {}\n"
                             "archetype bObject A2 { fields { B- a2Id: int PK } }");
    ASSERT_EQ(run({"fmt", path}).code, 0);
    const std::string once = testkit::read_text(path);
    ASSERT_EQ(run({"fmt", path}).code, 0);
    EXPECT_EQ(testkit::read_text(path), once);
    EXPECT_EQ(run({"fmt", "--check", path}).code, 0);
    EXPECT_NE(run({"fmt", "--check", write("m2.dooml", "archetype cObject Z {}")}).code, 0);
}

TEST_F(Cli, DumpIr) {
    const Result r = run({"dump-ir", "--ir", "schema", "--dialect", "mysql", fixture("restaurant")});
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    ASSERT_EQ(j["tables"].size(), 2u);
    EXPECT_EQ(j["tables"][0]["columns"][0]["autoIncrement"], true);

    const Json model = Json::parse(run({"dump-ir", "--ir", "model", fixture("restaurant")}).out);
    EXPECT_EQ(model["archetypes"][1]["relations"][0]["participation"], "filled");
    EXPECT_EQ(Json::parse(run({"dump-ir", "--ir", "api", fixture("restaurant")}).out)["resources"].size(), 2u);
    EXPECT_EQ(Json::parse(run({"dump-ir", "--ir", "class", fixture("restaurant")}).out)["classes"].size(), 2u);
}

TEST_F(Cli, JsonDiagnostics) {
    const Result r = run({"check", "--format", "json", write("bad.dooml", "archetype bObject A { fields { Q- a: int } }")});
    EXPECT_EQ(r.code, 1);
    std::istringstream lines(r.out);
    std::string first;
    std::getline(lines, first);
    const Json d = Json::parse(first);
    EXPECT_EQ(d["code"], "S002");
    EXPECT_EQ(d["line"], 1);
}

TEST_F(Cli, ConfigFileAndFlagOverride) {
    write("dooml.toml", "# project settings\ndialect = \"ansi\"\nprofile = generic\nout_dir = gen\nemit_assertions = true\n");
    ASSERT_EQ(run({"build", fixture("restaurant")}).code, 0);
    EXPECT_TRUE(fs::exists(dir / "gen/classes/Client.txt"));
    EXPECT_TRUE(fs::exists(dir / "gen/sql/assertions.sql"));
    EXPECT_EQ(testkit::read_text(dir / "gen/sql/schema.sql").find('`'), std::string::npos);

    ASSERT_EQ(run({"build", "--dialect", "mysql", "--out", "gen2", fixture("restaurant")}).code, 0);
    EXPECT_NE(testkit::read_text(dir / "gen2/sql/schema.sql").find("AUTO_INCREMENT"), std::string::npos);

    write("dooml.toml", "colour = blue\n");
    EXPECT_EQ(run({"build", fixture("restaurant")}).code, 2);
}

TEST_F(Cli, MultipleInputsShareANamespace) {
    const std::string a = write("a.dooml", "archetype bObject A { fields { B- aId: int/INT PK } }\n");
    const std::string b = write("b.dooml",
                                "archetype bObject B { fields { B- aId: int/INT } relations { D+ aId -> bObject.A.PID ! } }\n");
    const Result r = run({"check", a, b});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("2 archetypes"), std::string::npos);
}

TEST_F(Cli, DiagramSkipsValidation) {
    const Result r = run({"diagram", write("d.dooml", "archetype xObject IDEA { }\nrelationship r (IDEA 1 -- n GHOST) { }\n")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fs::exists(dir / "out/diagram/model.dot"));
    EXPECT_FALSE(fs::exists(dir / "out/sql"));
}
