#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "polyunion/io.hpp"

namespace fs = std::filesystem;
using polyunion::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "polyunion");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("polyunion_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, BuildTargets) {
  Outcome r = call({"build", "cyclic", "--d", "4", "--k", "16", "-o", path("c.poly")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("16 vertices"), std::string::npos);
  EXPECT_EQ(polyunion::parse_polyfile(polyunion::read_file(path("c.poly"))).rows.size(), 16u);

  r = call({"build", "cross", "--d", "3", "-o", path("x.poly")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(polyunion::parse_polyfile(polyunion::read_file(path("x.poly"))).rows.size(), 8u);

  r = call({"build", "liftproject", "--d", "3", "-o", path("lp.poly")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(polyunion::parse_polyfile(polyunion::read_file(path("lp.poly"))).rows.size(), 10u);

  r = call({"build", "perturbed", "--d", "4", "-o", path("q.poly")});
  EXPECT_EQ(r.code, 0);
  const polyunion::PolyFile q = polyunion::parse_polyfile(polyunion::read_file(path("q.poly")));
  EXPECT_EQ(q.annotations[0], "color 1");
  EXPECT_TRUE(polyunion::find_directive(q, "scale_exponent"));
}

TEST_F(CliTest, BadInputExitsTwo) {
  EXPECT_EQ(call({"build", "cyclic", "--d", "0", "--k", "4", "-o", path("a.poly")}).code, 2);
  EXPECT_EQ(call({"build", "cyclic", "--d", "2", "--k", "4"}).code, 2);
  EXPECT_EQ(call({"build", "nothing", "--d", "2", "-o", path("a.poly")}).code, 2);
  EXPECT_EQ(call({"verify", "approx", "--d", "3", "--delta", "2/4"}).code, 2);
  EXPECT_EQ(call({"verify", "construction", "--d", "3"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"convert", path("missing.poly")}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST_F(CliTest, VerifyReports) {
  Outcome r = call({"verify", "construction", "--d", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["check"], "construction");
  EXPECT_EQ(j["counts"]["colorful_facets"], 64);
  EXPECT_TRUE(j["pass"].get<bool>());

  r = call({"verify", "bigm", "-o", path("bigm.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  j = nlohmann::json::parse(polyunion::read_file(path("bigm.json")));
  EXPECT_TRUE(j["pass"].get<bool>());

  r = call({"verify", "balas", "--dims", "1,2", "--trials", "4", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
}

TEST_F(CliTest, ConvertRoundTrip) {
  ASSERT_EQ(call({"build", "polar", "--d", "2", "--k", "4", "-o", path("d.poly")}).code, 0);
  ASSERT_EQ(call({"convert", path("d.poly"), "-o", path("d.json")}).code, 0);
  ASSERT_EQ(call({"convert", path("d.json"), "--format", "text", "-o", path("back.poly")}).code, 0);
  EXPECT_EQ(polyunion::read_file(path("back.poly")), polyunion::read_file(path("d.poly")));
  EXPECT_EQ(call({"convert", path("d.poly"), "--format", "yaml"}).code, 2);
}

TEST_F(CliTest, BoundAndSummary) {
  Outcome r = call({"report", "bound", "--fP", "1000000", "--fQ", "9"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["min_m"], 5);
  EXPECT_EQ(call({"report", "bound", "--fP", "0", "--fQ", "9"}).code, 2);

  r = call({"report", "summary", "--workspace", dir_.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json::array());

  ASSERT_EQ(call({"verify", "construction", "--d", "2", "-o", path("c2.json")}).code, 0);
  ASSERT_EQ(call({"build", "cross", "--d", "2", "-o", path("x.poly")}).code, 0);
  r = call({"report", "summary", "--workspace", dir_.string(), "--csv", path("rows.csv")});
  ASSERT_EQ(r.code, 0);
  const nlohmann::json items = nlohmann::json::parse(r.out);
  ASSERT_EQ(items.size(), 2u);
  EXPECT_EQ(items[0]["check"], "construction");
  EXPECT_EQ(items[1]["rows"], 4);
  EXPECT_NE(polyunion::read_file(path("rows.csv")).find("\n2,4,4,4,4\n"), std::string::npos);
}
