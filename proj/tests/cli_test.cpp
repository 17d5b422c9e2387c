// Copyright 2026 The popmatch Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "popmatch/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "popmatch/gadgets.hpp"
#include "popmatch/io.hpp"
#include "popmatch/oracle.hpp"
#include "popmatch/solver.hpp"
#include "popmatch/vote.hpp"
#include "test_support.hpp"

namespace popmatch {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("popmatch_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, RatioOnExampleThree) {
  CliRun r = run({"ratio", testing::fixture_path("example3")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("alg=4 max_matching=5 max_popular=5 max_stable=5"), std::string::npos);
  EXPECT_NE(r.out.find("ratio_stable=4/5"), std::string::npos);
}

TEST_F(CliTest, RatioOnExamplesOneAndTwo) {
  CliRun r1 = run({"ratio", testing::fixture_path("example1")});
  EXPECT_NE(r1.out.find("alg=2 max_matching=3"), std::string::npos);
  EXPECT_NE(r1.out.find("ratio_matching=2/3"), std::string::npos);
  CliRun r2 = run({"ratio", testing::fixture_path("example2")});
  EXPECT_NE(r2.out.find("alg=3 max_matching=4 max_popular=4"), std::string::npos);
  EXPECT_NE(r2.out.find("ratio_popular=3/4"), std::string::npos);
}

TEST_F(CliTest, RatioWithEmptyInstancePrintsNotApplicable) {
  std::string inst = write("empty", "mode weak\n");
  CliRun r = run({"ratio", inst});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ratio_matching=n/a"), std::string::npos);
}

TEST_F(CliTest, VerifyPopularAndRefuted) {
  CliRun ok = run({"verify", testing::fixture_path("example2"), "--matching",
                testing::fixture_path("example2_E.match"), "--rule", "weak"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "POPULAR\n");

  std::string m = write("e.match", "e1\ne2\ne3\n");
  CliRun bad = run({"verify", testing::fixture_path("example1"), "--matching", m, "--rule", "weak"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out.rfind("NOT POPULAR delta=", 0), 0u);
  EXPECT_NE(bad.out.find("# counterexample"), std::string::npos);
}

TEST_F(CliTest, SolveOutputVerifiesAsPopular) {
  for (const char* name : {"example1", "example2", "example3"}) {
    CliRun s = run({"solve", testing::fixture_path(name)});
    ASSERT_EQ(s.code, 0);
    std::string m = write(std::string(name) + ".match", s.out);
    CliRun v = run({"verify", testing::fixture_path(name), "--matching", m});
    EXPECT_EQ(v.code, 0) << name << v.out;
  }
}

TEST_F(CliTest, SolveEmitsCertificate) {
  CliRun s = run({"solve", testing::fixture_path("example2"), "--emit-certificate"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out, "f1\nf2\nf3\nsize 3\nb(f1)\nc(f2)\ny(f3)\n");
  std::string cert = write("cert", s.out);
  CliRun c = run({"check-stable", testing::fixture_path("example2"), "--certificate", cert});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "STABLE\n");
}

TEST_F(CliTest, SolveWithoutEdges) {
  std::string inst = write("lonely", "mode weak\nu a\nw b\n");
  CliRun s = run({"solve", inst});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out, "size 0\n");
}

TEST_F(CliTest, CheckStableListsBlockers) {
  std::string m = write("f.match", "f1\nf2\nf3\nf4\n");
  CliRun weak = run({"check-stable", testing::fixture_path("example3"), "--matching", m});
  EXPECT_EQ(weak.code, 0);
  EXPECT_EQ(weak.out, "STABLE\n");
  // u4 strictly prefers e4 and w4 ties e4 with f3.
  CliRun r = run({"check-stable", testing::fixture_path("example3"), "--matching", m, "--notion",
                  "super"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "BLOCKED\ne4\n");
  CliRun e = run({"check-stable", testing::fixture_path("example3"), "--matching",
               write("e.match", "e1\ne2\ne3\ne4\ne5\n"), "--notion", "weak-stable"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "STABLE\n");
}

TEST_F(CliTest, OracleQueries) {
  CliRun mp = run({"oracle", testing::fixture_path("example2"), "--max-popular"});
  EXPECT_EQ(mp.code, 0);
  EXPECT_EQ(mp.out, "max_popular=4\ne1\ne2\ne3\ne4\nsize 4\n");

  CliRun ms = run({"oracle", testing::fixture_path("example3"), "--max-stable", "weak-stable"});
  EXPECT_EQ(ms.out.rfind("max_stable=5\n", 0), 0u);

  std::string tie = write("tie", "mode weak\nu u1 u2\nw w\nedge e u1 w 1 1\nedge f u2 w 1 1\n");
  CliRun none = run({"oracle", tie, "--super-exists"});
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(none.out, "NONE\n");

  CliRun both = run({"oracle", tie, "--super-exists", "--max-popular"});
  EXPECT_EQ(both.code, 2);
}

TEST_F(CliTest, GadgetAndGenerators) {
  CliRun g = run({"gadget", "superpm", testing::fixture_path("superpm_forced_z.pm")});
  ASSERT_EQ(g.code, 0);
  Instance built = parse_instance(g.out);
  EXPECT_EQ(built, gadget_superpm(parse_pm_restricted(
                       read_file(testing::fixture_path("superpm_forced_z.pm")))));

  CliRun fx = run({"gen", "fixture", "example2"});
  EXPECT_EQ(fx.code, 0);
  EXPECT_EQ(parse_instance(fx.out), fixture(Fixture::example2));
  EXPECT_EQ(fx.out, read_file(testing::fixture_path("example2")));

  CliRun a = run({"gen", "random", "--seed", "5", "--u", "3", "--w", "2", "--gammas", "1/2,1"});
  CliRun b = run({"gen", "random", "--seed", "5", "--u", "3", "--w", "2", "--gammas", "1/2,1"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse_instance(a.out).mode(), Mode::gamma);

  std::string smti = write("smti", "mode weak\nu u1\nw w1\nedge e u1 w1 1 1\n");
  CliRun s = run({"gadget", "smti", smti});
  EXPECT_EQ(parse_instance(s.out).edge_count(), 3u);
}

TEST_F(CliTest, DumpDuplicated) {
  std::string inst = write("one", "mode weak\nu u\nw w\nedge e u w 1 1\n");
  CliRun r = run({"dump-duplicated", inst});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "u a(e) b(e) c(e) x(e) y(e) z(e)\nw z(e) y(e) x(e) c(e) b(e) a(e)\n");
}

TEST_F(CliTest, ErrorsExitWithTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"solve"}).code, 2);
  EXPECT_EQ(run({"solve", (dir_ / "missing").string()}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  std::string bad = write("bad", "mode weak\nu a\nedge e a b 1 1\n");
  CliRun r = run({"solve", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  std::string weak = write("weak", "mode weak\nu a\nw b\nedge e a b 1 1\n");
  std::string m = write("m", "e\n");
  EXPECT_EQ(run({"verify", weak, "--matching", m, "--rule", "gamma"}).code, 2);
  EXPECT_EQ(run({"check-stable", weak, "--matching", m, "--certificate", m}).code, 2);
  EXPECT_EQ(run({"gadget", "inapprox", weak}).code, 2);
}

TEST_F(CliTest, HelpIsSuccessful) {
  CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("solve"), std::string::npos);
}

}  // namespace
}  // namespace popmatch
