#include "cli.hpp"

#include "mono3sat/dimacs.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using mono3sat::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string &stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mono3sat_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string &name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string &p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
};

} // namespace

TEST_F(CliTest, VerifyGadget) {
  auto r = invoke({"verify-gadget", "--sign", "true"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("forced_true 3(z)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("model_count 45927"), std::string::npos);
  r = invoke({"verify-gadget", "--sign", "false"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("forced_false 3(z)"), std::string::npos) << r.out;
}

TEST_F(CliTest, SolveFromStdin) {
  auto r = invoke({"solve", "-"}, "p cnf 1 2\n1 0\n-1 0\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 6), "UNSAT\n");
  r = invoke({"solve", "--method", "exhaustive", "-"}, "p cnf 2 1\n-1 2 0\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 16), "SAT\nv -1 -2 0\nc ");
}

TEST_F(CliTest, ReduceThenValidate) {
  ASSERT_EQ(invoke({"gen", "--vars", "8", "--clauses", "10", "--seed", "3", path("g.cnf")}).code, 0);
  for (std::string target : {"mono23sat4", "mono3sat5", "mono3sat4"}) {
    const auto out = path(target + ".cnf");
    ASSERT_EQ(invoke({"reduce", "--target", target, path("g.cnf"), out}).code, 0);
    EXPECT_EQ(invoke({"validate", "--profile", target, out}).code, 0) << target;
    const auto first = slurp(out);
    ASSERT_EQ(invoke({"reduce", "--target", target, path("g.cnf"), out}).code, 0);
    EXPECT_EQ(slurp(out), first);
    EXPECT_EQ(invoke({"check-equisat", path("g.cnf"), out}).code, 0);
  }
  EXPECT_EQ(invoke({"validate", "--profile", "mono3sat4", path("g.cnf")}).code, 1);
}

TEST_F(CliTest, ReduceTraceAndCompact) {
  auto r = invoke({"reduce", "--target", "mono3sat5", "--compact-r3", "--trace", "-", "-"},
                  "p cnf 3 1\n1 -2 3 0\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = mono3sat::dimacs::parse(r.out);
  EXPECT_EQ(doc.formula.size(), 18u);
  EXPECT_EQ(doc.comments.size(), 18u);
  EXPECT_EQ(doc.comments.front(), "trace 0 gold 0");
  EXPECT_EQ(doc.comments.back(), "trace 17 r3-compact 0");
  EXPECT_EQ(r.out.rfind("c trace 0 gold 0\n", 0), 0u);
}

TEST_F(CliTest, ReduceAcceptsMono23Input) {
  auto r = invoke({"reduce", "--target", "mono3sat4", "-", "-"}, "p cnf 2 1\n1 2 0\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(mono3sat::dimacs::parse(r.out).formula.size(), 26u);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"reduce", "--target", "mono9", "-", "-"}).code, 2);
  EXPECT_EQ(invoke({"validate", "--profile", "mono3sat4"}).code, 2);
  EXPECT_EQ(invoke({"gen", "--vars", "3", "--clauses", "5", "--seed", "0", "-"}).code, 2);
  EXPECT_EQ(invoke({"solve", "-"}, "p cnf 2 1\n1 1 0\n").code, 3);
  EXPECT_EQ(invoke({"solve", path("missing.cnf")}).code, 3);
  EXPECT_EQ(invoke({"reduce", "--target", "mono3sat4", "-", "-"}, "p cnf 4 1\n1 2 3 4 0\n").code,
            3);
  EXPECT_EQ(invoke({"solve", "--method", "exhaustive", "-"}, "p cnf 30 1\n30 0\n").code, 3);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, CheckEquisatMismatch) {
  std::ofstream(path("a.cnf")) << "p cnf 1 1\n1 0\n";
  std::ofstream(path("b.cnf")) << "p cnf 1 2\n1 0\n-1 0\n";
  const auto r = invoke({"check-equisat", path("a.cnf"), path("b.cnf")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("NOT-EQUISAT"), std::string::npos);
}

TEST_F(CliTest, BlowupCsv) {
  const auto r = invoke({"blowup", "--seeds", "3", "--vars", "8", "--clauses", "10"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "seed,input_vars,input_clauses,mixed,pos2,neg2,pipeline,out_vars,out_clauses,millis");
  int rows = 0;
  while (std::getline(in, line))
    ++rows;
  EXPECT_EQ(rows, 12);
}
