#include "rect_atg/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_support.hpp"

namespace rect_atg {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "rect-atg");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string many_atoms(int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::string("v") + std::to_string(i);
  return s;
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    path_ = std::filesystem::temp_directory_path() /
            ("rect_atg_cli_" + std::to_string(std::hash<std::string>{}(content)) + ".txt");
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(CliTest, GenerateTwoAtoms) {
  const Result r = run({"generate", "-l", "p,q"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "premises (3):\n  1. (¬p ∨ q)\n  2. (p ∨ ¬q)\n  3. (¬p ∨ ¬q)\n⊢ ¬p ∧ ¬q\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(CliTest, GenerateTptpFirstOrder) {
  const Result r = run({"generate", "-l", "P1(a),P2(f(x)),P3(g(y,a))", "--var-style", "lower", "-o", "tptp"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("premise_0007"), std::string::npos);
  EXPECT_NE(r.out.find("conjecture"), std::string::npos);
}

TEST(CliTest, GenerateDimacsIsRefutationProblem) {
  const Result r = run({"generate", "-l", "p,q", "-o", "dimacs"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "c premises 1..3, hypothesis 4..4\np cnf 2 4\n-1 2 0\n1 -2 0\n-1 -2 0\n1 2 0\n");
}

TEST(CliTest, GenerateVerifyAndPartition) {
  const Result r = run({"generate", "-l", "p,q,r", "-H", "0,5", "--verify"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("premises (6):"), std::string::npos);
  EXPECT_NE(r.out.find("⊢ ¬("), std::string::npos);
}

TEST(CliTest, InputErrors) {
  const Result dup = run({"generate", "-l", "P(a),P(b)"});
  EXPECT_EQ(dup.code, cli::kInputError);
  EXPECT_NE(dup.err.find("DuplicatePredicate"), std::string::npos);

  const Result empty = run({"rectangle", "-l", ""});
  EXPECT_EQ(empty.code, cli::kInputError);
  EXPECT_NE(empty.err.find("EmptySet"), std::string::npos);

  EXPECT_EQ(run({"generate", "-l", "~~p"}).code, cli::kInputError);
  EXPECT_EQ(run({"generate", "-l", "p", "-H", "2"}).code, cli::kInputError);
  EXPECT_EQ(run({"generate", "-l", "p", "-o", "xml"}).code, cli::kInputError);
  EXPECT_EQ(run({"generate", "-l", "p", "-f", "x.txt"}).code, cli::kInputError);
  EXPECT_EQ(run({"rectangle", "-f", "/nonexistent/file"}).code, cli::kInputError);
  EXPECT_EQ(run({"bogus"}).code, cli::kInputError);
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"template", "-n", "0"}).code, cli::kInputError);
}

TEST(CliTest, Help) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("generate"), std::string::npos);
}

TEST(CliTest, RectangleFormats) {
  const auto expected = testing::split_rows(testing::read_data("example_propositional.txt"));
  const Result matrix = run({"rectangle", "-l", "w,x,y,z", "-o", "matrix"});
  EXPECT_EQ(matrix.code, cli::kOk);
  EXPECT_EQ(testing::split_rows(matrix.out), expected);

  const Result dimacs = run({"rectangle", "-l", "p,q", "-o", "dimacs"});
  EXPECT_EQ(dimacs.out, "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n");
}

TEST(CliTest, Check) {
  const Result r = run({"check", "-l", "p,q,r"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "full: UNSAT; removals: 8/8 SAT\nstandard contradiction: yes\n");

  const Result h = run({"check", "-l", "p,q", "-H", "1,2"});
  EXPECT_EQ(h.code, cli::kOk);
  EXPECT_NE(h.out.find("theorem: valid"), std::string::npos);
}

TEST(CliTest, CheckBudgetExhaustedIsReported) {
  const Result r = run({"check", "-l", "w,x,y,z", "--max-search", "5"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("standard contradiction: skipped"), std::string::npos);
}

TEST(CliTest, ResourceCaps) {
  const Result atoms = run({"check", "-l", many_atoms(21)});
  EXPECT_EQ(atoms.code, cli::kResourceCap);
  EXPECT_NE(atoms.err.find("TooManyAtoms"), std::string::npos);

  const Result size = run({"rectangle", "-l", many_atoms(21)});
  EXPECT_EQ(size.code, cli::kResourceCap);
  EXPECT_NE(size.err.find("SizeCap"), std::string::npos);

  EXPECT_EQ(run({"rectangle", "-l", "p,q,r", "--max-n", "2"}).code, cli::kResourceCap);
  EXPECT_EQ(run({"check", "-l", "p,q,r", "--max-atoms", "2"}).code, cli::kResourceCap);
  EXPECT_EQ(run({"template", "-n", "25"}).code, cli::kResourceCap);
}

TEST(CliTest, EnvironmentOverridesCap) {
  ::setenv(cli::kMaxLevelEnv, "2", 1);
  EXPECT_EQ(run({"rectangle", "-l", "p,q,r"}).code, cli::kResourceCap);
  // An explicit flag still wins.
  EXPECT_EQ(run({"rectangle", "-l", "p,q,r", "--max-n", "3"}).code, cli::kOk);
  ::setenv(cli::kMaxLevelEnv, "lots", 1);
  EXPECT_EQ(run({"rectangle", "-l", "p"}).code, cli::kInputError);
  ::unsetenv(cli::kMaxLevelEnv);
  EXPECT_EQ(run({"rectangle", "-l", "p,q,r"}).code, cli::kOk);
}

TEST(CliTest, FileInputAndRecordCheck) {
  const TempFile literals("P1(a)\nP2(f(x))\nP3(g(y,a))\n");
  const Result rect = run({"rectangle", "-f", literals.path(), "--var-style", "lower"});
  EXPECT_EQ(rect.code, cli::kOk);
  EXPECT_EQ(testing::split_rows(rect.out), testing::split_rows(testing::read_data("example_first_order.txt")));

  const Result saved = run({"generate", "-f", literals.path(), "--var-style", "lower", "-H", "2,3", "-o", "json"});
  ASSERT_EQ(saved.code, cli::kOk);
  const TempFile record(saved.out);
  const Result checked = run({"check", "--record", record.path()});
  EXPECT_EQ(checked.code, cli::kOk);
  EXPECT_NE(checked.out.find("theorem: valid"), std::string::npos);

  const TempFile broken("{\"version\": 1}");
  EXPECT_EQ(run({"check", "--record", broken.path()}).code, cli::kInputError);
}

TEST(CliTest, Template) {
  const Result r = run({"template", "-n", "3"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, testing::read_data("template_level3.txt"));
}

TEST(CliTest, Deterministic) {
  const std::vector<std::string> args{"generate", "-l", "a,b,c,d,e,f,g,h", "-o", "tptp"};
  const Result first = run(args);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(run(args).out, first.out);
}

}  // namespace
}  // namespace rect_atg
