#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using namespace rnametric;
using namespace rnametric::cli;

namespace {

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rnametric");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("rnametric_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, ValidateReportsAdjacentContact) {
  auto r = run_cli({"validate", write("bad.txt", "n 5\n2 3\n")});
  EXPECT_NE(r.code, kOk);
  EXPECT_EQ(r.code, kInvalid);
  EXPECT_NE(r.out.find("AdjacentContact at record 1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("line 2"), std::string::npos);
}

TEST_F(CliTest, ValidateAcceptsDotBracket) {
  auto r = run_cli({"validate", write("ok.txt", "((.))\n")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "record 1: valid (n=5, contacts=2)\n");
}

TEST_F(CliTest, ValidateMixedRecords) {
  auto r = run_cli({"validate", write("mix.txt", "((.))\n(.?)\n(..)\n")});
  EXPECT_EQ(r.code, kParse);
  EXPECT_NE(r.out.find("UnknownCharacter at record 2"), std::string::npos);
  EXPECT_NE(r.out.find("record 3: valid"), std::string::npos);
}

TEST_F(CliTest, ValidateMissingFile) {
  auto r = run_cli({"validate", (dir_ / "absent.txt").string()});
  EXPECT_EQ(r.code, kIo);
  EXPECT_NE(r.err.find("IoError"), std::string::npos);
}

TEST_F(CliTest, Dist) {
  EXPECT_EQ(run_cli({"dist", "(.).(.)", "..(.).."}).out, "3\n");
  EXPECT_EQ(run_cli({"dist", "(.).(.)", "(.).(.)", "--metric", "sgr2"}).out, "0\n");
  EXPECT_EQ(run_cli({"dist", "(.).(.)", "..(.)..", "--metric", "sgr"}).out, "2.079441542\n");
  auto v = run_cli({"dist", "([.)]", "(.[.)]", "--metric", "mag", "--verbose"});
  EXPECT_EQ(v.code, kLengthMismatch);
  auto r = run_cli({"dist", "(.)(.)", "(.[).]", "--metric", "mag", "--verbose"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "2\nsymdiff=4\nomega=1\nn=6 rank(T-Id)=2\n");
}

TEST_F(CliTest, DistReadsFiles) {
  auto a = write("a.txt", "n 6\n1 3\n4 6\n");
  auto b = write("b.txt", "n 6\n1 4\n3 6\n");
  EXPECT_EQ(run_cli({"dist", a, b}).out, "2\n");
  EXPECT_EQ(run_cli({"dist", a, "(.[).]"}).out, "2\n");
}

TEST_F(CliTest, BadUsage) {
  EXPECT_EQ(run_cli({"dist", "((.))"}).code, kUsage);
  EXPECT_EQ(run_cli({"dist", "((.))", "((.))", "--metric", "norm"}).code, kUsage);
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"dist", "(.))", "((.))"}).code, kParse);
}

TEST_F(CliTest, Orbits) {
  auto r = run_cli({"orbits", "(.)(.)", "(.[).]"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "cyclic [1,3,6,4] size=4\n"
            "linear [2] size=1\n"
            "linear [5] size=1\n"
            "omega=1 symdiff=4 d_inv=2\n");
  EXPECT_EQ(run_cli({"orbits", ".(..)", ".(..)"}).out,
            "linear [1] size=1\ncyclic [2,5] size=2\nlinear [3] size=1\nlinear [4] size=1\n"
            "omega=0 symdiff=0 d_inv=0\n");
  EXPECT_EQ(run_cli({"orbits", "...", "..."}).out,
            "linear [1] size=1\nlinear [2] size=1\nlinear [3] size=1\nomega=0 symdiff=0 d_inv=0\n");
}

TEST_F(CliTest, Matrix) {
  EXPECT_EQ(run_cli({"matrix", write("one.txt", "((.))\n")}).out, "1\n0\n");
  EXPECT_EQ(run_cli({"matrix", write("two.txt", "n 5\n1 5\n\nn 5\n1 5\n")}).out, "1\t2\n0\t0\n0\t0\n");
  auto r = run_cli({"matrix", write("three.txt", "(.).(.)\n..(.)..\n.......\n"), "--metric", "sgr"});
  EXPECT_EQ(r.out,
            "1\t2\t3\n"
            "0.000000000\t2.079441542\t1.386294361\n"
            "2.079441542\t0.000000000\t0.693147181\n"
            "1.386294361\t0.693147181\t0.000000000\n");
  auto bad = run_cli({"matrix", write("bad.txt", "((.))\n(...)\n((..))\n")});
  EXPECT_EQ(bad.code, kLengthMismatch);
  EXPECT_NE(bad.err.find("record 3"), std::string::npos);
}

TEST_F(CliTest, MatrixIsSymmetricWithZeroDiagonal) {
  auto gen = run_cli({"gen", "-n", "40", "-k", "15", "--count", "25", "--seed", "9"});
  ASSERT_EQ(gen.code, kOk);
  for (const char* metric : {"inv", "mag", "sgr2", "sgr"}) {
    auto r = run_cli({"matrix", write("ens.txt", gen.out), "--metric", metric});
    ASSERT_EQ(r.code, kOk);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
      std::vector<std::string> cells;
      std::istringstream ls(line);
      for (std::string cell; std::getline(ls, cell, '\t');) cells.push_back(cell);
      rows.push_back(cells);
    }
    ASSERT_EQ(rows.size(), 25u);
    for (std::size_t i = 0; i < 25; ++i) {
      ASSERT_EQ(rows[i].size(), 25u);
      EXPECT_EQ(std::stod(rows[i][i]), 0.0);
      for (std::size_t j = 0; j < 25; ++j) EXPECT_EQ(rows[i][j], rows[j][i]);
    }
  }
  // the two exact metrics coincide
  EXPECT_EQ(run_cli({"matrix", write("e.txt", gen.out), "--metric", "inv"}).out,
            run_cli({"matrix", write("e.txt", gen.out), "--metric", "mag"}).out);
}

TEST_F(CliTest, GenIsDeterministicAndValid) {
  auto a = run_cli({"gen", "-n", "30", "-k", "10", "--count", "5", "--seed", "42"});
  auto b = run_cli({"gen", "-n", "30", "-k", "10", "--count", "5", "--seed", "42"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run_cli({"gen", "-n", "30", "-k", "10", "--count", "5", "--seed", "43"}).out);
  auto v = run_cli({"validate", write("gen.txt", a.out)});
  EXPECT_EQ(v.code, kOk);
  EXPECT_EQ(std::count(v.out.begin(), v.out.end(), '\n'), 5);

  auto d = run_cli({"gen", "-n", "30", "-k", "10", "--count", "5", "--seed", "42", "--format", "dotbracket"});
  EXPECT_EQ(d.code, kOk);
  EXPECT_EQ(parse_records(d.out), parse_records(a.out));

  EXPECT_EQ(run_cli({"gen", "-n", "2", "-k", "1"}).code, kInfeasible);
}
