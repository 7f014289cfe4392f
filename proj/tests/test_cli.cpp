#include <gtest/gtest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(NAKAYAMA_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, p)) out.append(buf, got);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, TensorModes) {
  auto r = run("tensor --n 2 'B(1,2,1)' 'B(1,3,1)' --mode both");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "B(1,2,1) + B(1,4,1)\nMATCH\n");
  r = run("tensor --n 3 'M(1|1,1)' 'M(1|1,1)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "M(1|2,0)\n");
  r = run("tensor --n 2 'L(1|2)' 'L(1|1)' --mode oracle");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, Errors) {
  auto r = run("tensor --n 2 'M(1|x,0)' 'L(1|1)'");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("parse error"), std::string::npos);
  EXPECT_EQ(run("tensor --n 2 'L(1|1)' 'L(1|1)' --mode sideways").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  r = run("tensor --n 3 'B(1,10,1)' 'B(1,10,1)' --mode oracle --cap 100");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("aborted"), std::string::npos);
}

TEST(Cli, Cell) {
  auto r = run("cell --n 2 'M(1|1,0)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "J(0); left=(col 1, width 2, MN); right=(row 1, height 2, MS)\n");
  EXPECT_EQ(run("cell --n 2 'L(1|2)'").out, "Split; left=S_right:2; right=S_left:1\n");
}

TEST(Cli, CellsReport) {
  auto r = run("cells --n 1 --max-valleys 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("descriptor,two_sided_cell,left_key,right_key\n", 0), 0u);
  EXPECT_NE(r.out.find("\"M(1|1,0)\",J(0)"), std::string::npos);
  r = run("cells --n 2 --max-valleys 1 --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"two_sided_cell\": \"J(1)\""), std::string::npos);
}

TEST(Cli, Graph) {
  auto r = run("graph --n 2 'M(1|1,0)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("digraph"), std::string::npos);
  EXPECT_NE(r.out.find("\"v_1_2\" -> \"v_1_1\""), std::string::npos);
  EXPECT_NE(run("graph --n 2 'B(1,2,3)'").out.find("J_2(3)"), std::string::npos);
  EXPECT_EQ(run("graph --n 2 'L(1|1)' --format png").code, 1);
}

TEST(Cli, RealizeThenDecompose) {
  auto r = run("realize --n 2 'W(1|2,1)' | " + std::string(NAKAYAMA_CLI) + " decompose -");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "W(1|2,1)\n");
  r = run("realize --n 1 'B(1,2,-3)' | " + std::string(NAKAYAMA_CLI) + " decompose - --json");
  EXPECT_NE(r.out.find("\"multiset\": \"B(1,2,-3)\""), std::string::npos);
  EXPECT_EQ(run("decompose /nonexistent.json").code, 1);
}

TEST(Cli, CheckPasses) {
  auto r = run("check --n 1,2 --max-valleys 1 --max-m 2 --max-cell-valleys 1");
  EXPECT_EQ(r.code, 0) << r.out;
  for (int c = 1; c <= 8; ++c) EXPECT_NE(r.out.find("C" + std::to_string(c) + " PASS"), std::string::npos) << c;
  r = run("check --n 4 --max-valleys 1 --max-m 2 --max-cell-valleys 1");
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, InjectedFaultIsCaught) {
  auto r = run("check --n 1 --max-valleys 1 --max-m 2 --max-cell-valleys 1 --inject-fault");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("C3 FAIL"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("C1 PASS"), std::string::npos);
}

TEST(Cli, CheckJson) {
  auto r = run("check --n 1 --max-valleys 0 --max-m 1 --max-cell-valleys 0 --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"status\": \"pass\""), std::string::npos);
  EXPECT_NE(r.out.find("\"config\""), std::string::npos);
}
