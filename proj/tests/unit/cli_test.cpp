#include <gtest/gtest.h>

#include <sstream>

#include "garside/cli.hpp"
#include "test_util.hpp"

namespace garside {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void expect_out(const std::vector<std::string>& args, const std::string& want) {
  Result r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, want);
}

TEST(Cli, Examples) {
  expect_out({"pure", "--germ", "braid:3"}, "delta-pure: true\nclasses: 1\n");
  expect_out({"nf", "--germ", "wreath", "a.bc"}, "D^1\n");
  expect_out({"merge-nf", "--germ", "wreath", "--left", "a,b", "a|a", "c"}, "ac|b\n");
}

TEST(Cli, ElementCommands) {
  expect_out({"nf", "--germ", "braid:3", "s1.s2.s1.s1"}, "D^1|s1\n");
  expect_out({"nf", "--germ", "wreath", ""}, "1\n");
  expect_out({"gcd", "--germ", "braid:3", "s1.s2", "s2.s1"}, "1\n");
  expect_out({"lcm", "--germ", "braid:3", "s1", "s2"}, "D^1\n");
  expect_out({"lcm", "--germ", "wreath", "--right", "a", "c"}, "bc\n");
  expect_out({"divides", "--germ", "wreath", "a", "bc"}, "false\n");
  expect_out({"divides", "--germ", "wreath", "--right", "a", "bc"}, "true\n");
}

TEST(Cli, Classes) {
  expect_out({"classes", "--germ", "wreath"}, "{a,b} -> ab\n{c} -> c\n");
  expect_out({"deltas", "--germ", "wreath"}, "a -> ab\nb -> ab\nc -> c\n");
  expect_out({"pure", "--germ", "abelian:4"}, "delta-pure: false\nclasses: 4\n");
}

TEST(Cli, Decompose) {
  expect_out({"decompose", "--germ", "wreath", "--left", "a,b"},
             "G atoms: {a,b}\nH atoms: {c}\nDelta_G: ab\nDelta_H: c\nDelta: abc\n"
             "Delta_G*Delta_H = Delta: true\nDelta_H*Delta_G = Delta: true\n"
             "Delta_a in G: a\nDelta_b in G: b\nDelta_c in H: c\nverified: true\n");
}

TEST(Cli, StructureCommands) {
  expect_out({"gh", "--germ", "wreath", "--left", "a,b", "c.a"}, "g: b\nh: c\n");
  expect_out({"hg", "--germ", "wreath", "--left", "a,b", "b.c"}, "h: c\ng: a\n");
  expect_out({"act", "--germ", "wreath", "--left", "a,b", "--op", "rr", "--h", "c", "--g", "a"}, "b\n");
  expect_out({"act", "--germ", "wreath", "--left", "a,b", "--op", "rl", "--h", "c", "--g", "a"}, "c\n");
  expect_out({"act", "--germ", "wreath", "--left", "a,b", "--op", "rr-inv", "--h", "c", "--g", "b"}, "a\n");
  expect_out({"split-nf", "--germ", "wreath", "--left", "a,b", "ac|b"}, "g: a|a\nh: c\n");
  expect_out({"split-nf", "--germ", "wreath", "--left", "a,b", "D^1"}, "g: ab\nh: c\n");
}

TEST(Cli, Automata) {
  expect_out({"count", "--germ", "wreath", "--n", "1"}, "6\n");
  expect_out({"count", "--germ", "wreath", "--variant", "full", "--n", "1"}, "7\n");
  expect_out({"count", "--germ", "wreath", "--left", "a,b", "--lang", "H", "--n", "2"}, "0\n");
  expect_out({"automaton", "--germ", "wreath", "--left", "a,b", "--lang", "G", "--format", "tsv"},
             "state\ta\tb\nstart\ta\tb\na\ta\tdead\nb\tdead\tb\ndead\tdead\tdead\n");
  Result dot = run({"automaton", "--germ", "wreath"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out, test::read_data("../golden/wreath_proper.dot"));
}

TEST(Cli, Check) {
  Result r = run({"check", "--germ", "wreath", "--left", "a,b", "--suite", "nf-criteria"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "nf-criteria: 1280 cases, 0 failures\n");
  r = run({"check", "--germ", "braid:3", "--suite", "all", "--max-len", "3", "--samples", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("algorithms: skipped (no --left)"), std::string::npos);
  EXPECT_NE(r.out.find("oracle: "), std::string::npos);
}

TEST(Cli, Validate) {
  Result r = run({"validate", "--germ", "wreath"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("valid: true"), std::string::npos);
  r = run({"validate", "--germ", std::string("file:") + GARSIDE_TEST_DATA + "/idempotent.germ"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("cancellativity: FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("valid: false"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"nf", "--germ", "wreath"}).code, 2);
  EXPECT_EQ(run({"nf", "--germ", "wreath", "a", "b"}).code, 2);
  EXPECT_EQ(run({"decompose", "--germ", "wreath"}).code, 2);
  EXPECT_EQ(run({"gh", "--germ", "wreath", "a"}).code, 2);
  EXPECT_EQ(run({"automaton", "--germ", "wreath", "--lang", "G"}).code, 2);
  EXPECT_EQ(run({"count", "--germ", "wreath", "--variant", "both", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"check", "--germ", "wreath", "--suite", "algorithms"}).code, 2);
  EXPECT_EQ(run({"check", "--germ", "wreath", "--suite", "nope"}).code, 2);

  EXPECT_EQ(run({"nf", "--germ", "wreath", "x"}).code, 1);
  EXPECT_EQ(run({"nf", "--germ", "braid:9", "s1"}).code, 1);
  EXPECT_EQ(run({"nf", "--germ", "file:/nonexistent.germ", "a"}).code, 1);
  EXPECT_EQ(run({"decompose", "--germ", "braid:3", "--left", "s1"}).code, 1);
  EXPECT_EQ(run({"merge-nf", "--germ", "wreath", "--left", "a,b", "c", "c"}).code, 1);
  EXPECT_EQ(run({"check", "--germ", "braid:3", "--suite", "oracle", "--max-len", "2"}).code, 0);
  EXPECT_EQ(run({"check", "--germ", "prod:braid:3,abelian:1", "--suite", "oracle"}).code, 1);

  Result help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("merge-nf"), std::string::npos);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"check", "--germ", "wreath", "--left", "a,b", "--suite", "action-identities",
                                "--samples", "100"};
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
}  // namespace garside
