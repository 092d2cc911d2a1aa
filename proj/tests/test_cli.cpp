#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "support.hpp"

using namespace pcalc;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(PCALC_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (auto n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pcalc_cli_" + name)).string();
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  return json::parse(in);
}

}  // namespace

TEST(Cli, TermCommands) {
  auto r = run("term normalize 'w.2'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "w+w\n");
  EXPECT_EQ(run("term normalize '(w.w)~'").out, "w*.w*\n");
  auto real = run("term realize 'w*+w' --depth 3");
  EXPECT_EQ(real.code, 0);
  EXPECT_NE(real.out.find("6 points"), std::string::npos);
  EXPECT_EQ(run("term render 'w.w' --unicode").out, "ω·ω\n");
  EXPECT_EQ(run("term parse 'w+'").code, 2);
  EXPECT_EQ(run("term frobnicate w").code, 2);
}

TEST(Cli, Contains) {
  EXPECT_EQ(run("contains z 'w*.w'").code, 0);
  EXPECT_EQ(run("contains z 'w.w'").code, 1);
  EXPECT_EQ(run("contains q w").code, 2);
  EXPECT_EQ(run("contains z 'w.('").code, 2);
}

TEST(Cli, ArrowFinite) {
  EXPECT_EQ(run("arrow finite 6 3 3").code, 0);
  auto path = tmp("w5.json");
  EXPECT_EQ(run("arrow finite 5 3 3 --witness-out " + path).code, 1);
  EXPECT_TRUE(avoids(coloring_from_json(read_json(path)), 3, 3));
  EXPECT_EQ(run("arrow finite 5 3 3 --threads 3 --json").code, 1);
  EXPECT_EQ(run("arrow finite 20 3 3").code, 2);
  EXPECT_EQ(run("arrow finite 6 3").code, 2);
  EXPECT_EQ(run("arrow finite 6 0 3").code, 2);
}

TEST(Cli, ArrowZ) {
  auto path = tmp("zw.json");
  auto r = run("arrow z 'w*+w' 3 --witness-out " + path);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("SeparationCert"), std::string::npos);
  auto w = partition_witness_from_json(read_json(path));
  EXPECT_EQ(render(w.a_term.term()), "w*");
  EXPECT_EQ(run("arrow z 'w*.w' 3").code, 0);
  EXPECT_EQ(run("arrow z 'w*+w' 2").code, 0);
  EXPECT_EQ(run("arrow z 0 1").code, 1);
  EXPECT_EQ(run("arrow z w 0").code, 0);
  EXPECT_EQ(run("arrow z w").code, 2);

  auto cpath = tmp("zc.json");
  EXPECT_EQ(run("arrow z 'w*+w' 3 --depth 3 --witness-out " + cpath).code, 1);
  auto g = coloring_from_json(read_json(cpath));
  EXPECT_EQ(g.vertices(), 6u);
  auto dot = run("render " + cpath + " --format dot");
  EXPECT_EQ(dot.code, 0);
  EXPECT_NE(dot.out.find("color=blue"), std::string::npos);
}

TEST(Cli, ArrowPigeonholeAndOmega) {
  EXPECT_EQ(run("arrow pigeonhole-z 'w.w*' 2").code, 0);
  EXPECT_EQ(run("arrow pigeonhole-z 'w*+w' 2").code, 1);
  EXPECT_EQ(run("arrow pigeonhole-z 'w*+w' 1").code, 0);
  EXPECT_EQ(run("arrow pigeonhole-z 'w*+w' 0").code, 2);
  EXPECT_EQ(run("arrow omega-omegastar 'w*.w'").code, 1);
  EXPECT_EQ(run("arrow omega-omegastar '('").code, 2);
}

TEST(Cli, Ramsey) {
  EXPECT_EQ(run("ramsey 3 3").out, "6\n");
  EXPECT_EQ(run("ramsey 4 3").out, "9\n");
  EXPECT_EQ(run("ramsey 2 5").out, "5\n");
  EXPECT_EQ(run("ramsey 4 4 --max 9").code, 2);
  EXPECT_EQ(run("ramsey 3 3 --max 40").code, 2);
}

TEST(Cli, Render) {
  auto path = tmp("pent.json");
  std::ofstream(path) << to_json(pentagon_witness()).dump();
  auto r = run("render " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, to_dot(pentagon_witness()));
  EXPECT_NE(run("render " + path + " --format tikz").out.find("tikzpicture"), std::string::npos);
  EXPECT_EQ(run("render " + path + " --format svg").code, 2);

  auto one = tmp("one.json");
  std::ofstream(one) << to_json(Coloring(1)).dump();
  auto single = run("render " + one);
  EXPECT_EQ(single.out.find("--"), std::string::npos);

  auto bad = tmp("bad.json");
  std::ofstream(bad) << "{not json";
  EXPECT_EQ(run("render " + bad).code, 2);
  EXPECT_EQ(run("render /nonexistent/file.json").code, 2);
}

// Decisions never exit 2, errors never exit 0 or 1.
TEST(Cli, ExitCodeCorpus) {
  const std::vector<std::pair<std::string, int>> corpus = {
      {"arrow finite 5 3 3", 1},       {"arrow finite 6 3 3", 0},     {"arrow finite 8 4 3", 1},
      {"arrow finite 9 4 3", 0},       {"arrow z 'w.w*' 4", 0},       {"arrow z 'w+w*' 4", 1},
      {"arrow z 'w.w' 2", 1},          {"contains 'w.w' 'w.(w+1)'", 0}, {"contains 'w*.w*' 'w.w'", 1},
      {"arrow finite 5 3 3 --limit 4", 2}, {"arrow z 'w' -1", 2},     {"term normalize ''", 2},
      {"", 2},                         {"arrow", 2},                  {"nonsense", 2},
  };
  for (const auto& [args, code] : corpus) EXPECT_EQ(run(args).code, code) << args;
}

TEST(Cli, JsonRecordsRedecide) {
  for (const auto* term : {"w*+w", "w.w*", "w+w*", "(1+w*).w*", "w.w"}) {
    for (int n : {1, 2, 3}) {
      auto r = run(std::string("arrow z '") + term + "' " + std::to_string(n) + " --json");
      auto j = json::parse(r.out);
      auto again = run("arrow z '" + j.at("term").get<std::string>() + "' " + std::to_string(j.at("n").get<int>()) + " --json");
      EXPECT_EQ(json::parse(again.out), j);
      EXPECT_EQ(r.code, j.at("holds").get<bool>() ? 0 : 1);
    }
  }
}
