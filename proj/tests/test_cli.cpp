#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "hsplab/cli.hpp"

using namespace hsplab;
using hsplab::cli::run;

namespace {

struct Proc {
  int status = -1;
  std::string out;
};

// stdout and exit status of the installed binary
Proc exec(const std::string& args) {
  std::string cmd = std::string(HSPLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  Proc p;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return p;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) p.out.append(buf.data(), n);
  int st = pclose(f);
  p.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return p;
}

Json payload(const cli::Outcome& o) { return Json::parse(o.out).at("payload"); }

}  // namespace

TEST(Cli, ChartableSmall) {
  auto o = run({"chartable", "--n", "2"});
  ASSERT_EQ(o.exit_code, 0);
  auto j = Json::parse(o.out);
  EXPECT_EQ(j.at("command"), "chartable");
  EXPECT_TRUE(j.at("exact").get<bool>());
  EXPECT_EQ(j.at("payload").at("entries"), Json::parse("[[1,1],[1,-1]]"));
  auto text = run({"chartable", "--n", "3", "--format", "text"});
  EXPECT_NE(text.out.find("(2,1)"), std::string::npos);
}

TEST(Cli, CycleAuto) {
  auto p = payload(run({"sample", "cycle-auto", "--n", "4"}));
  const auto& probs = p.at("probabilities");
  for (auto it = probs.begin(); it != probs.end(); ++it) EXPECT_EQ(it.value(), it.key() == "trivial" ? "1/3" : "0");
  EXPECT_EQ(p.at("distribution").at("total"), "1/3");
  EXPECT_FALSE(p.at("distribution").at("normalized").get<bool>());

  auto o = run({"sample", "cycle-auto", "--n", "6", "--oracle"});
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_TRUE(payload(o).at("oracle").at("agrees").get<bool>());
  auto amb = run({"sample", "cycle-auto", "--n", "5", "--mode", "ambient", "--oracle"});
  EXPECT_EQ(amb.exit_code, 0);
  EXPECT_EQ(payload(amb).at("distribution").at("total"), "1");
}

TEST(Cli, SampleHsp) {
  auto o = run({"sample", "hsp", "--group", "dihedral", "--n", "8", "--subgroup", "cyclic:1"});
  ASSERT_EQ(o.exit_code, 0);
  auto p = payload(o);
  EXPECT_TRUE(p.at("agree").get<bool>());
  for (const auto& e : p.at("entries")) EXPECT_EQ(e.at("label_probability"), e.at("statevector"));
  EXPECT_EQ(run({"sample", "hsp", "--group", "cyclic", "--n", "8", "--subgroup", "full"}).exit_code, 2);
  EXPECT_EQ(run({"sample", "hsp", "--group", "dihedral", "--n", "8", "--subgroup", "cyclic:3"}).exit_code, 2);
}

TEST(Cli, GiGap) {
  auto p = payload(run({"gi-gap", "--half-n", "2"}));
  EXPECT_EQ(p.at("tv"), "1/2");
  EXPECT_TRUE(p.at("bound").at("within_bound").get<bool>());
  EXPECT_EQ(payload(run({"gi-gap", "--half-n", "1"})).at("tv"), "1");
}

TEST(Cli, ProductCatalog) {
  auto p = payload(run({"product", "catalog", "--m", "6", "--n", "6"}));
  EXPECT_EQ(p.at("size"), 64);
  EXPECT_EQ(p.at("dimension_histogram"), Json::parse(R"({"1":16,"2":32,"4":16})"));
  EXPECT_EQ(p.at("zero_character_indices").size(), 28u);
  ASSERT_EQ(p.at("printed_table_mismatches").size(), 1u);
  EXPECT_EQ(p.at("printed_table_mismatches")[0].at("index"), 22);
  auto f = payload(run({"product", "failure", "--m", "3", "--n", "4"}));
  EXPECT_EQ(f.at("total"), "1/105");
}

TEST(Cli, GraphCommands) {
  auto aut = payload(run({"graph", "aut", "--cycles", "3,4"}));
  EXPECT_EQ(aut.at("order"), 48);

  auto path = std::filesystem::temp_directory_path() / "hsplab_cli_graph.txt";
  {
    std::ofstream f(path);
    f << "4 4\n1 2\n2 3\n3 4\n4 1\n";
  }
  auto fa = payload(run({"graph", "aut", "--file", path.string()}));
  EXPECT_EQ(fa.at("order"), 8);
  auto red = payload(run({"graph", "ga2gi", "--file", path.string()}));
  EXPECT_TRUE(red.at("accepted").get<bool>());
  EXPECT_FALSE(red.at("transcript").empty());
  std::filesystem::remove(path);

  auto fam = payload(run({"graph", "family", "--m", "3", "--count", "3"}));
  EXPECT_EQ(fam.at("graph").at("n"), 12);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).exit_code, 2);
  auto bogus = run({"bogus"});
  EXPECT_EQ(bogus.exit_code, 2);
  EXPECT_NE(bogus.err.find("bogus"), std::string::npos);
  EXPECT_EQ(run({"chartable"}).exit_code, 2);
  EXPECT_EQ(run({"chartable", "--n", "x"}).exit_code, 2);
  EXPECT_EQ(run({"chartable", "--n", "3", "--frobnicate"}).exit_code, 2);
  EXPECT_EQ(run({"graph", "aut"}).exit_code, 2);
  EXPECT_EQ(run({"graph", "aut", "--file", "/nonexistent/graph.txt"}).exit_code, 2);
  EXPECT_EQ(run({"chartable", "--help"}).exit_code, 0);
}

TEST(Cli, CapacityErrorsNameTheCap) {
  auto o = run({"chartable", "--n", "13"});
  EXPECT_EQ(o.exit_code, 2);
  EXPECT_NE(o.err.find("12"), std::string::npos);
  EXPECT_EQ(run({"sample", "cycle-auto", "--n", "9", "--mode", "ambient", "--oracle"}).exit_code, 2);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"dihedral", "irreps", "--n", "5"},
                                                                {"product", "catalog", "--m", "4", "--n", "6"},
                                                                {"graph", "ga2gi", "--cycles", "3"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Cli, VerifySmallBound) {
  auto o = run({"verify", "all", "--max-n", "4", "--json"});
  EXPECT_EQ(o.exit_code, 0) << o.out;
  auto p = payload(o);
  EXPECT_EQ(p.at("passed"), p.at("total"));
  std::set<std::string> modules;
  for (const auto& r : p.at("results")) modules.insert(r.at("module").get<std::string>());
  EXPECT_EQ(modules, (std::set<std::string>{"core-algebra", "symmetric-characters", "dihedral", "rep-ops", "sampling",
                                            "graphs", "product-reps", "cli"}));
}

TEST(Binary, ExitCodesAndBytes) {
  auto a = exec("sample cycle-auto --n 4");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, exec("sample cycle-auto --n 4").out);
  EXPECT_EQ(a.out, run({"sample", "cycle-auto", "--n", "4"}).out);
  EXPECT_EQ(exec("nope").status, 2);
  EXPECT_EQ(exec("chartable --n 13").status, 2);
  EXPECT_EQ(exec("gi-gap --half-n 2").status, 0);
}
