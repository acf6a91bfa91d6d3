#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "builders.hpp"
#include "commands.hpp"
#include "fundament/error.hpp"
#include "workspace.hpp"

using namespace fundament;
using namespace fundament::cli;
using nlohmann::json;

namespace {

const std::string kDir = FIXTURE_DIR;

std::vector<std::string> all_fixtures() {
  return {kDir + "/intro.grp", kDir + "/modules.grp", kDir + "/extra.grp"};
}

const Workspace& ws() {
  static const Workspace w = parse_workspace(all_fixtures());
  return w;
}

std::string run(const std::string& cmd, const std::vector<std::string>& args, bool as_json = false) {
  std::ostringstream os;
  Options opts;
  opts.json = as_json;
  run_command(ws(), cmd, args, opts, os);
  return os.str();
}

std::string last_line(const std::string& s) {
  std::string t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  auto pos = t.rfind('\n');
  return pos == std::string::npos ? t : t.substr(pos + 1);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

struct Outcome {
  int code;
  std::string out;
};

Outcome shell(const std::string& args) {
  std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 512> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture_flags() {
  std::string s;
  for (const auto& f : all_fixtures()) s += "-f " + f + " ";
  return s;
}

}  // namespace

TEST(Workspace, IntroFixtureHasFiveObjects) {
  Workspace w = parse_workspace({kDir + "/intro.grp"});
  EXPECT_EQ(w.object_count(), 5u);
  EXPECT_EQ(w.group("C4")->order(), 4u);
  EXPECT_EQ(w.group("C2xC2")->order(), 4u);
  EXPECT_TRUE(w.hom("eta1").is_surjective());
}

TEST(Workspace, SmallTextAndErrors) {
  Workspace w;
  w.parse_text("group C2\ngen t = (1 2)\n\ngroup C4\ngen a = (1 2 3 4)\n\nhom eta1 : C4 -> C2\na -> t\n");
  EXPECT_EQ(w.object_count(), 3u);
  Workspace two;
  two.parse_text("group C4\ngen a = (1 2 3 4)\n\ngroup C2\ngen t = (1 2)\n");
  EXPECT_EQ(two.object_count(), 2u);

  Workspace bad;
  EXPECT_EQ(kind_of([&] { bad.parse_text("group C4\ngen a = (1 2 3 4)\n\nhom f : C4 -> C9\na -> a\n"); }),
            ErrorKind::UnknownReference);
  Workspace syntax;
  try {
    syntax.parse_text("group C4\ngen a = (1 2 3 4\n", "t.grp");
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("t.grp:2:"), std::string::npos) << e.what();
  }
  Workspace capped(3);
  EXPECT_EQ(kind_of([&] { capped.parse_text("group C4\ngen a = (1 2 3 4)\n"); }), ErrorKind::OrderCapExceeded);
}

TEST(Workspace, CoverExpressions) {
  EXPECT_EQ(ws().cover("fprod(eta1,eta1)").source()->order(), 8u);
  EXPECT_EQ(ws().cover("fprod( eta0 , eta1 )").source()->order(), 8u);
  EXPECT_EQ(ws().cover("C4->1").target()->order(), 1u);
  EXPECT_TRUE(ws().cover("id(S3)").is_isomorphism());
  EXPECT_EQ(kind_of([] { ws().cover("nope"); }), ErrorKind::UnknownReference);
  EXPECT_EQ(kind_of([] { ws().cover("C4"); }), ErrorKind::UsageError);
  EXPECT_EQ(kind_of([] { ws().cover("fprod(eta1,split3)"); }), ErrorKind::TargetMismatch);
}

TEST(Commands, BasicReports) {
  EXPECT_EQ(last_line(run("isomorphic", {"fprod(eta1,eta1)", "fprod(eta0,eta1)"})), "true");
  EXPECT_EQ(last_line(run("isomorphic", {"eta0", "eta1"})), "false");
  EXPECT_NE(run("series", {"C4->1"}).find("kernel sizes: [4, 2, 1]"), std::string::npos);
  EXPECT_NE(run("series", {"S3->1"}).find("kernel sizes: [6, 3, 1]"), std::string::npos);
  EXPECT_NE(run("h2", {"C2", "F2triv"}).find("dim_F = 1"), std::string::npos);
  EXPECT_NE(run("h2", {"C3", "F2triv3"}).find("dim_F = 0"), std::string::npos);
}

TEST(Commands, DecisionsEndInABoolean) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"dominates", {"fprod(eta1,eta1)", "eta1"}},
      {"dominates", {"eta0", "eta1"}},
      {"isomorphic", {"eta1", "eta1"}},
      {"lift", {"eta1", "id(C4)", "id(C2)"}},
      {"lift", {"eta1", "id(C4)", "eta1"}},
  };
  const std::vector<std::string> expected{"true", "false", "true", "true", "false"};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& [cmd, args] = cases[i];
    EXPECT_EQ(last_line(run(cmd, args)), expected[i]) << cmd;
    json j = json::parse(run(cmd, args, true));
    EXPECT_EQ(j.at("schema"), 1);
    EXPECT_EQ(j.at("result").get<bool>(), expected[i] == "true");
  }
}

TEST(Commands, CheckSquareReportsEachProperty) {
  EXPECT_EQ(run("check-square", {"eta0", "eta0", "id(C2)", "id(C2)"}), "semi-cartesian: true\ncartesian: false\n");
  json j = json::parse(run("check-square", {"eta0", "eta0", "id(C2)", "id(C2)"}, true));
  EXPECT_TRUE(j.at("semi_cartesian").get<bool>());
  EXPECT_FALSE(j.at("cartesian").get<bool>());
  EXPECT_TRUE(j.at("compact").is_null());
  json iso = json::parse(run("check-square", {"eta1", "id(C4)", "eta1", "id(C2)"}, true));
  EXPECT_TRUE(iso.at("cartesian").get<bool>());
}

TEST(Commands, InvariantsAndDecomposition) {
  json inv = json::parse(run("invariants", {"fprod(eta1,eta1,eta1)"}, true));
  ASSERT_EQ(inv.at("ab").size(), 1u);
  EXPECT_EQ(inv.at("ab")[0].at("mult"), 2);
  EXPECT_EQ(inv.at("ab")[0].at("supp"), json::parse(R"([["1"]])"));
  json a5 = json::parse(run("invariants", {"A5->1"}, true));
  EXPECT_EQ(a5.at("na").size(), 1u);
  json dec = json::parse(run("decompose", {"fprod(eta0,eta1)"}, true));
  EXPECT_EQ(dec.at("factors").size(), 2u);
  json fp = json::parse(run("fprod", {"eta0", "eta1"}, true));
  EXPECT_EQ(fp.at("order"), 8);
  EXPECT_EQ(fp.at("kernel").at("order"), 4);
}

TEST(Commands, UsageErrors) {
  EXPECT_EQ(kind_of([] { run("dominates", {"eta1"}); }), ErrorKind::UsageError);
  EXPECT_EQ(kind_of([] { run("frobnicate", {}); }), ErrorKind::UsageError);
  EXPECT_EQ(kind_of([] { run("invariants", {"C4->1"}); }), ErrorKind::NotFundamental);
  EXPECT_EQ(kind_of([] { run("dominates", {"eta1", "split3"}); }), ErrorKind::BaseMismatch);
  for (const auto& name : command_names())
    if (name != "fprod") EXPECT_EQ(kind_of([&] { run(name, {"a", "b", "c", "d", "e", "f"}); }), ErrorKind::UsageError) << name;
}

TEST(Json, SubgroupsRoundTrip) {
  json series = json::parse(run("series", {"C4->1"}, true));
  for (const auto& k : series.at("kernels")) {
    Subgroup s = subgroup_from_json(ws(), k);
    EXPECT_EQ(s.size(), k.at("order").get<std::size_t>());
    EXPECT_EQ(subgroup_to_json(s, k.at("group").get<std::string>()), k);
  }
  json fp = json::parse(run("fprod", {"eta1", "eta1"}, true));
  for (const auto& k : fp.at("axis_kernels")) EXPECT_EQ(subgroup_to_json(subgroup_from_json(ws(), k), k.at("group")), k);
}

TEST(Json, HomsRoundTrip) {
  const GroupHom& eta1 = ws().hom("eta1");
  json j = hom_to_json(eta1, "C4", "C2");
  EXPECT_EQ(hom_from_json(ws(), j), eta1);
  Cover pi = ws().cover("fprod(eta0,eta1)");
  json k = hom_to_json(pi.hom(), "fprod(eta0,eta1)", "C2");
  EXPECT_EQ(hom_from_json(ws(), k).table(), pi.hom().table());
  json bad = j;
  bad["images"][1] = 0;
  EXPECT_EQ(kind_of([&] { hom_from_json(ws(), bad); }), ErrorKind::NotHomomorphism);
}

TEST(Binary, ExitCodesAndOutput) {
  Outcome ok = shell(fixture_flags() + "isomorphic 'fprod(eta1,eta1)' 'fprod(eta0,eta1)'");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(last_line(ok.out), "true");
  Outcome js = shell(fixture_flags() + "--json series 'C4->1'");
  EXPECT_EQ(js.code, 0);
  EXPECT_EQ(json::parse(js.out).at("kernel_sizes"), json::parse("[4, 2, 1]"));
  Outcome unknown = shell(fixture_flags() + "series nothere");
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.out.find("UnknownReference"), std::string::npos);
  Outcome usage = shell(fixture_flags() + "frobnicate");
  EXPECT_EQ(usage.code, 1);
  Outcome missing = shell("-f " + kDir + "/does-not-exist.grp series 'C4->1'");
  EXPECT_NE(missing.code, 0);
  Outcome cap = shell(fixture_flags() + "--max-order 10 series 'C4->1'");
  EXPECT_EQ(cap.code, 1);
  EXPECT_NE(cap.out.find("OrderCapExceeded"), std::string::npos);
}
