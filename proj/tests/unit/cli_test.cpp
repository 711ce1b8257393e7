#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>

#include "vkp/parser.hpp"
#include "vkp/trace.hpp"

#ifndef VKP_CLI
#error "VKP_CLI must name the vkp executable"
#endif

namespace {

struct CliRun {
  int status;
  std::string output;
};

// Runs the CLI with stderr folded into stdout.
CliRun vkp(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + " " + std::string(VKP_CLI) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return std::string(VKP_TEST_DATA) + "/" + name; }

TEST(CliCheck, HarropScriptInKp) {
  const CliRun r = vkp("check " + data("harrop.vkp") + " --calculus KP");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("harrop : OK ((~B -> A1 \\/ A2) -> (~B -> A1) \\/ (~B -> A2))"), std::string::npos)
      << r.output;
  EXPECT_NE(r.output.find("4 of 4 declarations OK"), std::string::npos);
}

TEST(CliCheck, HarropScriptInIpc) {
  const CliRun r = vkp("check " + data("harrop.vkp") + " --calculus IPC");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.output.find("CalculusViolation"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("harrop.vkp:4:1: harrop"), std::string::npos) << r.output;
}

TEST(CliCheck, EmptyFile) {
  const CliRun r = vkp("check " + data("empty.vkp"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.output.find("0 of 0 declarations OK"), std::string::npos) << r.output;
}

TEST(CliCheck, Failures) {
  CliRun r = vkp("check " + data("broken.vkp"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.output.find("id : OK (A -> A)"), std::string::npos);
  EXPECT_NE(r.output.find("wrong : TypeMismatch"), std::string::npos) << r.output;
  r = vkp("check " + data("syntax_error.vkp"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.output.find("syntax_error.vkp:2:1:"), std::string::npos) << r.output;
  r = vkp("check " + data("does_not_exist.vkp"));
  EXPECT_EQ(r.status, 2);
  r = vkp("check " + data("harrop.vkp") + " " + data("does_not_exist.vkp"));
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.output.find("harrop : OK"), std::string::npos);
}

TEST(CliNormalize, TraceNamesRules) {
  const CliRun r = vkp("normalize " + data("harrop.vkp") + " harrop_right --trace");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("step 1: Beta at []"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("Harrop-inj at []"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("inj2[~B -> A1] (fun (x : ~B) => fun (b : B) => b)"), std::string::npos) << r.output;
}

TEST(CliNormalize, Strategies) {
  CliRun r = vkp("normalize " + data("visser.vkp") + " v_efq --strategy evalV --trace");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("Visser-efq"), std::string::npos) << r.output;
  r = vkp("normalize " + data("visser.vkp") + " v_app --strategy evalV");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_EQ(r.output.find("visser"), std::string::npos) << r.output;
  r = vkp("normalize " + data("harrop.vkp") + " harrop_left --strategy weakhead");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_EQ(r.output.rfind("fun (p : ~B -> A1) =>", 0), 0u) << r.output;
  r = vkp("normalize " + data("harrop.vkp") + " harrop_absurd --strategy random --seed 3");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("exfalso[A1]"), std::string::npos) << r.output;
}

TEST(CliNormalize, JsonTraceReplays) {
  for (const auto& [file, name] : std::vector<std::pair<std::string, std::string>>{
           {"harrop.vkp", "harrop_right"}, {"harrop.vkp", "harrop_absurd"}, {"visser.vkp", "v_inj"},
           {"visser.vkp", "v_app"}, {"visser.vkp", "v_efq"}}) {
    const CliRun r = vkp("normalize " + data(file) + " " + name + " --json");
    ASSERT_EQ(r.status, 0) << r.output;
    const vkp::ParsedTrace t = vkp::trace_from_json(r.output);
    EXPECT_EQ(vkp::replay_problem(t.steps, t.calculus), std::nullopt) << name;
    EXPECT_FALSE(t.steps.empty()) << name;
  }
}

TEST(CliNormalize, Failures) {
  CliRun r = vkp("normalize " + data("harrop.vkp") + " nothing");
  EXPECT_EQ(r.status, 1);
  r = vkp("normalize " + data("harrop.vkp") + " harrop_right", "VKP_BUDGET=1");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.output.find("BudgetExceeded"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("last term: "), std::string::npos) << r.output;
  r = vkp("normalize " + data("harrop.vkp") + " harrop --calculus V");
  EXPECT_EQ(r.status, 1);
  r = vkp("normalize missing.vkp harrop");
  EXPECT_EQ(r.status, 2);
}

TEST(CliExtract, Sides) {
  CliRun r = vkp("extract " + data("harrop.vkp") + " harrop_right");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_EQ(r.output.rfind("Right\n", 0), 0u) << r.output;
  EXPECT_NE(r.output.find(" : ~B -> B -> B"), std::string::npos);
  r = vkp("extract " + data("visser.vkp") + " v_inj");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_EQ(r.output.rfind("Left\n", 0), 0u) << r.output;
  r = vkp("extract " + data("harrop.vkp") + " harrop");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.output.find("PreconditionViolation"), std::string::npos) << r.output;
}

TEST(CliProve, ProofsAndCountermodels) {
  CliRun r = vkp("prove 'A -> A'");
  EXPECT_EQ(r.status, 0);
  ASSERT_EQ(r.output.rfind("provable\n", 0), 0u) << r.output;
  EXPECT_TRUE(vkp::alpha_eq(vkp::parse_term(r.output.substr(9)), vkp::parse_term("fun (x : A) => x"))) << r.output;
  r = vkp("prove '(~B -> A1 \\/ A2) -> (~B -> A1) \\/ (~B -> A2)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.output.rfind("not provable\nworlds ", 0), 0u) << r.output;
  EXPECT_NE(r.output.find("valuation"), std::string::npos);
  r = vkp("prove '((A -> B) -> A) -> A'");
  EXPECT_EQ(r.output.rfind("not provable\nworlds 2", 0), 0u) << r.output;
  r = vkp("prove 'A ->'");
  EXPECT_EQ(r.status, 1);
  r = vkp("prove '(~B -> A1 \\/ A2) -> (~B -> A1) \\/ (~B -> A2)' --max-worlds 1");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.output.find("SearchBudgetExceeded"), std::string::npos) << r.output;
}

TEST(Cli, Usage) {
  EXPECT_NE(vkp("").status, 0);
  EXPECT_EQ(vkp("--help").status, 0);
  EXPECT_NE(vkp("check").status, 0);
}

}  // namespace
