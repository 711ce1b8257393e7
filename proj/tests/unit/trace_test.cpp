#include <gtest/gtest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "vkp/normalize.hpp"
#include "vkp/printer.hpp"
#include "vkp/trace.hpp"

namespace vkp {
namespace {

using testing::F;
using testing::T;

ReductionTrace traced(const Term& t, Calculus c, const Context& ctx = {}) {
  ReductionTrace trace;
  NormalizeOptions o;
  o.trace = &trace;
  normalize(t, c, ctx, o);
  return trace;
}

TEST(TraceJson, Schema) {
  const auto trace = traced(T("((fun (x : A) => x) a, proj1 (a, a))"), Calculus::IPC, {{"a", F("A")}});
  ASSERT_EQ(trace.size(), 2u);
  const auto j = nlohmann::json::parse(trace_to_json(trace, Calculus::IPC));
  EXPECT_EQ(j["calculus"], "IPC");
  ASSERT_EQ(j["steps"].size(), 2u);
  EXPECT_EQ(j["steps"][0]["path"], nlohmann::json::array({0}));
  EXPECT_EQ(j["steps"][0]["rule"], "Beta");
  EXPECT_EQ(j["steps"][1]["rule"], "Projection");
  EXPECT_EQ(j["steps"][1]["after"], "(a, a)");
  EXPECT_TRUE(alpha_eq(T(j["steps"][0]["before"].get<std::string>()), trace[0].before));
}

TEST(TraceJson, RuleNames) {
  for (Rule r : {Rule::Beta, Rule::Projection, Rule::Case, Rule::VisserInj, Rule::VisserEfq, Rule::VisserApp,
                 Rule::HarropInj, Rule::HarropEfq}) {
    EXPECT_EQ(rule_from_name(rule_name(r)), r);
  }
  EXPECT_EQ(rule_name(Rule::VisserInj), "Visser-inj");
  EXPECT_EQ(rule_name(Rule::HarropEfq), "Harrop-efq");
  EXPECT_EQ(rule_from_name("Eta"), std::nullopt);
}

TEST(TraceJson, RoundTripAndReplay) {
  for (Calculus c : {Calculus::IPC, Calculus::V, Calculus::KP}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto s = testing::sample(c, seed);
      const auto trace = traced(s.term, c, s.ctx);
      const ParsedTrace back = trace_from_json(trace_to_json(trace, c, seed % 2 ? 2 : -1));
      ASSERT_EQ(back.calculus, c);
      ASSERT_EQ(back.steps.size(), trace.size());
      for (std::size_t k = 0; k < trace.size(); ++k) {
        ASSERT_EQ(back.steps[k].path, trace[k].path);
        ASSERT_EQ(back.steps[k].rule, trace[k].rule);
        ASSERT_TRUE(alpha_eq(back.steps[k].after, trace[k].after));
      }
      ASSERT_EQ(replay_problem(back.steps, c, s.ctx), std::nullopt);
    }
  }
}

TEST(TraceJson, Malformed) {
  EXPECT_THROW(trace_from_json("not json"), std::invalid_argument);
  EXPECT_THROW(trace_from_json(R"({"steps": 3})"), std::invalid_argument);
  EXPECT_THROW(trace_from_json(R"({"steps": [{"path": [0], "rule": "Eta", "before": "x", "after": "x"}]})"),
               std::invalid_argument);
  EXPECT_THROW(trace_from_json(R"({"steps": [{"path": [0], "rule": "Beta", "before": "fun", "after": "x"}]})"),
               std::invalid_argument);
  EXPECT_THROW(trace_from_json(R"({"calculus": "S4", "steps": []})"), std::invalid_argument);
  EXPECT_TRUE(trace_from_json(R"({"steps": []})").steps.empty());
}

TEST(Replay, DetectsTampering) {
  const Context ctx{{"a", F("A")}};
  const auto trace = traced(T("(fun (x : A) => x) ((fun (y : A) => y) a)"), Calculus::IPC, ctx);
  ASSERT_EQ(trace.size(), 2u);
  EXPECT_EQ(replay_problem(trace, Calculus::IPC, ctx), std::nullopt);

  auto wrong_rule = trace;
  wrong_rule[0].rule = Rule::Case;
  EXPECT_TRUE(replay_problem(wrong_rule, Calculus::IPC, ctx));

  auto wrong_after = trace;
  wrong_after[1].after = T("b");
  EXPECT_TRUE(replay_problem(wrong_after, Calculus::IPC, ctx));

  auto wrong_path = trace;
  wrong_path[0].path = {0};
  EXPECT_TRUE(replay_problem(wrong_path, Calculus::IPC, ctx));

  auto gap = trace;
  gap.erase(gap.begin());
  gap.insert(gap.begin(), trace[1]);
  EXPECT_TRUE(replay_problem(gap, Calculus::IPC, ctx));
}

}  // namespace
}  // namespace vkp
