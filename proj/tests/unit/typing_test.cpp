#include <gtest/gtest.h>

#include "helpers.hpp"
#include "vkp/oracle/prover.hpp"
#include "vkp/printer.hpp"
#include "vkp/typing.hpp"

namespace vkp {
namespace {

using testing::F;
using testing::T;

const char* const kHarropProof =
    "fun (w : ~B -> A1 \\/ A2) => hop (x : ~B). w x of { y => inj1[~B -> A2] y | y => inj2[~B -> A1] y }";

TypeErrorKind error_of(const Context& ctx, const Term& t, Calculus c) {
  try {
    infer(ctx, t, c);
  } catch (const TypeError& e) {
    return e.kind();
  }
  ADD_FAILURE() << to_string(t) << " unexpectedly typed";
  return TypeErrorKind::TypeMismatch;
}

TEST(Infer, Identity) { EXPECT_EQ(infer({}, T("fun (x : A) => x"), Calculus::IPC), F("A -> A")); }

TEST(Infer, HarropPrinciple) {
  EXPECT_EQ(infer({}, T(kHarropProof), Calculus::KP), F("(~B -> A1 \\/ A2) -> (~B -> A1) \\/ (~B -> A2)"));
}

TEST(Infer, VisserMainMustBeClosed) {
  const Term v = Term::visser({{"x1", F("B -> C")}}, Term::app(Term::var("x1"), Term::var("w")), "y",
                              Term::var("y"), Term::var("y"), "z", {Term::var("z")});
  const Context ctx{{"w", F("D")}};
  try {
    infer(ctx, v, Calculus::V);
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_EQ(e.kind(), TypeErrorKind::VisserOpenAssumption);
    EXPECT_EQ(e.names(), std::vector<std::string>{"w"});
    std::vector<std::string> beyond;
    for (const auto& x : free_vars(v.main())) {
      if (x != "x1") beyond.push_back(x);
    }
    EXPECT_EQ(e.names(), beyond);
  }
}

TEST(Infer, VisserBranchHypotheses) {
  const Term v = T(
      "visser (x1 : B -> C, x2 : D -> E). inj2[A1] (x1 b) of"
      " { y => inj1[F0] y | y => inj2[(B -> C) -> (D -> E) -> A1] y | z => z | z => z }");
  // Main premise proves A1 \/ C only if b is in scope, which it is not.
  EXPECT_EQ(error_of({{"b", F("B")}}, v, Calculus::V), TypeErrorKind::VisserOpenAssumption);
  EXPECT_EQ(visser_hypothesis({{"x1", F("B -> C")}, {"x2", F("D -> E")}}, F("X")),
            F("(B -> C) -> (D -> E) -> X"));
}

TEST(Infer, VisserClosedInstance) {
  const Term v = T(
      "visser (x1 : B -> C). inj1[A2] x1 of {"
      " y => inj1[(B -> C) -> A2] y | y => inj2[(B -> C) -> B -> C] y"
      " | z => inj1[(B -> C) -> A2] (fun (h : B -> C) => h) }");
  EXPECT_EQ(infer({}, v, Calculus::V), F("((B -> C) -> B -> C) \\/ ((B -> C) -> A2)"));
}

TEST(Check, Examples) {
  EXPECT_NO_THROW(check({}, T("fun (x : A) => x"), F("A -> A"), Calculus::IPC));
  try {
    check({}, T("fun (x : A) => x"), F("A -> B"), Calculus::IPC);
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_EQ(e.kind(), TypeErrorKind::TypeMismatch);
  }
  EXPECT_NO_THROW(check({}, T("inj1[B] (fun (x : A) => x)"), F("(A -> A) \\/ B"), Calculus::KP));
  EXPECT_TRUE(checks({}, T("inj1[B] (fun (x : A) => x)"), F("(A -> A) \\/ B"), Calculus::KP));
  EXPECT_FALSE(checks({}, T("inj1[B] (fun (x : A) => x)"), F("(A -> A) \\/ C"), Calculus::KP));
}

TEST(Infer, ErrorKinds) {
  const Context ctx{{"a", F("A")}, {"f", F("A -> B")}, {"p", F("A /\\ B")}, {"s", F("A \\/ B")}};
  EXPECT_EQ(error_of(ctx, T("q"), Calculus::IPC), TypeErrorKind::UnknownVariable);
  EXPECT_EQ(error_of(ctx, T("a a"), Calculus::IPC), TypeErrorKind::NotAnImplication);
  EXPECT_EQ(error_of(ctx, T("f f"), Calculus::IPC), TypeErrorKind::TypeMismatch);
  EXPECT_EQ(error_of(ctx, T("proj1 a"), Calculus::IPC), TypeErrorKind::NotAConjunction);
  EXPECT_EQ(error_of(ctx, T("case p of { y => y | y => y }"), Calculus::IPC), TypeErrorKind::NotADisjunction);
  EXPECT_EQ(error_of(ctx, T("case s of { y => y | y => y }"), Calculus::IPC), TypeErrorKind::BranchTypeMismatch);
  EXPECT_EQ(error_of(ctx, T("exfalso[C] a"), Calculus::IPC), TypeErrorKind::TypeMismatch);
  EXPECT_EQ(error_of({}, T(kHarropProof), Calculus::IPC), TypeErrorKind::CalculusViolation);
  EXPECT_EQ(error_of({}, T(kHarropProof), Calculus::V), TypeErrorKind::CalculusViolation);
  EXPECT_EQ(error_of({}, T("visser (x1 : B -> C). inj1[C] x1 of { y => y | y => y | z => z }"), Calculus::KP),
            TypeErrorKind::CalculusViolation);
  EXPECT_EQ(error_of({}, T("visser (x1 : B). inj1[C] x1 of { y => y | y => y | z => z }"), Calculus::V),
            TypeErrorKind::BadAnnotation);
  EXPECT_EQ(error_of(ctx, T("hop (x : B). s of { y => y | y => y }"), Calculus::KP), TypeErrorKind::BadAnnotation);
  EXPECT_EQ(error_of(ctx, T("hop (x : ~B). a of { y => y | y => y }"), Calculus::KP), TypeErrorKind::NotADisjunction);
}

TEST(Infer, HopMainMayUseTheContext) {
  const Context ctx{{"s", F("A \\/ B")}};
  EXPECT_EQ(infer(ctx, T("hop (x : ~C). s of { y => inj1[~C -> B] y | y => inj2[~C -> A] y }"), Calculus::KP),
            F("(~C -> A) \\/ (~C -> B)"));
}

TEST(Infer, BranchHypothesisTypes) {
  const Context ctx{{"s", F("A \\/ B")}};
  EXPECT_EQ(child_context(ctx, T("hop (x : ~C). s of { y => y | y => y }"), 1, Calculus::KP).lookup("y"),
            F("~C -> A"));
  EXPECT_EQ(child_context(ctx, T("hop (x : ~C). s of { y => y | y => y }"), 0, Calculus::KP).lookup("x"), F("~C"));
}

class TypingProperty : public ::testing::TestWithParam<Calculus> {};

TEST_P(TypingProperty, UniquenessWeakeningNesting) {
  const Calculus c = GetParam();
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto s = testing::sample(c, seed);
    ASSERT_EQ(infer(s.ctx, s.term, c), s.type);
    ASSERT_EQ(infer(s.ctx, s.term, c), infer(s.ctx, s.term, c));
    std::set<std::string> names = free_vars(s.term);
    for (const auto& [x, a] : s.ctx.entries()) names.insert(x);
    const std::string z = fresh_name("fresh", names);
    ASSERT_TRUE(checks(s.ctx.extended(z, F("C -> D")), s.term, s.type, c)) << to_string(s.term);
    if (!s.term.has_admissible()) {
      for (Calculus bigger : {Calculus::IPC, Calculus::V, Calculus::KP}) {
        ASSERT_TRUE(checks(s.ctx, s.term, s.type, bigger)) << to_string(s.term);
      }
    }
  }
}

TEST_P(TypingProperty, SubstitutionLemma) {
  const Calculus c = GetParam();
  std::size_t tested = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto s = testing::sample(c, seed);
    for (const auto& [x, a] : s.ctx.entries()) {
      if (!s.term.has_free(x)) continue;
      // A proof of a under a context that no longer mentions x.
      std::set<std::string> names = free_vars(s.term);
      for (const auto& e : s.ctx.entries()) names.insert(e.first);
      const std::string x2 = fresh_name(x, names);
      const Context gamma = s.ctx.erased(x).extended(x2, a);
      const Term arg = Term::app(Term::abs("v", a, Term::var("v")), Term::var(x2));
      ASSERT_TRUE(checks(gamma, arg, a, c));
      ASSERT_TRUE(checks(gamma, substitute(s.term, x, arg), s.type, c))
          << to_string(s.term) << " [" << x << " := " << to_string(arg) << "]";
      ++tested;
      if (auto closed = oracle::prove(a)) {
        ASSERT_TRUE(checks(s.ctx.erased(x), substitute(s.term, x, *closed), s.type, c));
      }
    }
  }
  EXPECT_GT(tested, 100u);
}

INSTANTIATE_TEST_SUITE_P(Calculi, TypingProperty, ::testing::Values(Calculus::IPC, Calculus::V, Calculus::KP),
                         [](const auto& info) { return std::string(calculus_name(info.param)); });

TEST(Weakening, DoesNotRelaxVisserClosedness) {
  const Term v = T("visser (x1 : B -> C). inj1[C] (x1 w) of { y => y | y => y | z => z }");
  for (const Context& ctx : {Context{}, Context{{"w", F("B")}}, Context{{"w", F("B")}, {"u", F("C")}}}) {
    EXPECT_EQ(error_of(ctx, v, Calculus::V), TypeErrorKind::VisserOpenAssumption);
  }
}

}  // namespace
}  // namespace vkp
