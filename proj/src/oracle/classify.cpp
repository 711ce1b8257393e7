#include "vkp/oracle/classify.hpp"

#include "vkp/printer.hpp"
#include "vkp/typing.hpp"

namespace vkp::oracle {

std::string_view class_name(NormalClass c) {
  switch (c) {
    case NormalClass::Abstraction:
      return "Abstraction";
    case NormalClass::VariableInCtx:
      return "VariableInCtx";
    case NormalClass::Injection:
      return "Injection";
    case NormalClass::Pair:
      return "Pair";
    case NormalClass::ArrowNeutral:
      return "ArrowNeutral";
    case NormalClass::NegNeutral:
      return "NegNeutral";
    case NormalClass::VarAppFalsum:
      return "VarAppFalsum";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(const Term& t, const Formula& type) {
  throw ClassificationFailure("normal form " + to_string(t) + " : " + to_string(type) + " matches no clause");
}

std::optional<ClassReport> by_type(const Context& ctx, const Term& t, const Formula& type) {
  switch (type.kind()) {
    case Formula::Kind::Impl:
      if (t.is(TermKind::Abs)) return ClassReport{NormalClass::Abstraction, type, std::nullopt, {}};
      if (t.is(TermKind::Var) && ctx.contains(t.name())) {
        return ClassReport{NormalClass::VariableInCtx, type, std::nullopt, t.name()};
      }
      return std::nullopt;
    case Formula::Kind::Disj:
      if (t.is(TermKind::Inj)) return ClassReport{NormalClass::Injection, type, std::nullopt, {}};
      return std::nullopt;
    case Formula::Kind::Conj:
      if (t.is(TermKind::Pair)) return ClassReport{NormalClass::Pair, type, std::nullopt, {}};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace

ClassReport classify(const Context& ctx, const Term& t, Calculus calculus) {
  const bool negated = calculus == Calculus::KP;
  if (negated ? !ctx.is_negated() : !ctx.is_implicative()) {
    throw PreconditionViolation(negated ? "context is not made of negations" : "context is not made of implications");
  }
  Formula type;
  try {
    type = infer(ctx, t, calculus);
  } catch (const TypeError& e) {
    throw PreconditionViolation(std::string("term is not typed: ") + e.what());
  }
  if (!is_normal(t, calculus, ctx)) throw PreconditionViolation("term is not normal: " + to_string(t));

  const Decomposition d = t.is(TermKind::Inj) ? Decomposition{NotDecomposable{}} : decompose(t);
  if (const auto* efq = std::get_if<EfqUnderW>(&d)) {
    return ClassReport{negated ? NormalClass::NegNeutral : NormalClass::ArrowNeutral, type, efq->w, "exfalso"};
  }
  if (const auto* va = std::get_if<VarAppUnderW>(&d); va && !negated) {
    return ClassReport{NormalClass::ArrowNeutral, type, va->w, va->var};
  }
  if (auto r = by_type(ctx, t, type)) return *r;
  if (negated && type.is_falsum() && t.is(TermKind::App) && t.fun().is(TermKind::Var)) {
    if (auto h = ctx.lookup(t.fun().name()); h && h->is_negation()) {
      return ClassReport{NormalClass::VarAppFalsum, type, std::nullopt, t.fun().name()};
    }
  }
  fail(t, type);
}

}  // namespace vkp::oracle
