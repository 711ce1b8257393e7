#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vkp/calculus.hpp"
#include "vkp/context.hpp"
#include "vkp/formula.hpp"
#include "vkp/reduction.hpp"
#include "vkp/term.hpp"

namespace vkp::oracle {

/// Shapes of normal forms under implicative (V) or negated (KP) contexts.
enum class NormalClass {
  Abstraction,
  VariableInCtx,
  Injection,
  Pair,
  /// W<x s> or W<exfalso s>
  ArrowNeutral,
  /// W<exfalso s>
  NegNeutral,
  /// x s of type False with x bound to a negation in the context
  VarAppFalsum,
};

std::string_view class_name(NormalClass c);

struct ClassReport {
  NormalClass kind;
  Formula type;
  /// Spine around the head, for the neutral classes.
  std::optional<WContext> w;
  /// Head variable, or "exfalso", for the neutral classes; the applied
  /// variable for VarAppFalsum.
  std::string head;
};

/// No clause of the classification applies: the term is a counterexample.
class ClassificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The term is not normal, not typed, or the context has the wrong shape.
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// IPC and V use the implicative classification, KP the negated one.
ClassReport classify(const Context& ctx, const Term& t, Calculus calculus);

}  // namespace vkp::oracle
