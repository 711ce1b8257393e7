#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vkp/calculus.hpp"
#include "vkp/context.hpp"
#include "vkp/formula.hpp"
#include "vkp/term.hpp"

namespace vkp {

enum class TypeErrorKind {
  UnknownVariable,
  NotAnImplication,
  NotAConjunction,
  NotADisjunction,
  BranchTypeMismatch,
  VisserOpenAssumption,
  CalculusViolation,
  TypeMismatch,
  BadAnnotation,
};

std::string_view type_error_name(TypeErrorKind kind);

class TypeError : public std::runtime_error {
 public:
  TypeError(TypeErrorKind kind, const std::string& message, std::vector<std::string> names = {})
      : std::runtime_error(message), kind_(kind), names_(std::move(names)) {}

  TypeErrorKind kind() const noexcept { return kind_; }
  /// Offending variables (UnknownVariable, VisserOpenAssumption).
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  TypeErrorKind kind_;
  std::vector<std::string> names_;
};

/// The unique formula A with ctx |- t : A in the given calculus.
/// Throws TypeError.
Formula infer(const Context& ctx, const Term& t, Calculus calculus);

/// Throws TypeError (TypeMismatch when t infers a different formula).
void check(const Context& ctx, const Term& t, const Formula& expected, Calculus calculus);

bool checks(const Context& ctx, const Term& t, const Formula& expected, Calculus calculus) noexcept;
std::optional<Formula> try_infer(const Context& ctx, const Term& t, Calculus calculus) noexcept;

/// B_1->C_1 -> ... -> B_n->C_n -> target, the hypothesis type bound by the
/// branches of a Visser node with the given binders.
Formula visser_hypothesis(const std::vector<Binder>& binders, const Formula& target);

/// Context under which child i of t is typed, given ctx for t. Branch
/// binders whose type depends on an inference that fails are left unbound.
Context child_context(const Context& ctx, const Term& t, std::size_t i, Calculus calculus);

}  // namespace vkp
