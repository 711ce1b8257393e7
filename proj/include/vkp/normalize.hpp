#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "vkp/calculus.hpp"
#include "vkp/context.hpp"
#include "vkp/formula.hpp"
#include "vkp/reduction.hpp"
#include "vkp/term.hpp"

namespace vkp {

class NormalizeError : public std::runtime_error {
 public:
  enum class Kind { PreconditionViolation, BudgetExceeded, InternalError };

  NormalizeError(Kind kind, const std::string& message, std::optional<Term> last = std::nullopt)
      : std::runtime_error(message), kind_(kind), last_(std::move(last)) {}

  Kind kind() const noexcept { return kind_; }
  /// The term reached when the budget ran out.
  const std::optional<Term>& last_term() const noexcept { return last_; }

 private:
  Kind kind_;
  std::optional<Term> last_;
};

/// 10^6, or the value of VKP_BUDGET when it holds a positive integer.
std::size_t default_budget();

struct NormalizeOptions {
  std::size_t budget = default_budget();
  /// When set, every step is appended with its root-level path and the
  /// whole term before and after.
  ReductionTrace* trace = nullptr;
};

/// Leftmost-outermost reduction to the IPC normal form. t must type-check in
/// IPC under ctx.
Term eval_ipc(const Term& t, const Context& ctx = {}, const NormalizeOptions& options = {});

/// Structural evaluation of a V-term into an IPC normal form: children are
/// evaluated first and the node is then normalized in IPC. A Visser node
/// evaluates its main premise, evaluates only the branch that the shape of
/// that value selects, contracts the node and normalizes the reduct.
Term eval_v(const Term& t, const Context& ctx = {}, const NormalizeOptions& options = {});

/// Weak head steps until stuck, then the same procedure on every subterm
/// (binders included), repeated until no rule fires anywhere.
Term normalize_kp(const Term& t, const Context& ctx = {}, const NormalizeOptions& options = {});

/// Weak head steps only, until stuck.
Term weak_head_normalize(const Term& t, const Context& ctx = {}, const NormalizeOptions& options = {});

/// eval_ipc, eval_v or normalize_kp according to the calculus.
Term normalize(const Term& t, Calculus calculus, const Context& ctx = {}, const NormalizeOptions& options = {});

/// Contracts a uniformly chosen redex at every step until the term is normal.
Term normalize_random(const Term& t, Calculus calculus, std::uint64_t seed, const Context& ctx = {},
                      const NormalizeOptions& options = {});

enum class Side { Left, Right };

struct Disjunct {
  Side side;
  Term witness;
  /// The disjunct proved by the witness.
  Formula type;
};

/// From a closed proof of A \/ B, a closed proof of A or of B. V proofs are
/// evaluated with eval_v and give IPC witnesses.
Disjunct extract_disjunct(const Term& t, Calculus calculus, const NormalizeOptions& options = {});

}  // namespace vkp
