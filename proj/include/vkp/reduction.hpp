#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vkp/calculus.hpp"
#include "vkp/context.hpp"
#include "vkp/term.hpp"

namespace vkp {

// ---------------------------------------------------------------------------
// Weak head contexts.

struct AppFrame {
  Term arg;
};
struct ProjFrame {
  int index;
};
struct CaseFrame {
  std::string binder;
  Term left;
  Term right;
};
/// hop (x : annot). [] of { y => left | y => right }
struct HarropFrame {
  std::string binder;
  Formula annot;
  std::string case_binder;
  Term left;
  Term right;
};

using Frame = std::variant<AppFrame, ProjFrame, CaseFrame, HarropFrame>;

/// A term with one hole along its weak-head spine. Frames are stored from
/// the outermost inwards; the empty context is the hole itself.
///
///   W ::= [] | W t | proj_i W | case W of {..}
///   K ::= [] | K t | proj_i K | case K of {..} | hop (x : ~B). K of {..}
template <bool AllowHarrop>
class HoleContext {
 public:
  HoleContext() = default;
  explicit HoleContext(std::vector<Frame> frames);

  const std::vector<Frame>& frames() const noexcept { return frames_; }
  bool empty() const noexcept { return frames_.empty(); }
  std::size_t size() const noexcept { return frames_.size(); }

  /// Prepends a frame inside the innermost one (closer to the hole).
  void push_inner(Frame f);
  Term plug(const Term& t) const;
  /// Child-index path from the root of plug(t) to the hole.
  Path hole_path() const;

 private:
  std::vector<Frame> frames_;
};

using WContext = HoleContext<false>;
using KContext = HoleContext<true>;

// ---------------------------------------------------------------------------
// Shape of a main premise of disjunction type.

struct IsInjection {
  int index;
  Term payload;
};
struct EfqUnderW {
  WContext w;
  Term payload;
};
struct VarAppUnderW {
  WContext w;
  std::string var;
  Term first_arg;
};
struct NotDecomposable {};

using Decomposition = std::variant<IsInjection, EfqUnderW, VarAppUnderW, NotDecomposable>;

/// inj_i t at the top, W<exfalso t>, or W<x t> where t is the first argument
/// of the head variable x (later applications are part of W).
Decomposition decompose(const Term& t);

// ---------------------------------------------------------------------------
// Rules and steps.

enum class Rule { Beta, Projection, Case, VisserInj, VisserEfq, VisserApp, HarropInj, HarropEfq };

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);

class ReductionError : public std::runtime_error {
 public:
  enum class Kind { CalculusViolation, UntypedRedex, BadPath };
  ReductionError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct TopStep {
  Rule rule;
  Term result;
};

/// One top-level rule application, or nullopt when t is not a redex. `ctx`
/// types the free variables of t; it is consulted only to annotate the
/// exfalso rebuilt by the efq rules when that needs a case branch type.
/// Throws ReductionError(CalculusViolation) on a Visser node outside V or a
/// Harrop node outside KP.
std::optional<TopStep> step_top(const Term& t, Calculus calculus, const Context& ctx = {});

struct Reduct {
  Path path;
  Rule rule;
  Term result;  // the whole term after the step
};

struct RedexSite {
  Path path;
  Rule rule;
};

/// Every position where a rule fires, in pre-order (outermost, then left to
/// right). Empty iff t is normal.
std::vector<RedexSite> redex_sites(const Term& t, Calculus calculus, const Context& ctx = {});

/// Leftmost-outermost redex, if any.
std::optional<RedexSite> first_redex(const Term& t, Calculus calculus, const Context& ctx = {});

/// Contracts the redex at `path`. Throws ReductionError(BadPath) if there is
/// none there.
Reduct reduce_at(const Term& t, const Path& path, Calculus calculus, const Context& ctx = {});

/// All one-step reducts under the structural closure.
std::vector<Reduct> step_anywhere(const Term& t, Calculus calculus, const Context& ctx = {});

bool is_normal(const Term& t, Calculus calculus, const Context& ctx = {});

/// Splits t as K<r> with r a KP redex, following the weak head contexts K.
/// Returns the contracted term, or nullopt when t is a weak head normal form.
std::optional<Reduct> step_weak_head(const Term& t, const Context& ctx = {});

// ---------------------------------------------------------------------------
// Traces.

struct TraceStep {
  Path path;
  Rule rule;
  Term before;
  Term after;
};

using ReductionTrace = std::vector<TraceStep>;

}  // namespace vkp
