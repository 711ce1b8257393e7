#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "vkp/calculus.hpp"
#include "vkp/context.hpp"
#include "vkp/formula.hpp"
#include "vkp/term.hpp"

namespace vkp::oracle {

struct Sample {
  Context ctx;
  Term term;
  Formula type;
};

class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ContextShape {
  /// A few hypotheses of arbitrary shape.
  Any,
  Closed,
  /// Every hypothesis is an implication.
  Implicative,
  /// Every hypothesis is a negation.
  Negated,
};

enum class GoalShape { Any, Disjunction };

struct GeneratorOptions {
  Calculus calculus = Calculus::IPC;
  /// Bound on Term::depth.
  std::size_t max_depth = 7;
  /// Atoms are drawn from the first atom_count of p, q, r, s.
  std::size_t atom_count = 4;
  std::uint64_t seed = 0;
  ContextShape context = ContextShape::Any;
  GoalShape goal = GoalShape::Any;
  /// Share of samples required to contain a visser node (V) or a hop node (KP).
  double admissible_share = 0.3;
  std::size_t retries = 200;
};

/// A well-typed term: infer(ctx, term, calculus) == type. Deterministic in
/// the options. Throws GenerationFailed.
Sample generate_typed(const GeneratorOptions& options);
Sample generate_typed(Calculus calculus, std::size_t max_depth, std::size_t atom_count, std::uint64_t seed);

/// Samples obtained by replacing one subterm with one of its own subterms,
/// keeping only those that still check at the sample's type. Smallest first.
std::vector<Sample> shrink(const Sample& s, Calculus calculus);

/// Repeatedly moves to the first shrink candidate that still satisfies
/// `keep`, until none does.
Sample minimize(const Sample& s, Calculus calculus, const std::function<bool(const Sample&)>& keep);

}  // namespace vkp::oracle
