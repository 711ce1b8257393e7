#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vkp/formula.hpp"

namespace vkp::oracle {

/// Finite Kripke model. World 0 is the root; `successors` lists the
/// immediate successors of each world and the order is its reflexive
/// transitive closure. `valuation[w]` holds the atoms forced at w.
struct KripkeModel {
  std::size_t worlds = 1;
  std::vector<std::vector<std::size_t>> successors;
  std::vector<std::set<std::string>> valuation;
};

/// reach[w][v] iff w <= v.
std::vector<std::vector<bool>> reachability(const KripkeModel& m);

/// Why m is not a rooted partial order with a monotone valuation, if it is
/// not one.
std::optional<std::string> model_problem(const KripkeModel& m);

/// The forcing relation, evaluated recursively on the closure of the order.
bool forces(const KripkeModel& m, std::size_t world, const Formula& a);

/// m is well formed and its root does not force a.
bool refutes(const KripkeModel& m, const Formula& a);

class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CountermodelOptions {
  std::size_t max_worlds = 6;
  /// Valuations examined before giving up.
  std::size_t max_evaluations = 50'000'000;
};

/// Smallest tree-shaped model refuting a, trying 1, 2, ... worlds. nullopt
/// when every tree up to max_worlds forces a. Throws SearchBudgetExceeded.
std::optional<KripkeModel> find_countermodel(const Formula& a, const CountermodelOptions& options = {});

/// Adjacency list followed by the valuation table.
std::string to_text(const KripkeModel& m);

}  // namespace vkp::oracle
