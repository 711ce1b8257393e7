#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vkp/calculus.hpp"
#include "vkp/context.hpp"
#include "vkp/term.hpp"

// Reference implementations used to cross-check the kernel. They favour
// obviousness over speed and share no code with the functions they check.
namespace vkp::testing {

/// Nameless rendering: bound occurrences become the distance to their
/// binder, free ones keep their name. Two terms are alpha-equivalent iff
/// their renderings are equal.
std::string nameless(const Term& t);

/// Substitution by renaming every binder of t to a name used nowhere, then
/// replacing the now unambiguous free occurrences of x.
Term rename_then_replace(const Term& t, const std::string& x, const Term& s);

/// Free variables collected by walking occurrences with an explicit list of
/// names in scope.
std::set<std::string> free_vars_by_walk(const Term& t);

/// Left-hand side of a KP rule at the top of t, judged from the rule shapes
/// alone.
bool is_kp_redex_shape(const Term& t);

/// Every position of t that lies on a weak head KP context and holds a KP
/// redex, found by enumerating all positions.
std::vector<Path> k_context_redexes(const Term& t);

/// Breadth-first search of one-step reducts. nullopt when the search space
/// exceeds max_terms before `to` is found or ruled out.
std::optional<bool> reachable(const Term& from, const Term& to, Calculus calculus, const Context& ctx,
                              std::size_t max_terms);

/// Known IPC theorems.
const std::vector<std::string>& ipc_theorems();

/// Known IPC non-theorems.
const std::vector<std::string>& ipc_non_theorems();

}  // namespace vkp::testing
