#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vkp/calculus.hpp"
#include "vkp/context.hpp"
#include "vkp/reduction.hpp"

namespace vkp {

/// {"calculus": "KP", "steps": [{"path": [0, 1], "rule": "Beta", "before": "...", "after": "..."}]}
std::string trace_to_json(const ReductionTrace& trace, Calculus calculus, int indent = -1);

struct ParsedTrace {
  Calculus calculus = Calculus::IPC;
  ReductionTrace steps;
};

/// Throws std::invalid_argument on malformed input (including unparsable
/// terms).
ParsedTrace trace_from_json(std::string_view json);

/// Checks every step: contracting the recorded rule at the recorded path of
/// `before` gives `after` (up to alpha), and each step starts where the
/// previous one ended. Returns the first problem found.
std::optional<std::string> replay_problem(const ReductionTrace& trace, Calculus calculus, const Context& ctx = {});

}  // namespace vkp
