#pragma once

#include <string>

#include "vkp/formula.hpp"
#include "vkp/term.hpp"

namespace vkp {

/// Concrete syntax with minimal parentheses. `X -> False` prints as `~X`.
std::string to_string(const Formula& f);

/// Concrete syntax accepted by parse_term; re-parses to an alpha-equivalent
/// term.
std::string to_string(const Term& t);

}  // namespace vkp
