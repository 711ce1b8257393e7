#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vkp/calculus.hpp"
#include "vkp/formula.hpp"
#include "vkp/term.hpp"

namespace vkp {

struct Declaration {
  std::string name;
  Formula claimed;
  /// Body with references to earlier declarations already inlined.
  Term body;
  Calculus calculus;
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Contents of a .vkp file:
///
///   -- line comment
///   calculus KP
///   def name : FORMULA := TERM
///
/// Declarations take the calculus of the closest preceding pragma (IPC when
/// there is none). Names are unique; a later body may mention an earlier
/// declaration by name.
struct ProofScript {
  std::vector<Declaration> declarations;

  const Declaration* find(std::string_view name) const;
};

/// Throws ParseError.
ProofScript parse_script(std::string_view input);

}  // namespace vkp
