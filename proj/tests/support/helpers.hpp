#pragma once

#include <string_view>

#include "vkp/oracle/generator.hpp"
#include "vkp/parser.hpp"

namespace vkp::testing {

inline Term T(std::string_view s) { return parse_term(s); }
inline Formula F(std::string_view s) { return parse_formula(s); }

inline oracle::Sample sample(Calculus calculus, std::uint64_t seed, std::size_t max_depth = 7,
                             oracle::ContextShape context = oracle::ContextShape::Any) {
  oracle::GeneratorOptions o;
  o.calculus = calculus;
  o.seed = seed;
  o.max_depth = max_depth;
  o.context = context;
  return oracle::generate_typed(o);
}

}  // namespace vkp::testing
