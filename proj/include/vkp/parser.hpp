#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vkp/formula.hpp"
#include "vkp/term.hpp"

namespace vkp {

/// Syntax error at a 1-based line/column (columns count UTF-8 code points).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found,
             std::string detail = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Formula grammar, loosest first:
///   A -> B     right associative
///   A \/ B     right associative
///   A /\ B     right associative
///   ~A         sugar for A -> False
///   atom | False | (A)
Formula parse_formula(std::string_view input);

/// Term grammar:
///   fun (x : A) ... => t
///   t s                                    application, left associative
///   (t, s)   proj1 t   proj2 t   inj1[B] t   inj2[A] t   exfalso[A] t
///   case t of { y => s1 | y => s2 }
///   hop (x : ~B). t of { y => s1 | y => s2 }
///   visser (x1 : B1 -> C1, ..., xn : Bn -> Cn). t of { y => s1 | y => s2 | z => u1 | ... | z => un }
Term parse_term(std::string_view input);

}  // namespace vkp
