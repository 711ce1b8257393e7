#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>

namespace vkp {

/// Propositional formula over atoms, falsum, implication, conjunction and
/// disjunction. Negation ~A is represented as A -> False.
///
/// Formulas are immutable and cheap to copy (shared structure).
class Formula {
 public:
  enum class Kind : unsigned char { Atom, Falsum, Impl, Conj, Disj };

  /// Default-constructed formula is False.
  Formula();

  static Formula atom(std::string name);
  static Formula falsum();
  static Formula impl(Formula lhs, Formula rhs);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula negation(Formula f) { return impl(std::move(f), falsum()); }

  Kind kind() const noexcept;
  bool is_atom() const noexcept { return kind() == Kind::Atom; }
  bool is_falsum() const noexcept { return kind() == Kind::Falsum; }
  bool is_impl() const noexcept { return kind() == Kind::Impl; }
  bool is_conj() const noexcept { return kind() == Kind::Conj; }
  bool is_disj() const noexcept { return kind() == Kind::Disj; }
  bool is_negation() const noexcept;

  // Atom name; empty for other kinds.
  const std::string& name() const noexcept;
  // Operands of binary connectives. Precondition: binary kind.
  Formula left() const;
  Formula right() const;

  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  /// Atom names occurring in the formula.
  std::set<std::string> atoms() const;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend bool operator!=(const Formula& a, const Formula& b) noexcept { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

}  // namespace vkp
