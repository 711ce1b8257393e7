#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vkp/formula.hpp"

namespace vkp {

enum class TermKind : unsigned char { Var, App, Abs, Exfalso, Pair, Proj, Inj, Case, Visser, Harrop };

struct Binder {
  std::string name;
  Formula type;
};

/// Proof term. Immutable, shared structure.
///
/// Every node exposes its immediate subterms through children(); the child
/// order is fixed per constructor and is the basis of tree addresses (paths):
///
///   App     [fun, arg]
///   Abs     [body]                       binds binders()[0] in body
///   Exfalso [arg]
///   Pair    [fst, snd]
///   Proj    [arg]
///   Inj     [arg]
///   Case    [scrutinee, left, right]     binds case_binder() in both branches
///   Visser  [main, left, right, u1..un]  binders() in main, case_binder() in
///                                        left/right, u_binder() in each u_j
///   Harrop  [main, left, right]          binders()[0] in main, case_binder()
///                                        in left/right
class Term {
 public:
  static Term var(std::string name);
  static Term app(Term fun, Term arg);
  static Term abs(std::string binder, Formula annot, Term body);
  static Term exfalso(Formula target, Term arg);
  static Term pair(Term fst, Term snd);
  static Term proj(int index, Term arg);
  static Term inj(int index, Formula other, Term arg);
  static Term case_of(Term scrutinee, std::string binder, Term left, Term right);
  // Throws std::invalid_argument unless binders.size() == us.size() >= 1.
  static Term visser(std::vector<Binder> binders, Term main, std::string case_binder, Term left, Term right,
                     std::string u_binder, std::vector<Term> us);
  static Term harrop(std::string binder, Formula annot, Term main, std::string case_binder, Term left,
                     Term right);

  TermKind kind() const noexcept;
  bool is(TermKind k) const noexcept { return kind() == k; }

  /// Variable name (Var) or the binder name (Abs, Harrop).
  const std::string& name() const noexcept;
  /// 1 or 2 for Proj and Inj; 0 otherwise.
  int index() const noexcept;
  /// Abs/Harrop binder type, Exfalso target, Inj's other disjunct.
  const Formula& annotation() const noexcept;
  /// Abs and Harrop: one binder. Visser: x_1..x_n. Others: empty.
  const std::vector<Binder>& binders() const noexcept;
  const std::string& case_binder() const noexcept;
  const std::string& u_binder() const noexcept;

  std::span<const Term> children() const noexcept;
  const Term& child(std::size_t i) const noexcept { return children()[i]; }
  /// Visser arity n; 0 for other kinds.
  std::size_t arity() const noexcept;

  // Named accessors; each has the obvious precondition on kind().
  const Term& fun() const noexcept { return child(0); }
  const Term& arg() const noexcept { return is(TermKind::App) ? child(1) : child(0); }
  const Term& body() const noexcept { return child(0); }
  const Term& scrutinee() const noexcept { return child(0); }
  const Term& main() const noexcept { return child(0); }
  const Term& left_branch() const noexcept { return child(1); }
  const Term& right_branch() const noexcept { return child(2); }
  std::span<const Term> us() const noexcept { return children().subspan(3); }

  /// Names bound by this node in child i.
  std::vector<std::string> bound_in_child(std::size_t i) const;

  const std::set<std::string>& free_vars() const noexcept;
  bool has_free(std::string_view x) const;
  bool is_closed() const noexcept { return free_vars().empty(); }
  /// True when a Visser or Harrop node occurs anywhere in the term.
  bool has_admissible() const noexcept;
  bool contains(TermKind k) const;
  std::size_t size() const noexcept;
  /// Longest root-to-leaf edge count; a variable has depth 0.
  std::size_t depth() const noexcept;

  /// Same node with its children replaced (binders and annotations kept).
  Term with_children(std::vector<Term> children) const;
  Term with_child(std::size_t i, Term child) const;

  /// Physical identity; use alpha_eq for term equality.
  bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Node node);
  std::shared_ptr<const Node> node_;
};

/// Free variables of t.
std::set<std::string> free_vars(const Term& t);

/// Equality up to consistent renaming of bound names. Annotations compared.
bool alpha_eq(const Term& a, const Term& b);

/// Hash invariant under alpha-renaming.
std::size_t alpha_hash(const Term& t);

struct AlphaHash {
  std::size_t operator()(const Term& t) const { return alpha_hash(t); }
};
struct AlphaEq {
  bool operator()(const Term& a, const Term& b) const { return alpha_eq(a, b); }
};

/// Capture-avoiding t[x := s].
Term substitute(const Term& t, std::string_view x, const Term& s);

/// Renaming candidate for `base` avoiding every name in `avoid`: trailing
/// digits are dropped and the smallest positive numeric suffix is appended.
std::string fresh_name(std::string_view base, const std::set<std::string>& avoid);

/// Iterated abstraction over the binders, outermost first.
Term abstract_over(const std::vector<Binder>& binders, Term body);

using Path = std::vector<std::size_t>;

const Term& subterm_at(const Term& t, const Path& path);
Term replace_at(const Term& t, const Path& path, std::size_t from, const Term& replacement);
inline Term replace_at(const Term& t, const Path& path, const Term& replacement) {
  return replace_at(t, path, 0, replacement);
}

}  // namespace vkp
