#include "vkp/typing.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "vkp/printer.hpp"

namespace vkp {

std::string_view type_error_name(TypeErrorKind kind) {
  switch (kind) {
    case TypeErrorKind::UnknownVariable:
      return "UnknownVariable";
    case TypeErrorKind::NotAnImplication:
      return "NotAnImplication";
    case TypeErrorKind::NotAConjunction:
      return "NotAConjunction";
    case TypeErrorKind::NotADisjunction:
      return "NotADisjunction";
    case TypeErrorKind::BranchTypeMismatch:
      return "BranchTypeMismatch";
    case TypeErrorKind::VisserOpenAssumption:
      return "VisserOpenAssumption";
    case TypeErrorKind::CalculusViolation:
      return "CalculusViolation";
    case TypeErrorKind::TypeMismatch:
      return "TypeMismatch";
    case TypeErrorKind::BadAnnotation:
      return "BadAnnotation";
  }
  return "?";
}

Formula visser_hypothesis(const std::vector<Binder>& binders, const Formula& target) {
  Formula out = target;
  for (auto it = binders.rbegin(); it != binders.rend(); ++it) out = Formula::impl(it->type, out);
  return out;
}

namespace {

class Checker {
 public:
  explicit Checker(Calculus calculus) : calculus_(calculus) {}

  void push(const std::string& name, const Formula& type) { env_.emplace_back(name, type); }
  void pop(std::size_t n = 1) { env_.resize(env_.size() - n); }

  Formula infer(const Term& t) {
    switch (t.kind()) {
      case TermKind::Var:
        return lookup(t.name());
      case TermKind::Abs: {
        push(t.name(), t.annotation());
        Formula body = infer(t.body());
        pop();
        return Formula::impl(t.annotation(), body);
      }
      case TermKind::App: {
        const Formula f = infer(t.fun());
        if (!f.is_impl()) {
          throw TypeError(TypeErrorKind::NotAnImplication,
                          "applied term " + to_string(t.fun()) + " has type " + to_string(f) + ", not an implication");
        }
        const Formula a = infer(t.arg());
        if (a != f.left()) {
          throw TypeError(TypeErrorKind::TypeMismatch, "argument " + to_string(t.arg()) + " has type " + to_string(a) +
                                                           ", expected " + to_string(f.left()));
        }
        return f.right();
      }
      case TermKind::Exfalso: {
        const Formula a = infer(t.arg());
        if (!a.is_falsum()) {
          throw TypeError(TypeErrorKind::TypeMismatch,
                          "exfalso argument " + to_string(t.arg()) + " has type " + to_string(a) + ", expected False");
        }
        return t.annotation();
      }
      case TermKind::Pair: {
        Formula a = infer(t.child(0));
        Formula b = infer(t.child(1));
        return Formula::conj(std::move(a), std::move(b));
      }
      case TermKind::Proj: {
        const Formula a = infer(t.arg());
        if (!a.is_conj()) {
          throw TypeError(TypeErrorKind::NotAConjunction,
                          "projected term " + to_string(t.arg()) + " has type " + to_string(a) + ", not a conjunction");
        }
        return t.index() == 1 ? a.left() : a.right();
      }
      case TermKind::Inj: {
        Formula a = infer(t.arg());
        return t.index() == 1 ? Formula::disj(std::move(a), t.annotation())
                              : Formula::disj(t.annotation(), std::move(a));
      }
      case TermKind::Case: {
        const Formula d = infer(t.scrutinee());
        if (!d.is_disj()) {
          throw TypeError(TypeErrorKind::NotADisjunction,
                          "case scrutinee " + to_string(t.scrutinee()) + " has type " + to_string(d) + ", not a disjunction");
        }
        push(t.case_binder(), d.left());
        Formula r1 = infer(t.left_branch());
        pop();
        push(t.case_binder(), d.right());
        Formula r2 = infer(t.right_branch());
        pop();
        same_branch_type(r1, r2, "case");
        return r1;
      }
      case TermKind::Harrop:
        return infer_harrop(t);
      case TermKind::Visser:
        return infer_visser(t);
    }
    throw TypeError(TypeErrorKind::BadAnnotation, "unknown term kind");
  }

 private:
  Formula lookup(const std::string& name) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
      if (it->first == name) return it->second;
    }
    throw TypeError(TypeErrorKind::UnknownVariable, "unknown variable " + name, {name});
  }

  static void same_branch_type(const Formula& a, const Formula& b, const char* what) {
    if (a != b) {
      throw TypeError(TypeErrorKind::BranchTypeMismatch,
                      std::string(what) + " branches have types " + to_string(a) + " and " + to_string(b));
    }
  }

  Formula infer_harrop(const Term& t) {
    if (calculus_ != Calculus::KP) {
      throw TypeError(TypeErrorKind::CalculusViolation,
                      "hop is not allowed in " + std::string(calculus_name(calculus_)));
    }
    const Formula& annot = t.annotation();
    if (!annot.is_negation()) {
      throw TypeError(TypeErrorKind::BadAnnotation, "hop binder must have a negated type, got " + to_string(annot));
    }
    push(t.name(), annot);
    const Formula d = infer(t.main());
    pop();
    if (!d.is_disj()) {
      throw TypeError(TypeErrorKind::NotADisjunction,
                      "hop main premise has type " + to_string(d) + ", not a disjunction");
    }
    push(t.case_binder(), Formula::impl(annot, d.left()));
    Formula r1 = infer(t.left_branch());
    pop();
    push(t.case_binder(), Formula::impl(annot, d.right()));
    Formula r2 = infer(t.right_branch());
    pop();
    same_branch_type(r1, r2, "hop");
    return r1;
  }

  Formula infer_visser(const Term& t) {
    if (calculus_ != Calculus::V) {
      throw TypeError(TypeErrorKind::CalculusViolation,
                      "visser is not allowed in " + std::string(calculus_name(calculus_)));
    }
    const auto& binders = t.binders();
    std::set<std::string> names;
    for (const auto& b : binders) {
      if (!b.type.is_impl()) {
        throw TypeError(TypeErrorKind::BadAnnotation,
                        "visser binder " + b.name + " must have an implication type, got " + to_string(b.type));
      }
      if (!names.insert(b.name).second) {
        throw TypeError(TypeErrorKind::BadAnnotation, "visser binder " + b.name + " is bound twice");
      }
    }
    std::vector<std::string> open;
    for (const auto& v : t.main().free_vars()) {
      if (!names.count(v)) open.push_back(v);
    }
    if (!open.empty()) {
      std::string list;
      for (const auto& v : open) list += (list.empty() ? "" : ", ") + v;
      throw TypeError(TypeErrorKind::VisserOpenAssumption,
                      "visser main premise uses assumptions other than its binders: " + list, open);
    }

    // The main premise is typed under exactly the visser binders.
    std::vector<std::pair<std::string, Formula>> saved;
    saved.swap(env_);
    for (const auto& b : binders) push(b.name, b.type);
    Formula d;
    try {
      d = infer(t.main());
    } catch (...) {
      env_.swap(saved);
      throw;
    }
    env_.swap(saved);
    if (!d.is_disj()) {
      throw TypeError(TypeErrorKind::NotADisjunction,
                      "visser main premise has type " + to_string(d) + ", not a disjunction");
    }

    push(t.case_binder(), visser_hypothesis(binders, d.left()));
    Formula result = infer(t.left_branch());
    pop();
    push(t.case_binder(), visser_hypothesis(binders, d.right()));
    same_branch_type(result, infer(t.right_branch()), "visser");
    pop();
    for (std::size_t j = 0; j < t.arity(); ++j) {
      push(t.u_binder(), visser_hypothesis(binders, binders[j].type.left()));
      same_branch_type(result, infer(t.us()[j]), "visser");
      pop();
    }
    return result;
  }

  Calculus calculus_;
  std::vector<std::pair<std::string, Formula>> env_;
};

}  // namespace

Formula infer(const Context& ctx, const Term& t, Calculus calculus) {
  Checker checker(calculus);
  for (const auto& [name, type] : ctx.entries()) checker.push(name, type);
  return checker.infer(t);
}

void check(const Context& ctx, const Term& t, const Formula& expected, Calculus calculus) {
  const Formula got = infer(ctx, t, calculus);
  if (got != expected) {
    throw TypeError(TypeErrorKind::TypeMismatch,
                    "term has type " + to_string(got) + ", expected " + to_string(expected));
  }
}

bool checks(const Context& ctx, const Term& t, const Formula& expected, Calculus calculus) noexcept {
  try {
    check(ctx, t, expected, calculus);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::optional<Formula> try_infer(const Context& ctx, const Term& t, Calculus calculus) noexcept {
  try {
    return infer(ctx, t, calculus);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Context child_context(const Context& ctx, const Term& t, std::size_t i, Calculus calculus) {
  switch (t.kind()) {
    case TermKind::Abs:
      return ctx.extended(t.name(), t.annotation());
    case TermKind::Case: {
      if (i == 0) return ctx;
      const auto d = try_infer(ctx, t.scrutinee(), calculus);
      if (!d || !d->is_disj()) return ctx.erased(t.case_binder());
      return ctx.extended(t.case_binder(), i == 1 ? d->left() : d->right());
    }
    case TermKind::Harrop: {
      const Context inner = ctx.extended(t.name(), t.annotation());
      if (i == 0) return inner;
      const auto d = try_infer(inner, t.main(), calculus);
      if (!d || !d->is_disj()) return ctx.erased(t.case_binder());
      return ctx.extended(t.case_binder(), Formula::impl(t.annotation(), i == 1 ? d->left() : d->right()));
    }
    case TermKind::Visser: {
      Context inner;
      for (const auto& b : t.binders()) inner.bind(b.name, b.type);
      if (i == 0) return inner;
      if (i >= 3) {
        const Formula& bj = t.binders()[i - 3].type;
        if (!bj.is_impl()) return ctx.erased(t.u_binder());
        return ctx.extended(t.u_binder(), visser_hypothesis(t.binders(), bj.left()));
      }
      const auto d = try_infer(inner, t.main(), calculus);
      if (!d || !d->is_disj()) return ctx.erased(t.case_binder());
      return ctx.extended(t.case_binder(), visser_hypothesis(t.binders(), i == 1 ? d->left() : d->right()));
    }
    default:
      return ctx;
  }
}

}  // namespace vkp
