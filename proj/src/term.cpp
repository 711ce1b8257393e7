#include "vkp/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace vkp {

struct Term::Node {
  TermKind kind;
  std::string name;
  int index = 0;
  Formula annotation;
  std::vector<Binder> binders;
  std::string case_binder;
  std::string u_binder;
  std::vector<Term> children;
  std::set<std::string> fv;
  std::size_t size = 1;
  std::size_t depth = 0;
  bool admissible = false;
};

namespace {

const std::vector<Binder> kNoBinders;
const std::string kEmpty;

// A binder name together with the children it scopes over.
struct Slot {
  std::string name;
  std::vector<std::size_t> children;
};

std::vector<Slot> slots(const Term& t) {
  std::vector<Slot> out;
  switch (t.kind()) {
    case TermKind::Abs:
      out.push_back({t.binders()[0].name, {0}});
      break;
    case TermKind::Case:
      out.push_back({t.case_binder(), {1, 2}});
      break;
    case TermKind::Harrop:
      out.push_back({t.binders()[0].name, {0}});
      out.push_back({t.case_binder(), {1, 2}});
      break;
    case TermKind::Visser: {
      for (const auto& b : t.binders()) out.push_back({b.name, {0}});
      out.push_back({t.case_binder(), {1, 2}});
      Slot z{t.u_binder(), {}};
      for (std::size_t j = 0; j < t.arity(); ++j) z.children.push_back(3 + j);
      out.push_back(std::move(z));
      break;
    }
    default:
      break;
  }
  return out;
}

// Same node kind, new slot names (in slots() order) and children.
Term rebuild(const Term& t, const std::vector<std::string>& names, std::vector<Term> c) {
  switch (t.kind()) {
    case TermKind::Abs:
      return Term::abs(names[0], t.annotation(), std::move(c[0]));
    case TermKind::Case:
      return Term::case_of(std::move(c[0]), names[0], std::move(c[1]), std::move(c[2]));
    case TermKind::Harrop:
      return Term::harrop(names[0], t.annotation(), std::move(c[0]), names[1], std::move(c[1]), std::move(c[2]));
    case TermKind::Visser: {
      const std::size_t n = t.arity();
      std::vector<Binder> bs = t.binders();
      for (std::size_t i = 0; i < n; ++i) bs[i].name = names[i];
      std::vector<Term> us(std::make_move_iterator(c.begin() + 3), std::make_move_iterator(c.end()));
      return Term::visser(std::move(bs), std::move(c[0]), names[n], std::move(c[1]), std::move(c[2]), names[n + 1],
                          std::move(us));
    }
    default:
      return t.with_children(std::move(c));
  }
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::make(Node node) {
  std::size_t size = 1;
  std::size_t depth = 0;
  bool admissible = node.kind == TermKind::Visser || node.kind == TermKind::Harrop;
  std::set<std::string> fv;
  if (node.kind == TermKind::Var) fv.insert(node.name);
  auto node_ptr = std::make_shared<Node>(std::move(node));
  Term t(node_ptr);
  for (std::size_t i = 0; i < node_ptr->children.size(); ++i) {
    const Term& c = node_ptr->children[i];
    size += c.size();
    depth = std::max(depth, c.depth());
    admissible = admissible || c.has_admissible();
    const auto bound = t.bound_in_child(i);
    for (const auto& v : c.free_vars()) {
      if (std::find(bound.begin(), bound.end(), v) == bound.end()) fv.insert(v);
    }
  }
  node_ptr->fv = std::move(fv);
  node_ptr->size = size;
  node_ptr->depth = node_ptr->children.empty() ? 0 : depth + 1;
  node_ptr->admissible = admissible;
  return t;
}

Term Term::var(std::string name) {
  Node n;
  n.kind = TermKind::Var;
  n.name = std::move(name);
  return make(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  Node n;
  n.kind = TermKind::App;
  n.children = {std::move(fun), std::move(arg)};
  return make(std::move(n));
}

Term Term::abs(std::string binder, Formula annot, Term body) {
  Node n;
  n.kind = TermKind::Abs;
  n.name = binder;
  n.annotation = annot;
  n.binders = {Binder{std::move(binder), std::move(annot)}};
  n.children = {std::move(body)};
  return make(std::move(n));
}

Term Term::exfalso(Formula target, Term arg) {
  Node n;
  n.kind = TermKind::Exfalso;
  n.annotation = std::move(target);
  n.children = {std::move(arg)};
  return make(std::move(n));
}

Term Term::pair(Term fst, Term snd) {
  Node n;
  n.kind = TermKind::Pair;
  n.children = {std::move(fst), std::move(snd)};
  return make(std::move(n));
}

Term Term::proj(int index, Term arg) {
  if (index != 1 && index != 2) throw std::invalid_argument("projection index must be 1 or 2");
  Node n;
  n.kind = TermKind::Proj;
  n.index = index;
  n.children = {std::move(arg)};
  return make(std::move(n));
}

Term Term::inj(int index, Formula other, Term arg) {
  if (index != 1 && index != 2) throw std::invalid_argument("injection index must be 1 or 2");
  Node n;
  n.kind = TermKind::Inj;
  n.index = index;
  n.annotation = std::move(other);
  n.children = {std::move(arg)};
  return make(std::move(n));
}

Term Term::case_of(Term scrutinee, std::string binder, Term left, Term right) {
  Node n;
  n.kind = TermKind::Case;
  n.case_binder = std::move(binder);
  n.children = {std::move(scrutinee), std::move(left), std::move(right)};
  return make(std::move(n));
}

Term Term::visser(std::vector<Binder> binders, Term main, std::string case_binder, Term left, Term right,
                  std::string u_binder, std::vector<Term> us) {
  if (binders.empty() || binders.size() != us.size()) {
    throw std::invalid_argument("visser: binder list and u-branch list must have the same length n >= 1");
  }
  Node n;
  n.kind = TermKind::Visser;
  n.binders = std::move(binders);
  n.case_binder = std::move(case_binder);
  n.u_binder = std::move(u_binder);
  n.children.reserve(3 + us.size());
  n.children.push_back(std::move(main));
  n.children.push_back(std::move(left));
  n.children.push_back(std::move(right));
  for (auto& u : us) n.children.push_back(std::move(u));
  return make(std::move(n));
}

Term Term::harrop(std::string binder, Formula annot, Term main, std::string case_binder, Term left, Term right) {
  Node n;
  n.kind = TermKind::Harrop;
  n.name = binder;
  n.annotation = annot;
  n.binders = {Binder{std::move(binder), std::move(annot)}};
  n.case_binder = std::move(case_binder);
  n.children = {std::move(main), std::move(left), std::move(right)};
  return make(std::move(n));
}

TermKind Term::kind() const noexcept { return node_->kind; }
const std::string& Term::name() const noexcept { return node_->name; }
int Term::index() const noexcept { return node_->index; }
const Formula& Term::annotation() const noexcept { return node_->annotation; }
const std::vector<Binder>& Term::binders() const noexcept { return node_->binders; }
const std::string& Term::case_binder() const noexcept { return node_->case_binder; }
const std::string& Term::u_binder() const noexcept { return node_->u_binder; }
std::span<const Term> Term::children() const noexcept { return node_->children; }
std::size_t Term::arity() const noexcept { return node_->kind == TermKind::Visser ? node_->binders.size() : 0; }
const std::set<std::string>& Term::free_vars() const noexcept { return node_->fv; }
bool Term::has_free(std::string_view x) const { return node_->fv.find(std::string(x)) != node_->fv.end(); }
bool Term::has_admissible() const noexcept { return node_->admissible; }
std::size_t Term::size() const noexcept { return node_->size; }
std::size_t Term::depth() const noexcept { return node_->depth; }

bool Term::contains(TermKind k) const {
  if (kind() == k) return true;
  for (const auto& c : children()) {
    if (c.contains(k)) return true;
  }
  return false;
}

std::vector<std::string> Term::bound_in_child(std::size_t i) const {
  switch (kind()) {
    case TermKind::Abs:
      return {node_->binders[0].name};
    case TermKind::Case:
      if (i >= 1) return {node_->case_binder};
      return {};
    case TermKind::Harrop:
      if (i == 0) return {node_->binders[0].name};
      return {node_->case_binder};
    case TermKind::Visser: {
      if (i == 0) {
        std::vector<std::string> out;
        for (const auto& b : node_->binders) out.push_back(b.name);
        return out;
      }
      if (i <= 2) return {node_->case_binder};
      return {node_->u_binder};
    }
    default:
      return {};
  }
}

Term Term::with_children(std::vector<Term> children) const {
  if (children.size() != node_->children.size()) throw std::invalid_argument("with_children: arity mismatch");
  Node n;
  n.kind = node_->kind;
  n.name = node_->name;
  n.index = node_->index;
  n.annotation = node_->annotation;
  n.binders = node_->binders;
  n.case_binder = node_->case_binder;
  n.u_binder = node_->u_binder;
  n.children = std::move(children);
  return make(std::move(n));
}

Term Term::with_child(std::size_t i, Term child) const {
  std::vector<Term> c(children().begin(), children().end());
  c.at(i) = std::move(child);
  return with_children(std::move(c));
}

std::set<std::string> free_vars(const Term& t) { return t.free_vars(); }

std::string fresh_name(std::string_view base, const std::set<std::string>& avoid) {
  std::string stem(base);
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (stem.empty()) stem = "v";
  for (std::size_t k = 1;; ++k) {
    std::string candidate = stem + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

Term substitute(const Term& t, std::string_view x, const Term& s) {
  if (!t.has_free(x)) return t;
  if (t.is(TermKind::Var)) return s;

  const auto& sfv = s.free_vars();
  std::vector<Slot> sl = slots(t);
  std::vector<std::string> names;
  for (const auto& slot : sl) names.push_back(slot.name);
  std::vector<Term> children(t.children().begin(), t.children().end());

  for (std::size_t k = 0; k < sl.size(); ++k) {
    const std::string b = names[k];
    if (b == x || !sfv.count(b)) continue;
    const bool needed = std::any_of(sl[k].children.begin(), sl[k].children.end(),
                                    [&](std::size_t c) { return children[c].has_free(x); });
    if (!needed) continue;
    std::set<std::string> avoid = sfv;
    avoid.insert(std::string(x));
    avoid.insert(names.begin(), names.end());
    for (std::size_t c : sl[k].children) avoid.insert(children[c].free_vars().begin(), children[c].free_vars().end());
    const std::string renamed = fresh_name(b, avoid);
    const Term renamed_var = Term::var(renamed);
    for (std::size_t c : sl[k].children) children[c] = substitute(children[c], b, renamed_var);
    names[k] = renamed;
  }

  for (std::size_t c = 0; c < children.size(); ++c) {
    bool bound = false;
    for (std::size_t k = 0; k < sl.size(); ++k) {
      if (names[k] == x && std::find(sl[k].children.begin(), sl[k].children.end(), c) != sl[k].children.end()) {
        bound = true;
      }
    }
    if (!bound) children[c] = substitute(children[c], x, s);
  }
  return rebuild(t, names, std::move(children));
}

namespace {

using Scope = std::vector<std::string>;

// Distance from the innermost binder, or -1 when free.
long lookup(const Scope& scope, const std::string& name) {
  for (std::size_t i = scope.size(); i-- > 0;) {
    if (scope[i] == name) return static_cast<long>(scope.size() - 1 - i);
  }
  return -1;
}

bool alpha_eq_in(const Term& a, Scope& sa, const Term& b, Scope& sb) {
  if (a.same_node(b) && sa == sb) return true;
  if (a.kind() != b.kind() || a.index() != b.index()) return false;
  if (a.children().size() != b.children().size()) return false;
  switch (a.kind()) {
    case TermKind::Var: {
      const long ia = lookup(sa, a.name());
      const long ib = lookup(sb, b.name());
      if (ia != ib) return false;
      return ia >= 0 || a.name() == b.name();
    }
    case TermKind::Abs:
    case TermKind::Exfalso:
    case TermKind::Inj:
    case TermKind::Harrop:
      if (a.annotation() != b.annotation()) return false;
      break;
    case TermKind::Visser:
      for (std::size_t i = 0; i < a.arity(); ++i) {
        if (a.binders()[i].type != b.binders()[i].type) return false;
      }
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    const auto ba = a.bound_in_child(i);
    const auto bb = b.bound_in_child(i);
    sa.insert(sa.end(), ba.begin(), ba.end());
    sb.insert(sb.end(), bb.begin(), bb.end());
    const bool ok = alpha_eq_in(a.child(i), sa, b.child(i), sb);
    sa.resize(sa.size() - ba.size());
    sb.resize(sb.size() - bb.size());
    if (!ok) return false;
  }
  return true;
}

std::size_t alpha_hash_in(const Term& t, Scope& scope) {
  std::size_t h = mix(static_cast<std::size_t>(t.kind()) * 131 + 7, static_cast<std::size_t>(t.index()));
  switch (t.kind()) {
    case TermKind::Var: {
      const long i = lookup(scope, t.name());
      return i >= 0 ? mix(h, static_cast<std::size_t>(i) * 2654435761u) : mix(h, std::hash<std::string>{}(t.name()));
    }
    case TermKind::Abs:
    case TermKind::Exfalso:
    case TermKind::Inj:
    case TermKind::Harrop:
      h = mix(h, t.annotation().hash());
      break;
    case TermKind::Visser:
      for (const auto& b : t.binders()) h = mix(h, b.type.hash());
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    const auto bound = t.bound_in_child(i);
    scope.insert(scope.end(), bound.begin(), bound.end());
    h = mix(h, alpha_hash_in(t.child(i), scope));
    scope.resize(scope.size() - bound.size());
  }
  return h;
}

}  // namespace

bool alpha_eq(const Term& a, const Term& b) {
  Scope sa;
  Scope sb;
  return alpha_eq_in(a, sa, b, sb);
}

std::size_t alpha_hash(const Term& t) {
  Scope scope;
  return alpha_hash_in(t, scope);
}

Term abstract_over(const std::vector<Binder>& binders, Term body) {
  for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = Term::abs(it->name, it->type, std::move(body));
  return body;
}

const Term& subterm_at(const Term& t, const Path& path) {
  const Term* cur = &t;
  for (std::size_t i : path) {
    if (i >= cur->children().size()) throw std::out_of_range("path does not address a subterm");
    cur = &cur->child(i);
  }
  return *cur;
}

Term replace_at(const Term& t, const Path& path, std::size_t from, const Term& replacement) {
  if (from == path.size()) return replacement;
  const std::size_t i = path[from];
  if (i >= t.children().size()) throw std::out_of_range("path does not address a subterm");
  return t.with_child(i, replace_at(t.child(i), path, from + 1, replacement));
}

}  // namespace vkp
