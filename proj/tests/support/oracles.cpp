#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_set>

#include "vkp/printer.hpp"
#include "vkp/reduction.hpp"

namespace vkp::testing {

namespace {

using Scope = std::vector<std::string>;

std::string occurrence(const Scope& scope, const std::string& name) {
  for (std::size_t k = scope.size(); k-- > 0;) {
    if (scope[k] == name) return "#" + std::to_string(scope.size() - 1 - k);
  }
  return "'" + name;
}

std::string render(const Term& t, Scope& scope) {
  auto under = [&](const std::vector<std::string>& names, const Term& body) {
    for (const auto& n : names) scope.push_back(n);
    std::string s = render(body, scope);
    scope.resize(scope.size() - names.size());
    return s;
  };
  switch (t.kind()) {
    case TermKind::Var:
      return occurrence(scope, t.name());
    case TermKind::App:
      return "(@ " + render(t.fun(), scope) + " " + render(t.arg(), scope) + ")";
    case TermKind::Abs:
      return "(L " + to_string(t.annotation()) + " " + under({t.name()}, t.body()) + ")";
    case TermKind::Exfalso:
      return "(E " + to_string(t.annotation()) + " " + render(t.arg(), scope) + ")";
    case TermKind::Pair:
      return "(P " + render(t.child(0), scope) + " " + render(t.child(1), scope) + ")";
    case TermKind::Proj:
      return "(pi" + std::to_string(t.index()) + " " + render(t.arg(), scope) + ")";
    case TermKind::Inj:
      return "(in" + std::to_string(t.index()) + " " + to_string(t.annotation()) + " " + render(t.arg(), scope) + ")";
    case TermKind::Case:
      return "(C " + render(t.scrutinee(), scope) + " " + under({t.case_binder()}, t.left_branch()) + " " +
             under({t.case_binder()}, t.right_branch()) + ")";
    case TermKind::Harrop:
      return "(H " + to_string(t.annotation()) + " " + under({t.name()}, t.main()) + " " +
             under({t.case_binder()}, t.left_branch()) + " " + under({t.case_binder()}, t.right_branch()) + ")";
    case TermKind::Visser: {
      std::vector<std::string> xs;
      std::string s = "(V";
      for (const auto& b : t.binders()) {
        xs.push_back(b.name);
        s += " " + to_string(b.type);
      }
      s += " " + under(xs, t.main()) + " " + under({t.case_binder()}, t.left_branch()) + " " +
           under({t.case_binder()}, t.right_branch());
      for (const auto& u : t.us()) s += " " + under({t.u_binder()}, u);
      return s + ")";
    }
  }
  return "?";
}

void all_names(const Term& t, std::set<std::string>& out) {
  if (t.is(TermKind::Var) || t.is(TermKind::Abs) || t.is(TermKind::Harrop)) out.insert(t.name());
  if (t.is(TermKind::Case) || t.is(TermKind::Visser) || t.is(TermKind::Harrop)) out.insert(t.case_binder());
  if (t.is(TermKind::Visser)) {
    out.insert(t.u_binder());
    for (const auto& b : t.binders()) out.insert(b.name);
  }
  for (const auto& c : t.children()) all_names(c, out);
}

struct Renamer {
  std::set<std::string> taken;
  std::size_t next = 0;

  std::string fresh() {
    for (;;) {
      std::string n = "r" + std::to_string(++next) + "_";
      if (!taken.count(n)) return n;
    }
  }

  // Renames every binder; `env` maps names in scope to their new names.
  Term run(const Term& t, std::vector<std::pair<std::string, std::string>>& env) {
    auto lookup = [&](const std::string& n) {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == n) return it->second;
      }
      return n;
    };
    auto under = [&](const std::vector<std::pair<std::string, std::string>>& bind, const Term& body) {
      for (const auto& b : bind) env.push_back(b);
      Term r = run(body, env);
      env.resize(env.size() - bind.size());
      return r;
    };
    switch (t.kind()) {
      case TermKind::Var:
        return Term::var(lookup(t.name()));
      case TermKind::App:
        return Term::app(run(t.fun(), env), run(t.arg(), env));
      case TermKind::Abs: {
        const std::string x = fresh();
        return Term::abs(x, t.annotation(), under({{t.name(), x}}, t.body()));
      }
      case TermKind::Exfalso:
        return Term::exfalso(t.annotation(), run(t.arg(), env));
      case TermKind::Pair:
        return Term::pair(run(t.child(0), env), run(t.child(1), env));
      case TermKind::Proj:
        return Term::proj(t.index(), run(t.arg(), env));
      case TermKind::Inj:
        return Term::inj(t.index(), t.annotation(), run(t.arg(), env));
      case TermKind::Case: {
        const std::string y = fresh();
        return Term::case_of(run(t.scrutinee(), env), y, under({{t.case_binder(), y}}, t.left_branch()),
                             under({{t.case_binder(), y}}, t.right_branch()));
      }
      case TermKind::Harrop: {
        const std::string x = fresh(), y = fresh();
        return Term::harrop(x, t.annotation(), under({{t.name(), x}}, t.main()), y,
                            under({{t.case_binder(), y}}, t.left_branch()),
                            under({{t.case_binder(), y}}, t.right_branch()));
      }
      case TermKind::Visser: {
        std::vector<Binder> bs;
        std::vector<std::pair<std::string, std::string>> main_env;
        for (const auto& b : t.binders()) {
          const std::string x = fresh();
          bs.push_back({x, b.type});
          main_env.push_back({b.name, x});
        }
        const std::string y = fresh(), z = fresh();
        std::vector<Term> us;
        for (const auto& u : t.us()) us.push_back(under({{t.u_binder(), z}}, u));
        return Term::visser(bs, under(main_env, t.main()), y, under({{t.case_binder(), y}}, t.left_branch()),
                            under({{t.case_binder(), y}}, t.right_branch()), z, us);
      }
    }
    return t;
  }
};

Term replace_var(const Term& t, const std::string& x, const Term& s) {
  if (t.is(TermKind::Var)) return t.name() == x ? s : t;
  std::vector<Term> kids;
  for (const auto& c : t.children()) kids.push_back(replace_var(c, x, s));
  return t.with_children(std::move(kids));
}

void walk_free(const Term& t, Scope& scope, std::set<std::string>& out) {
  auto under = [&](const std::vector<std::string>& names, const Term& body) {
    for (const auto& n : names) scope.push_back(n);
    walk_free(body, scope, out);
    scope.resize(scope.size() - names.size());
  };
  switch (t.kind()) {
    case TermKind::Var:
      if (std::find(scope.begin(), scope.end(), t.name()) == scope.end()) out.insert(t.name());
      return;
    case TermKind::Abs:
      under({t.name()}, t.body());
      return;
    case TermKind::Case:
      walk_free(t.scrutinee(), scope, out);
      under({t.case_binder()}, t.left_branch());
      under({t.case_binder()}, t.right_branch());
      return;
    case TermKind::Harrop:
      under({t.name()}, t.main());
      under({t.case_binder()}, t.left_branch());
      under({t.case_binder()}, t.right_branch());
      return;
    case TermKind::Visser: {
      std::vector<std::string> xs;
      for (const auto& b : t.binders()) xs.push_back(b.name);
      under(xs, t.main());
      under({t.case_binder()}, t.left_branch());
      under({t.case_binder()}, t.right_branch());
      for (const auto& u : t.us()) under({t.u_binder()}, u);
      return;
    }
    default:
      for (const auto& c : t.children()) walk_free(c, scope, out);
  }
}

// W<exfalso _>: exfalso reached through function, projection and scrutinee
// positions.
bool exfalso_under_w(const Term& t) {
  if (t.is(TermKind::Exfalso)) return true;
  if (t.is(TermKind::App) || t.is(TermKind::Proj) || t.is(TermKind::Case)) return exfalso_under_w(t.child(0));
  return false;
}

bool on_k_context(const Term& root, const Path& p) {
  const Term* cur = &root;
  for (std::size_t i : p) {
    const bool frame = cur->is(TermKind::App) || cur->is(TermKind::Proj) || cur->is(TermKind::Case) ||
                       cur->is(TermKind::Harrop);
    if (!frame || i != 0) return false;
    cur = &cur->child(i);
  }
  return true;
}

void all_paths(const Term& t, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    cur.push_back(i);
    all_paths(t.child(i), cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::string nameless(const Term& t) {
  Scope scope;
  return render(t, scope);
}

Term rename_then_replace(const Term& t, const std::string& x, const Term& s) {
  Renamer r;
  all_names(t, r.taken);
  all_names(s, r.taken);
  r.taken.insert(x);
  std::vector<std::pair<std::string, std::string>> env;
  const Term renamed = r.run(t, env);
  return replace_var(renamed, x, s);
}

std::set<std::string> free_vars_by_walk(const Term& t) {
  Scope scope;
  std::set<std::string> out;
  walk_free(t, scope, out);
  return out;
}

bool is_kp_redex_shape(const Term& t) {
  switch (t.kind()) {
    case TermKind::App:
      return t.fun().is(TermKind::Abs);
    case TermKind::Proj:
      return t.arg().is(TermKind::Pair);
    case TermKind::Case:
      return t.scrutinee().is(TermKind::Inj);
    case TermKind::Harrop:
      return t.main().is(TermKind::Inj) || exfalso_under_w(t.main());
    default:
      return false;
  }
}

std::vector<Path> k_context_redexes(const Term& t) {
  std::vector<Path> paths;
  Path cur;
  all_paths(t, cur, paths);
  std::vector<Path> out;
  for (const auto& p : paths) {
    if (on_k_context(t, p) && is_kp_redex_shape(subterm_at(t, p))) out.push_back(p);
  }
  return out;
}

std::optional<bool> reachable(const Term& from, const Term& to, Calculus calculus, const Context& ctx,
                              std::size_t max_terms) {
  std::unordered_set<Term, AlphaHash, AlphaEq> seen{from};
  std::deque<Term> queue{from};
  while (!queue.empty()) {
    const Term t = queue.front();
    queue.pop_front();
    if (alpha_eq(t, to)) return true;
    for (const auto& r : step_anywhere(t, calculus, ctx)) {
      if (seen.insert(r.result).second) {
        if (seen.size() > max_terms) return std::nullopt;
        queue.push_back(r.result);
      }
    }
  }
  return false;
}

const std::vector<std::string>& ipc_theorems() {
  static const std::vector<std::string> list = {
      "A -> A",
      "A -> B -> A",
      "(A -> B -> C) -> (A -> B) -> A -> C",
      "A /\\ B -> A",
      "A /\\ B -> B",
      "A -> B -> A /\\ B",
      "A -> A \\/ B",
      "B -> A \\/ B",
      "(A -> C) -> (B -> C) -> A \\/ B -> C",
      "False -> A",
      "(A -> B) -> ~B -> ~A",
      "A -> ~~A",
      "~~~A -> ~A",
      "~(A \\/ B) -> ~A /\\ ~B",
      "~A /\\ ~B -> ~(A \\/ B)",
      "~A \\/ ~B -> ~(A /\\ B)",
      "~~(A \\/ ~A)",
      "(A -> B) /\\ (B -> C) -> A -> C",
      "A /\\ B -> B /\\ A",
      "A \\/ B -> B \\/ A",
      "A /\\ (B \\/ C) -> A /\\ B \\/ A /\\ C",
      "A /\\ B \\/ A /\\ C -> A /\\ (B \\/ C)",
      "A \\/ B /\\ C -> (A \\/ B) /\\ (A \\/ C)",
      "(A \\/ B) /\\ (A \\/ C) -> A \\/ B /\\ C",
      "(A /\\ B -> C) -> A -> B -> C",
      "(A -> B -> C) -> A /\\ B -> C",
      "(A \\/ B -> C) -> (A -> C) /\\ (B -> C)",
      "(A -> C) /\\ (B -> C) -> A \\/ B -> C",
      "(A -> B /\\ C) -> (A -> B) /\\ (A -> C)",
      "(A -> B) /\\ (A -> C) -> A -> B /\\ C",
      "~~(A -> B) -> ~~A -> ~~B",
      "~~(A /\\ B) -> ~~A /\\ ~~B",
      "(A \\/ ~A -> ~B) -> ~B",
      "((A -> B) -> A) -> (A -> B) -> B",
      "A -> (A -> B) -> B",
      "(A -> A -> B) -> A -> B",
      "~~~~A -> ~~A",
      "~~A -> ~~~~A",
      "~(A /\\ ~A)",
      "(A -> ~A) -> ~A",
      "(~A -> A) -> ~~A",
      "A \\/ B -> ~(~A /\\ ~B)",
      "(A -> B) -> A \\/ C -> B \\/ C",
      "(A -> B) -> A /\\ C -> B /\\ C",
      "(A -> B) -> (C -> A) -> C -> B",
      "A /\\ (A -> B) -> B",
      "(A \\/ B) /\\ ~A -> B",
      "~~(~~A -> A)",
      "~~((A -> B) \\/ (B -> A))",
      "((A -> B) -> C) -> B -> C",
      "(A -> B \\/ C) -> (B -> D) -> (C -> D) -> A -> D",
      "~(A -> B) -> ~B",
      "~~(((A -> B) -> A) -> A)",
      "(A /\\ B) /\\ C -> A /\\ B /\\ C",
      "A \\/ B \\/ C -> (A \\/ B) \\/ C",
      "~(A \\/ B) -> ~A",
      "~A \\/ B -> A -> B",
      "~~A /\\ ~~B -> ~~(A /\\ B)",
  };
  return list;
}

const std::vector<std::string>& ipc_non_theorems() {
  static const std::vector<std::string> list = {
      "A \\/ ~A",
      "~~A -> A",
      "((A -> B) -> A) -> A",
      "(A -> B) \\/ (B -> A)",
      "~A \\/ ~~A",
      "(~B -> A1 \\/ A2) -> (~B -> A1) \\/ (~B -> A2)",
      "(~A -> B \\/ C) -> (~A -> B) \\/ (~A -> C)",
      "~(A /\\ B) -> ~A \\/ ~B",
      "(A -> B \\/ C) -> (A -> B) \\/ (A -> C)",
      "A",
      "False",
      "(~~A -> A) -> A \\/ ~A",
  };
  return list;
}

}  // namespace vkp::testing
