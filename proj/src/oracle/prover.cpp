#include "vkp/oracle/prover.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "vkp/normalize.hpp"
#include "vkp/printer.hpp"

namespace vkp::oracle {

namespace {

struct Hyp {
  std::string name;
  Formula type;
};

using Hyps = std::vector<Hyp>;

class Prover {
 public:
  explicit Prover(const ProverOptions& options) : options_(options) {}

  std::optional<Term> run(Hyps hyps, const Formula& goal) {
    if (++visited_ > options_.max_sequents) {
      throw SearchBudgetExceeded("proof search visited " + std::to_string(options_.max_sequents) + " sequents");
    }
    const std::string key = sequent_key(hyps, goal);
    if (failed_.count(key)) return std::nullopt;
    auto result = search(std::move(hyps), goal);
    if (!result) failed_.insert(key);
    return result;
  }

 private:
  std::string fresh() { return "h" + std::to_string(++names_); }

  static const Hyp* find(const Hyps& hyps, const Formula& f) {
    for (const auto& h : hyps) {
      if (h.type == f) return &h;
    }
    return nullptr;
  }

  static void add(Hyps& hyps, std::string name, Formula type) {
    if (!find(hyps, type)) hyps.push_back({std::move(name), std::move(type)});
  }

  static Hyps without(const Hyps& hyps, std::size_t i) {
    Hyps out = hyps;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
  }

  static std::string sequent_key(const Hyps& hyps, const Formula& goal) {
    std::vector<std::string> parts;
    for (const auto& h : hyps) parts.push_back(to_string(h.type));
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const auto& p : parts) key += p + ";";
    return key + "=>" + to_string(goal);
  }

  std::optional<Term> search(Hyps hyps, const Formula& goal) {
    if (const Hyp* h = find(hyps, goal)) return Term::var(h->name);
    if (const Hyp* h = find(hyps, Formula::falsum())) return Term::exfalso(goal, Term::var(h->name));

    if (goal.is_impl()) {
      const std::string x = fresh();
      add(hyps, x, goal.left());
      auto body = run(std::move(hyps), goal.right());
      if (!body) return std::nullopt;
      return Term::abs(x, goal.left(), *body);
    }
    if (goal.is_conj()) {
      auto l = run(hyps, goal.left());
      if (!l) return std::nullopt;
      auto r = run(std::move(hyps), goal.right());
      if (!r) return std::nullopt;
      return Term::pair(*l, *r);
    }

    for (std::size_t i = 0; i < hyps.size(); ++i) {
      if (auto outcome = invertible_left(hyps, i, goal)) return *outcome;
    }

    for (std::size_t i = 0; i < hyps.size(); ++i) {
      const Formula f = hyps[i].type;
      if (!f.is_impl() || !f.left().is_impl()) continue;
      // (C -> D) -> B
      const Formula c = f.left().left();
      const Formula d = f.left().right();
      const Formula b = f.right();
      const Term h = Term::var(hyps[i].name);
      Hyps left = without(hyps, i);
      const std::string k = fresh();
      add(left, k, Formula::impl(d, b));
      auto s = run(std::move(left), f.left());
      if (!s) continue;
      Hyps right = without(hyps, i);
      const std::string bn = fresh();
      add(right, bn, b);
      auto t = run(std::move(right), goal);
      if (!t) continue;
      const std::string dn = fresh();
      const std::string cn = fresh();
      const Term back = Term::abs(dn, d, Term::app(h, Term::abs(cn, c, Term::var(dn))));
      return substitute(*t, bn, Term::app(h, substitute(*s, k, back)));
    }

    if (goal.is_disj()) {
      if (auto l = run(hyps, goal.left())) return Term::inj(1, goal.right(), *l);
      if (auto r = run(std::move(hyps), goal.right())) return Term::inj(2, goal.left(), *r);
    }
    return std::nullopt;
  }

  // The invertible left rules applied to hypothesis i: nullopt when no rule
  // applies, otherwise the outcome of the rule, which settles the sequent.
  static std::optional<std::optional<Term>> failed() { return std::optional<Term>{}; }

  std::optional<std::optional<Term>> invertible_left(const Hyps& hyps, std::size_t i, const Formula& goal) {
    const Formula f = hyps[i].type;
    const Term h = Term::var(hyps[i].name);
    if (f.is_conj()) {
      Hyps next = without(hyps, i);
      const std::string c = fresh(), d = fresh();
      add(next, c, f.left());
      add(next, d, f.right());
      auto t = run(std::move(next), goal);
      if (!t) return failed();
      return substitute(substitute(*t, c, Term::proj(1, h)), d, Term::proj(2, h));
    }
    if (f.is_disj()) {
      const std::string c = fresh(), d = fresh(), y = fresh();
      Hyps l = without(hyps, i);
      add(l, c, f.left());
      auto t1 = run(std::move(l), goal);
      if (!t1) return failed();
      Hyps r = without(hyps, i);
      add(r, d, f.right());
      auto t2 = run(std::move(r), goal);
      if (!t2) return failed();
      return Term::case_of(h, y, substitute(*t1, c, Term::var(y)), substitute(*t2, d, Term::var(y)));
    }
    if (!f.is_impl()) return std::nullopt;
    const Formula a = f.left();
    const Formula b = f.right();
    if (a.is_atom()) {
      const Hyp* p = find(hyps, a);
      if (!p) return std::nullopt;
      const Term arg = Term::var(p->name);
      Hyps next = without(hyps, i);
      const std::string bn = fresh();
      add(next, bn, b);
      auto t = run(std::move(next), goal);
      if (!t) return failed();
      return substitute(*t, bn, Term::app(h, arg));
    }
    if (a.is_falsum()) return std::optional<std::optional<Term>>{run(without(hyps, i), goal)};
    if (a.is_conj()) {
      Hyps next = without(hyps, i);
      const std::string k = fresh();
      add(next, k, Formula::impl(a.left(), Formula::impl(a.right(), b)));
      auto t = run(std::move(next), goal);
      if (!t) return failed();
      const std::string c = fresh(), d = fresh();
      const Term curried =
          Term::abs(c, a.left(), Term::abs(d, a.right(), Term::app(h, Term::pair(Term::var(c), Term::var(d)))));
      return substitute(*t, k, curried);
    }
    if (a.is_disj()) {
      Hyps next = without(hyps, i);
      const std::string k1 = fresh(), k2 = fresh();
      add(next, k1, Formula::impl(a.left(), b));
      add(next, k2, Formula::impl(a.right(), b));
      auto t = run(std::move(next), goal);
      if (!t) return failed();
      const std::string c = fresh(), d = fresh();
      const Term left = Term::abs(c, a.left(), Term::app(h, Term::inj(1, a.right(), Term::var(c))));
      const Term right = Term::abs(d, a.right(), Term::app(h, Term::inj(2, a.left(), Term::var(d))));
      return substitute(substitute(*t, k1, left), k2, right);
    }
    return std::nullopt;
  }

  const ProverOptions& options_;
  std::size_t visited_ = 0;
  std::size_t names_ = 0;
  std::unordered_set<std::string> failed_;
};

}  // namespace

std::optional<Term> prove(const Formula& a, const ProverOptions& options) {
  Prover prover(options);
  auto t = prover.run({}, a);
  if (!t) return std::nullopt;
  return eval_ipc(*t);
}

ProverResult ipc_provable(const Formula& a, const ProverOptions& options) {
  if (auto t = prove(a, options)) return Provable{*t};
  auto model = find_countermodel(a, options.countermodel);
  if (!model) {
    throw SearchBudgetExceeded("no countermodel with at most " + std::to_string(options.countermodel.max_worlds) +
                               " worlds");
  }
  if (!refutes(*model, a)) throw SearchBudgetExceeded("countermodel search returned a model that forces the formula");
  return NotProvable{std::move(*model)};
}

}  // namespace vkp::oracle
