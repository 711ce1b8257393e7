#include "vkp/oracle/generator.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <unordered_set>

#include "vkp/printer.hpp"
#include "vkp/typing.hpp"

namespace vkp::oracle {

namespace {

using Typed = std::pair<Term, Formula>;

std::set<std::string> names_of(const Context& ctx) {
  std::set<std::string> out;
  for (const auto& [name, type] : ctx.entries()) out.insert(name);
  return out;
}

std::string fresh(std::string_view base, const Context& ctx) { return fresh_name(base, names_of(ctx)); }

// One elimination step on a hypothesis, in a plan leading from its type to a
// goal.
struct PlanStep {
  enum Kind { Apply, Project } kind;
  int index = 0;   // Project
  Formula arg;     // Apply
};

struct Plan {
  std::vector<PlanStep> steps;
  enum Ending { Exact, CaseSplit, Absurd } ending = Exact;
  Formula reached;
};

class Generator {
 public:
  explicit Generator(const GeneratorOptions& o) : o_(o), rng_(o.seed) {
    static const char* const pool[] = {"p", "q", "r", "s"};
    const std::size_t n = std::clamp<std::size_t>(o.atom_count, 1, 4);
    for (std::size_t i = 0; i < n; ++i) atoms_.emplace_back(pool[i]);
  }

  Sample sample() {
    for (std::size_t attempt = 0; attempt < std::max<std::size_t>(o_.retries, 1); ++attempt) {
      want_admissible_ = o_.calculus != Calculus::IPC && chance(o_.admissible_share);
      const bool required = want_admissible_;
      const Context ctx = context();
      const std::size_t d = o_.max_depth;
      std::optional<Typed> got;
      if (o_.goal == GoalShape::Disjunction) {
        if (d == 0) break;
        auto inner = any(ctx, d - 1);
        if (!inner) continue;
        const Formula goal = chance(0.5) ? Formula::disj(inner->second, formula(2)) : Formula::disj(formula(2), inner->second);
        if (auto t = this->goal(ctx, goal, d)) got = Typed{*t, goal};
      } else {
        got = any(ctx, d);
      }
      if (!got) continue;
      if (required && !got->first.has_admissible()) continue;
      validate(ctx, *got);
      return Sample{ctx, got->first, got->second};
    }
    throw GenerationFailed("no term of the requested shape after " + std::to_string(o_.retries) + " attempts");
  }

 private:
  // -------------------------------------------------------------------------
  // Randomness.

  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
  bool chance(double p) { return static_cast<double>(rng_() % 1'000'000) < p * 1'000'000.0; }

  // Option indices in a random order drawn by weight.
  std::vector<int> order(std::vector<std::pair<int, double>> weighted) {
    std::vector<int> out;
    while (!weighted.empty()) {
      double total = 0;
      for (const auto& [id, w] : weighted) total += w;
      double r = static_cast<double>(rng_() % 1'000'000) / 1'000'000.0 * total;
      std::size_t pick = 0;
      for (; pick + 1 < weighted.size(); ++pick) {
        if (r < weighted[pick].second) break;
        r -= weighted[pick].second;
      }
      out.push_back(weighted[pick].first);
      weighted.erase(weighted.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
  }

  Formula atom() { return Formula::atom(atoms_[below(atoms_.size())]); }

  Formula formula(int depth) {
    if (depth <= 0 || chance(0.35)) return chance(0.08) ? Formula::falsum() : atom();
    switch (below(10)) {
      case 0:
      case 1:
      case 2:
      case 3:
        return Formula::impl(formula(depth - 1), formula(depth - 1));
      case 4:
      case 5:
      case 6:
        return Formula::conj(formula(depth - 1), formula(depth - 1));
      default:
        return Formula::disj(formula(depth - 1), formula(depth - 1));
    }
  }

  Formula implication() { return Formula::impl(formula(1), formula(1)); }

  Context context() {
    Context ctx;
    std::size_t n = 0;
    switch (o_.context) {
      case ContextShape::Closed:
        return ctx;
      case ContextShape::Any:
        n = below(4);
        break;
      case ContextShape::Implicative:
      case ContextShape::Negated:
        n = 1 + below(3);
        break;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Formula f;
      switch (o_.context) {
        case ContextShape::Implicative:
          f = implication();
          break;
        case ContextShape::Negated:
          f = Formula::negation(formula(1));
          break;
        default:
          f = formula(2);
          break;
      }
      ctx.bind(fresh("h", ctx), f);
    }
    return ctx;
  }

  // -------------------------------------------------------------------------
  // Terms of any type. Succeeds whenever d >= 1 or ctx is non-empty.

  enum AnyOption { AVar, AElim, AAbs, APair, AInj, ABeta, AProj, ACase, AAdmissible };

  std::optional<Typed> any(const Context& ctx, std::size_t d) {
    if (d > 1 && chance(0.3)) d = 1 + below(d);
    std::vector<std::pair<int, double>> options;
    if (!ctx.empty()) {
      options.push_back({AVar, 3.0});
      if (d >= 1) options.push_back({AElim, 2.5});
    }
    if (d >= 1) {
      options.push_back({AAbs, 2.0});
      options.push_back({APair, 0.8});
      options.push_back({AInj, 0.8});
    }
    if (d >= 2) {
      options.push_back({ABeta, 1.5});
      options.push_back({AProj, 0.7});
      options.push_back({ACase, 1.0});
    }
    if (admissible_allowed(d)) options.push_back({AAdmissible, want_admissible_ ? 20.0 : 0.5});

    for (int option : order(std::move(options))) {
      std::optional<Typed> r;
      switch (option) {
        case AVar: {
          const auto& e = ctx.entries()[below(ctx.size())];
          r = Typed{Term::var(e.first), e.second};
          break;
        }
        case AElim:
          r = any_elim(ctx, d);
          break;
        case AAbs: {
          const Formula a = formula(2);
          const std::string x = fresh("x", ctx);
          if (auto body = any(ctx.extended(x, a), d - 1)) {
            r = Typed{Term::abs(x, a, body->first), Formula::impl(a, body->second)};
          }
          break;
        }
        case APair: {
          auto l = any(ctx, d - 1);
          auto rr = l ? any(ctx, d - 1) : std::nullopt;
          if (rr) r = Typed{Term::pair(l->first, rr->first), Formula::conj(l->second, rr->second)};
          break;
        }
        case AInj: {
          if (auto a = any(ctx, d - 1)) {
            const Formula other = formula(2);
            if (chance(0.5)) {
              r = Typed{Term::inj(1, other, a->first), Formula::disj(a->second, other)};
            } else {
              r = Typed{Term::inj(2, other, a->first), Formula::disj(other, a->second)};
            }
          }
          break;
        }
        case ABeta: {
          auto a = any(ctx, d - 1);
          if (!a) break;
          const std::string x = fresh("w", ctx);
          if (auto body = any(ctx.extended(x, a->second), d - 2)) {
            r = Typed{Term::app(Term::abs(x, a->second, body->first), a->first), body->second};
          }
          break;
        }
        case AProj: {
          auto l = any(ctx, d - 2);
          auto rr = l ? any(ctx, d - 2) : std::nullopt;
          if (!rr) break;
          const Term p = Term::pair(l->first, rr->first);
          r = chance(0.5) ? Typed{Term::proj(1, p), l->second} : Typed{Term::proj(2, p), rr->second};
          break;
        }
        case ACase:
          r = any_case_redex(ctx, d);
          break;
        case AAdmissible:
          r = admissible(ctx, d, std::nullopt);
          break;
      }
      if (r) return r;
    }
    return std::nullopt;
  }

  std::optional<Typed> any_case_redex(const Context& ctx, std::size_t d) {
    auto a = any(ctx, d - 2);
    if (!a) return std::nullopt;
    const Formula other = chance(0.5) ? a->second : formula(2);
    const int i = chance(0.5) ? 1 : 2;
    const Term scrutinee = Term::inj(i, other, a->first);
    const Formula left = i == 1 ? a->second : other;
    const Formula right = i == 1 ? other : a->second;
    const std::string y = fresh("y", ctx);
    auto s1 = any(ctx.extended(y, left), d - 1);
    if (!s1) return std::nullopt;
    auto s2 = goal(ctx.extended(y, right), s1->second, d - 1);
    if (!s2) {
      if (s1->first.has_free(y) && !(left == right)) {
        s1 = any(ctx, d - 1);
        if (!s1) return std::nullopt;
      }
      s2 = s1->first;
    }
    return Typed{Term::case_of(scrutinee, y, s1->first, *s2), s1->second};
  }

  // A hypothesis followed by a random elimination spine.
  std::optional<Typed> any_elim(const Context& ctx, std::size_t d) {
    const auto& [name, type] = ctx.entries()[below(ctx.size())];
    const std::size_t frames = 1 + below(std::min<std::size_t>(d, 3));
    Term t = Term::var(name);
    Formula f = type;
    std::size_t used = 0;
    while (used < frames) {
      const std::size_t budget = d - frames;
      if (f.is_impl()) {
        auto arg = goal(ctx, f.left(), budget);
        if (!arg) break;
        t = Term::app(t, *arg);
        f = f.right();
      } else if (f.is_conj()) {
        const int i = chance(0.5) ? 1 : 2;
        t = Term::proj(i, t);
        f = i == 1 ? f.left() : f.right();
      } else if (f.is_disj()) {
        const std::string y = fresh("y", ctx);
        auto s1 = any(ctx.extended(y, f.left()), budget);
        if (!s1) break;
        auto s2 = goal(ctx.extended(y, f.right()), s1->second, budget);
        if (!s2) break;
        t = Term::case_of(t, y, s1->first, *s2);
        f = s1->second;
      } else if (f.is_falsum()) {
        const Formula target = formula(2);
        t = Term::exfalso(target, t);
        f = target;
        ++used;
        break;
      } else {
        break;
      }
      ++used;
    }
    if (used == 0) return std::nullopt;
    return Typed{t, f};
  }

  // -------------------------------------------------------------------------
  // Terms of a given type. May fail.

  enum GoalOption { GVar, GElim, GIntro, GBeta, GProj, GCase, GAdmissible };

  std::optional<Term> goal(const Context& ctx, const Formula& g, std::size_t d) {
    std::vector<std::pair<int, double>> options;
    options.push_back({GVar, 4.0});
    options.push_back({GElim, 2.0});
    if (d >= 1 && (g.is_impl() || g.is_conj() || g.is_disj())) options.push_back({GIntro, 3.0});
    if (d >= 2) {
      options.push_back({GBeta, 0.8});
      options.push_back({GProj, 0.4});
      options.push_back({GCase, 0.6});
    }
    if (admissible_allowed(d)) options.push_back({GAdmissible, want_admissible_ ? 20.0 : 0.4});

    for (int option : order(std::move(options))) {
      std::optional<Term> r;
      switch (option) {
        case GVar: {
          std::vector<std::string> hits;
          for (const auto& [name, type] : ctx.entries()) {
            if (type == g) hits.push_back(name);
          }
          if (!hits.empty()) r = Term::var(hits[below(hits.size())]);
          break;
        }
        case GElim:
          r = goal_elim(ctx, g, d);
          break;
        case GIntro:
          r = intro(ctx, g, d);
          break;
        case GBeta: {
          auto a = any(ctx, d - 1);
          if (!a) break;
          const std::string x = fresh("w", ctx);
          if (auto body = goal(ctx.extended(x, a->second), g, d - 2)) {
            r = Term::app(Term::abs(x, a->second, *body), a->first);
          }
          break;
        }
        case GProj: {
          auto keep = goal(ctx, g, d - 2);
          auto other = keep ? any(ctx, d - 2) : std::nullopt;
          if (!other) break;
          r = chance(0.5) ? Term::proj(1, Term::pair(*keep, other->first))
                          : Term::proj(2, Term::pair(other->first, *keep));
          break;
        }
        case GCase: {
          auto a = any(ctx, d - 2);
          if (!a) break;
          const Formula other = chance(0.6) ? a->second : formula(2);
          const int i = chance(0.5) ? 1 : 2;
          const Formula left = i == 1 ? a->second : other;
          const Formula right = i == 1 ? other : a->second;
          const std::string y = fresh("y", ctx);
          auto s1 = goal(ctx.extended(y, left), g, d - 1);
          auto s2 = s1 ? goal(ctx.extended(y, right), g, d - 1) : std::nullopt;
          if (s2) r = Term::case_of(Term::inj(i, other, a->first), y, *s1, *s2);
          break;
        }
        case GAdmissible:
          if (auto t = admissible(ctx, d, g)) r = t->first;
          break;
      }
      if (r) return r;
    }
    return std::nullopt;
  }

  std::optional<Term> intro(const Context& ctx, const Formula& g, std::size_t d) {
    if (g.is_impl()) {
      const std::string x = fresh("x", ctx);
      auto body = goal(ctx.extended(x, g.left()), g.right(), d - 1);
      if (!body) return std::nullopt;
      return Term::abs(x, g.left(), *body);
    }
    if (g.is_conj()) {
      auto l = goal(ctx, g.left(), d - 1);
      auto r = l ? goal(ctx, g.right(), d - 1) : std::nullopt;
      if (!r) return std::nullopt;
      return Term::pair(*l, *r);
    }
    if (g.is_disj()) {
      const int first = chance(0.5) ? 1 : 2;
      for (int i : {first, 3 - first}) {
        if (auto a = goal(ctx, i == 1 ? g.left() : g.right(), d - 1)) {
          return Term::inj(i, i == 1 ? g.right() : g.left(), *a);
        }
      }
    }
    return std::nullopt;
  }

  // Elimination plans from f whose result is g, ends in a case split, or
  // reaches False.
  void plans(const Formula& f, const Formula& g, std::size_t max_steps, Plan& cur, std::vector<Plan>& out) {
    if (f == g && !cur.steps.empty()) {
      Plan p = cur;
      p.ending = Plan::Exact;
      p.reached = f;
      out.push_back(p);
    }
    if (f.is_falsum()) {
      Plan p = cur;
      p.ending = Plan::Absurd;
      p.reached = f;
      out.push_back(p);
      return;
    }
    if (f.is_disj()) {
      Plan p = cur;
      p.ending = Plan::CaseSplit;
      p.reached = f;
      out.push_back(p);
    }
    if (cur.steps.size() >= max_steps) return;
    if (f.is_impl()) {
      cur.steps.push_back({PlanStep::Apply, 0, f.left()});
      plans(f.right(), g, max_steps, cur, out);
      cur.steps.pop_back();
    } else if (f.is_conj()) {
      for (int i : {1, 2}) {
        cur.steps.push_back({PlanStep::Project, i, {}});
        plans(i == 1 ? f.left() : f.right(), g, max_steps, cur, out);
        cur.steps.pop_back();
      }
    }
  }

  std::optional<Term> goal_elim(const Context& ctx, const Formula& g, std::size_t d) {
    if (d == 0) return std::nullopt;
    struct Candidate {
      std::string name;
      Plan plan;
    };
    std::vector<Candidate> candidates;
    for (const auto& [name, type] : ctx.entries()) {
      std::vector<Plan> found;
      Plan cur;
      plans(type, g, std::min<std::size_t>(d, 3), cur, found);
      for (auto& p : found) candidates.push_back({name, std::move(p)});
    }
    if (candidates.empty()) return std::nullopt;
    const Candidate& c = candidates[below(candidates.size())];
    const std::size_t m = c.plan.steps.size();
    const bool wraps = c.plan.ending != Plan::Exact;
    if (m + (wraps ? 1 : 0) > d) return std::nullopt;
    const std::size_t budget = d - m - (wraps ? 1 : 0);
    Term t = Term::var(c.name);
    for (const auto& step : c.plan.steps) {
      if (step.kind == PlanStep::Project) {
        t = Term::proj(step.index, t);
      } else {
        auto arg = goal(ctx, step.arg, budget);
        if (!arg) return std::nullopt;
        t = Term::app(t, *arg);
      }
    }
    switch (c.plan.ending) {
      case Plan::Exact:
        return t;
      case Plan::Absurd:
        return Term::exfalso(g, t);
      case Plan::CaseSplit: {
        const std::string y = fresh("y", ctx);
        auto s1 = goal(ctx.extended(y, c.plan.reached.left()), g, d - 1);
        auto s2 = s1 ? goal(ctx.extended(y, c.plan.reached.right()), g, d - 1) : std::nullopt;
        if (!s2) return std::nullopt;
        return Term::case_of(t, y, *s1, *s2);
      }
    }
    return std::nullopt;
  }

  // -------------------------------------------------------------------------
  // Visser and hop nodes.

  bool admissible_allowed(std::size_t d) const { return o_.calculus != Calculus::IPC && d >= 3; }

  std::optional<Typed> admissible(const Context& ctx, std::size_t d, const std::optional<Formula>& g) {
    auto r = o_.calculus == Calculus::V ? visser(ctx, d, g) : harrop(ctx, d, g);
    if (r) want_admissible_ = false;
    return r;
  }

  struct Main {
    Term term;
    Formula type;  // a disjunction
  };

  // inj_i m for some m typed under `inner`.
  std::optional<Main> injection_main(const Context& inner, std::size_t md) {
    auto m = any(inner, md - 1);
    if (!m) return std::nullopt;
    const Formula other = formula(1);
    if (chance(0.5)) return Main{Term::inj(1, other, m->first), Formula::disj(m->second, other)};
    return Main{Term::inj(2, other, m->first), Formula::disj(other, m->second)};
  }

  // W<head> where head proves `head_type` and W turns it into a disjunction;
  // the disjunction and the formula head_type must be chosen by the caller.
  // Returns W<head> together with the type head must have.
  struct Spine {
    Term term;
    Formula head_type;
    Formula type;
  };

  std::optional<Spine> around(const Term& head, const Context& inner, std::size_t md, std::size_t head_depth) {
    const Formula disj = Formula::disj(formula(1), formula(1));
    const std::size_t variant = below(3);
    if (variant == 1 && md >= head_depth + 1) {
      // head e
      auto e = any(inner, md - 1);
      if (e) return Spine{Term::app(head, e->first), Formula::impl(e->second, disj), disj};
    }
    if (variant == 2 && md >= head_depth + 1) {
      const Formula extra = formula(1);
      return Spine{Term::proj(1, head), Formula::conj(disj, extra), disj};
    }
    if (md >= head_depth + 1 && chance(0.3)) {
      // case head of { y => inj1 y | y => inj2 y }
      const std::string y = fresh("y", inner);
      const Term c = Term::case_of(head, y, Term::inj(1, disj.right(), Term::var(y)),
                                   Term::inj(2, disj.left(), Term::var(y)));
      return Spine{c, disj, disj};
    }
    return Spine{head, disj, disj};
  }

  // Optionally hides the main premise behind a beta redex.
  Term veil(const Term& main, const Context& inner, std::size_t spare) {
    if (spare < 2 || !chance(0.25)) return main;
    auto a = any(inner, spare - 1);
    if (!a) return main;
    const std::string w = fresh("w", inner);
    return Term::app(Term::abs(w, a->second, main), a->first);
  }

  std::optional<Typed> visser(const Context& ctx, std::size_t d, const std::optional<Formula>& g) {
    const std::size_t n = chance(0.75) ? 1 : 2;
    std::vector<Binder> binders;
    Context names_ctx = ctx;
    for (std::size_t j = 0; j < n; ++j) {
      const std::string x = fresh("x", names_ctx);
      names_ctx.bind(x, Formula::falsum());
      binders.push_back({x, implication()});
    }
    const std::size_t md = d - 1;
    const std::size_t j = below(n);
    const Term xj = Term::var(binders[j].name);
    std::optional<Main> main;
    const std::size_t kind = below(3);

    auto inner = [&]() {
      Context c;
      for (const auto& b : binders) c.bind(b.name, b.type);
      return c;
    };

    if (kind == 1 || kind == 2) {
      // x_j b under W, or exfalso (x_j b) under W.
      std::optional<Typed> b;
      if (md >= 4) b = any(Context{}, md - 3);
      if (b) {
        if (kind == 1) {
          // The type of x_j is fixed only afterwards, so the spine may not mention the binders.
          auto sp = around(Term::app(xj, b->first), Context{}, md, 1 + b->first.depth());
          binders[j].type = Formula::impl(b->second, sp->head_type);
          main = Main{sp->term, sp->type};
        } else if (md >= 2 + b->first.depth()) {
          binders[j].type = Formula::negation(b->second);
          const Term absurd = Term::app(xj, b->first);
          const Formula disj = Formula::disj(formula(1), formula(1));
          if (md >= 3 + b->first.depth() && chance(0.4)) {
            main = Main{Term::proj(1, Term::exfalso(Formula::conj(disj, formula(1)), absurd)), disj};
          } else {
            main = Main{Term::exfalso(disj, absurd), disj};
          }
        }
      }
    }
    if (main && main->term.depth() > md) main.reset();
    if (!main) main = injection_main(inner(), md);
    if (!main) return std::nullopt;
    main->term = veil(main->term, inner(), md > main->term.depth() ? md - main->term.depth() : 0);
    if (main->term.depth() > md) return std::nullopt;

    std::vector<Formula> hyps{visser_hypothesis(binders, main->type.left()),
                              visser_hypothesis(binders, main->type.right())};
    for (const auto& b : binders) hyps.push_back(visser_hypothesis(binders, b.type.left()));
    const std::string y = fresh("y", ctx);
    const std::string z = fresh("z", ctx);
    std::vector<std::string> names{y, y};
    for (std::size_t k = 0; k < n; ++k) names.push_back(z);
    auto branches = branch_terms(ctx, names, hyps, d - 1, g);
    if (!branches) return std::nullopt;
    std::vector<Term> us(branches->first.begin() + 2, branches->first.end());
    return Typed{Term::visser(binders, main->term, y, branches->first[0], branches->first[1], z, us),
                 branches->second};
  }

  std::optional<Typed> harrop(const Context& ctx, std::size_t d, const std::optional<Formula>& g) {
    const std::size_t md = d - 1;
    const std::string x = fresh("x", ctx);
    Formula negated = formula(1);
    std::optional<Main> main;
    if (chance(0.5)) {
      if (auto b = any(ctx, md >= 3 ? md - 3 : 0)) {
        negated = b->second;
        const Term absurd = Term::app(Term::var(x), b->first);
        const Formula disj = Formula::disj(formula(1), formula(1));
        const std::size_t shape = below(3);
        if (shape == 1 && md >= 3 + b->first.depth()) {
          main = Main{Term::proj(2, Term::exfalso(Formula::conj(formula(1), disj), absurd)), disj};
        } else if (shape == 2 && md >= 3 + b->first.depth()) {
          auto e = any(ctx, md - 1);
          if (e) main = Main{Term::app(Term::exfalso(Formula::impl(e->second, disj), absurd), e->first), disj};
        }
        if (!main && md >= 2 + b->first.depth()) main = Main{Term::exfalso(disj, absurd), disj};
      }
    }
    const Formula annot = Formula::negation(negated);
    const Context inner = ctx.extended(x, annot);
    if (main && main->term.depth() > md) main.reset();
    if (!main) main = injection_main(inner, md);
    if (!main) return std::nullopt;
    main->term = veil(main->term, inner, md > main->term.depth() ? md - main->term.depth() : 0);
    if (main->term.depth() > md) return std::nullopt;

    const std::string y = fresh("y", ctx);
    std::vector<Formula> hyps{Formula::impl(annot, main->type.left()), Formula::impl(annot, main->type.right())};
    auto branches = branch_terms(ctx, {y, y}, hyps, d - 1, g);
    if (!branches) return std::nullopt;
    return Typed{Term::harrop(x, annot, main->term, y, branches->first[0], branches->first[1]), branches->second};
  }

  // One term per branch hypothesis, all of the same type.
  std::optional<std::pair<std::vector<Term>, Formula>> branch_terms(const Context& ctx,
                                                                    const std::vector<std::string>& names,
                                                                    const std::vector<Formula>& hyps, std::size_t d,
                                                                    const std::optional<Formula>& g) {
    std::vector<Term> out;
    if (g) {
      for (std::size_t k = 0; k < hyps.size(); ++k) {
        auto t = goal(ctx.extended(names[k], hyps[k]), *g, d);
        if (!t) return std::nullopt;
        out.push_back(*t);
      }
      return std::make_pair(out, *g);
    }
    auto first = any(ctx.extended(names[0], hyps[0]), d);
    if (!first) return std::nullopt;
    out.push_back(first->first);
    for (std::size_t k = 1; k < hyps.size(); ++k) {
      auto t = goal(ctx.extended(names[k], hyps[k]), first->second, d);
      if (!t) {
        // Fall back to a single term that ignores every branch hypothesis.
        auto plain = any(ctx, d);
        if (!plain) return std::nullopt;
        return std::make_pair(std::vector<Term>(hyps.size(), plain->first), plain->second);
      }
      out.push_back(*t);
    }
    return std::make_pair(out, first->second);
  }

  void validate(const Context& ctx, const Typed& t) const {
    const auto inferred = try_infer(ctx, t.first, o_.calculus);
    if (!inferred || !(*inferred == t.second) || t.first.depth() > o_.max_depth) {
      throw GenerationFailed("generator produced an ill-formed sample: " + to_string(t.first) + " : " +
                             to_string(t.second));
    }
  }

  const GeneratorOptions& o_;
  std::mt19937_64 rng_;
  std::vector<std::string> atoms_;
  bool want_admissible_ = false;
};

}  // namespace

Sample generate_typed(const GeneratorOptions& options) {
  Generator g(options);
  return g.sample();
}

Sample generate_typed(Calculus calculus, std::size_t max_depth, std::size_t atom_count, std::uint64_t seed) {
  GeneratorOptions o;
  o.calculus = calculus;
  o.max_depth = max_depth;
  o.atom_count = atom_count;
  o.seed = seed;
  return generate_typed(o);
}

std::vector<Sample> shrink(const Sample& s, Calculus calculus) {
  std::vector<Term> candidates;
  // Every subterm in place of the whole term, and every node replaced by one
  // of its children or grandchildren.
  std::vector<Path> paths;
  std::vector<Path> stack{Path{}};
  while (!stack.empty()) {
    Path p = stack.back();
    stack.pop_back();
    const Term& sub = subterm_at(s.term, p);
    for (std::size_t i = 0; i < sub.children().size(); ++i) {
      Path q = p;
      q.push_back(i);
      stack.push_back(q);
    }
    paths.push_back(std::move(p));
  }
  for (const Path& p : paths) {
    if (!p.empty()) candidates.push_back(subterm_at(s.term, p));
    const Term& sub = subterm_at(s.term, p);
    for (std::size_t i = 0; i < sub.children().size(); ++i) {
      candidates.push_back(replace_at(s.term, p, sub.child(i)));
      for (std::size_t k = 0; k < sub.child(i).children().size(); ++k) {
        candidates.push_back(replace_at(s.term, p, sub.child(i).child(k)));
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Term& a, const Term& b) { return a.size() < b.size(); });
  std::vector<Sample> out;
  std::unordered_set<Term, AlphaHash, AlphaEq> seen;
  for (const Term& c : candidates) {
    if (c.size() >= s.term.size()) continue;
    if (!seen.insert(c).second) continue;
    if (checks(s.ctx, c, s.type, calculus)) out.push_back(Sample{s.ctx, c, s.type});
  }
  return out;
}

Sample minimize(const Sample& s, Calculus calculus, const std::function<bool(const Sample&)>& keep) {
  Sample cur = s;
  for (;;) {
    bool moved = false;
    for (const Sample& c : shrink(cur, calculus)) {
      if (keep(c)) {
        cur = c;
        moved = true;
        break;
      }
    }
    if (!moved) return cur;
  }
}

}  // namespace vkp::oracle
