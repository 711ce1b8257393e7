#include "vkp/normalize.hpp"

#include <cstdlib>
#include <random>

#include "vkp/typing.hpp"

namespace vkp {

std::size_t default_budget() {
  constexpr std::size_t fallback = 1'000'000;
  const char* env = std::getenv("VKP_BUDGET");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) return fallback;
  return static_cast<std::size_t>(v);
}

namespace {

Path joined(const Path& prefix, const Path& suffix) {
  Path p = prefix;
  p.insert(p.end(), suffix.begin(), suffix.end());
  return p;
}

void require_typed(const Term& t, const Context& ctx, Calculus calculus) {
  try {
    infer(ctx, t, calculus);
  } catch (const TypeError& e) {
    throw NormalizeError(NormalizeError::Kind::PreconditionViolation,
                         "term is not typed in " + std::string(calculus_name(calculus)) + ": " + e.what());
  }
}

// The term being normalized, rewritten in place one step at a time.
class Session {
 public:
  Session(Term root, const NormalizeOptions& options) : root_(std::move(root)), options_(options) {}

  const Term& root() const noexcept { return root_; }
  const Term& at(const Path& p) const { return subterm_at(root_, p); }

  // `local` is a step taken on the subterm at `prefix`.
  void commit(const Path& prefix, const Reduct& local) {
    if (steps_ >= options_.budget) {
      throw NormalizeError(NormalizeError::Kind::BudgetExceeded,
                           "step budget of " + std::to_string(options_.budget) + " exhausted", root_);
    }
    ++steps_;
    Term next = prefix.empty() ? local.result : replace_at(root_, prefix, local.result);
    if (options_.trace) options_.trace->push_back({joined(prefix, local.path), local.rule, root_, next});
    root_ = std::move(next);
  }

  void run_ipc(const Path& p) {
    while (auto site = first_redex(at(p), Calculus::IPC)) commit(p, reduce_at(at(p), site->path, Calculus::IPC));
  }

  void eval_v(const Path& p) {
    const Term node = at(p);
    switch (node.kind()) {
      case TermKind::Var:
        return;
      case TermKind::Abs:
      case TermKind::Exfalso:
        eval_child(p, 0);
        return;
      case TermKind::Pair:
        eval_child(p, 0);
        eval_child(p, 1);
        return;
      case TermKind::App:
      case TermKind::Proj:
      case TermKind::Inj:
      case TermKind::Case:
        for (std::size_t i = 0; i < node.children().size(); ++i) eval_child(p, i);
        run_ipc(p);
        return;
      case TermKind::Visser:
        eval_visser(p);
        return;
      case TermKind::Harrop:
        throw NormalizeError(NormalizeError::Kind::PreconditionViolation, "hop is not part of V");
    }
  }

  void normalize_kp(const Path& p, const Context& ctx) {
    for (;;) {
      weak_head(p, ctx);
      const Term node = at(p);
      for (std::size_t i = 0; i < node.children().size(); ++i) {
        const Term& child = node.child(i);
        const Context cctx = child.has_admissible() ? child_context(ctx, node, i, Calculus::KP) : ctx;
        normalize_kp(joined(p, {i}), cctx);
      }
      if (!step_weak_head(at(p), ctx)) return;
    }
  }

  void weak_head(const Path& p, const Context& ctx) {
    while (auto r = step_weak_head(at(p), ctx)) commit(p, *r);
  }

  void random(Calculus calculus, const Context& ctx, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
      const auto sites = redex_sites(root_, calculus);
      if (sites.empty()) return;
      const auto& site = sites[rng() % sites.size()];
      commit({}, reduce_at(root_, site.path, calculus, ctx));
    }
  }

 private:
  void eval_child(const Path& p, std::size_t i) { eval_v(joined(p, {i})); }

  void eval_visser(const Path& p) {
    eval_child(p, 0);
    const Term node = at(p);
    const Decomposition d = decompose(node.main());
    std::size_t branch = 0;
    if (const auto* inj = std::get_if<IsInjection>(&d)) {
      branch = static_cast<std::size_t>(inj->index);
    } else if (std::holds_alternative<EfqUnderW>(d)) {
      branch = 1;
    } else if (const auto* va = std::get_if<VarAppUnderW>(&d)) {
      const auto& bs = node.binders();
      for (std::size_t j = 0; j < bs.size() && branch == 0; ++j) {
        if (bs[j].name == va->var) branch = 3 + j;
      }
    }
    if (branch == 0) {
      throw NormalizeError(NormalizeError::Kind::InternalError,
                           "evaluated main premise of a visser node has no reducible shape", root_);
    }
    eval_child(p, branch);
    auto step = step_top(at(p), Calculus::V);
    if (!step) throw NormalizeError(NormalizeError::Kind::InternalError, "visser node did not contract", root_);
    commit(p, Reduct{{}, step->rule, step->result});
    run_ipc(p);
  }

  Term root_;
  const NormalizeOptions& options_;
  std::size_t steps_ = 0;
};

}  // namespace

Term eval_ipc(const Term& t, const Context& ctx, const NormalizeOptions& options) {
  require_typed(t, ctx, Calculus::IPC);
  Session s(t, options);
  s.run_ipc({});
  return s.root();
}

Term eval_v(const Term& t, const Context& ctx, const NormalizeOptions& options) {
  require_typed(t, ctx, Calculus::V);
  Session s(t, options);
  s.eval_v({});
  return s.root();
}

Term normalize_kp(const Term& t, const Context& ctx, const NormalizeOptions& options) {
  require_typed(t, ctx, Calculus::KP);
  Session s(t, options);
  s.normalize_kp({}, ctx);
  return s.root();
}

Term weak_head_normalize(const Term& t, const Context& ctx, const NormalizeOptions& options) {
  require_typed(t, ctx, Calculus::KP);
  Session s(t, options);
  s.weak_head({}, ctx);
  return s.root();
}

Term normalize(const Term& t, Calculus calculus, const Context& ctx, const NormalizeOptions& options) {
  switch (calculus) {
    case Calculus::IPC:
      return eval_ipc(t, ctx, options);
    case Calculus::V:
      return eval_v(t, ctx, options);
    case Calculus::KP:
      return normalize_kp(t, ctx, options);
  }
  throw NormalizeError(NormalizeError::Kind::InternalError, "unknown calculus");
}

Term normalize_random(const Term& t, Calculus calculus, std::uint64_t seed, const Context& ctx,
                      const NormalizeOptions& options) {
  require_typed(t, ctx, calculus);
  Session s(t, options);
  s.random(calculus, ctx, seed);
  return s.root();
}

Disjunct extract_disjunct(const Term& t, Calculus calculus, const NormalizeOptions& options) {
  if (!t.is_closed()) {
    throw NormalizeError(NormalizeError::Kind::PreconditionViolation, "disjunct extraction needs a closed term");
  }
  const Context empty;
  Formula type;
  try {
    type = infer(empty, t, calculus);
  } catch (const TypeError& e) {
    throw NormalizeError(NormalizeError::Kind::PreconditionViolation, e.what());
  }
  if (!type.is_disj()) {
    throw NormalizeError(NormalizeError::Kind::PreconditionViolation, "term does not prove a disjunction");
  }
  const Term nf = normalize(t, calculus, empty, options);
  if (!nf.is(TermKind::Inj)) {
    throw NormalizeError(NormalizeError::Kind::InternalError, "closed normal proof of a disjunction is not an injection",
                         nf);
  }
  const Side side = nf.index() == 1 ? Side::Left : Side::Right;
  return Disjunct{side, nf.arg(), side == Side::Left ? type.left() : type.right()};
}

}  // namespace vkp
