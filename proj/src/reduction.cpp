#include "vkp/reduction.hpp"

#include <algorithm>

#include "vkp/typing.hpp"

namespace vkp {

template <bool AllowHarrop>
HoleContext<AllowHarrop>::HoleContext(std::vector<Frame> frames) : frames_(std::move(frames)) {
  if constexpr (!AllowHarrop) {
    for (const auto& f : frames_) {
      if (std::holds_alternative<HarropFrame>(f)) throw std::invalid_argument("W contexts have no hop frames");
    }
  }
}

template <bool AllowHarrop>
void HoleContext<AllowHarrop>::push_inner(Frame f) {
  if constexpr (!AllowHarrop) {
    if (std::holds_alternative<HarropFrame>(f)) throw std::invalid_argument("W contexts have no hop frames");
  }
  frames_.push_back(std::move(f));
}

namespace {

Term plug_frame(const Frame& frame, Term inner) {
  return std::visit(
      [&](const auto& f) -> Term {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, AppFrame>) {
          return Term::app(std::move(inner), f.arg);
        } else if constexpr (std::is_same_v<F, ProjFrame>) {
          return Term::proj(f.index, std::move(inner));
        } else if constexpr (std::is_same_v<F, CaseFrame>) {
          return Term::case_of(std::move(inner), f.binder, f.left, f.right);
        } else {
          return Term::harrop(f.binder, f.annot, std::move(inner), f.case_binder, f.left, f.right);
        }
      },
      frame);
}

}  // namespace

template <bool AllowHarrop>
Term HoleContext<AllowHarrop>::plug(const Term& t) const {
  Term cur = t;
  for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) cur = plug_frame(*it, std::move(cur));
  return cur;
}

template <bool AllowHarrop>
Path HoleContext<AllowHarrop>::hole_path() const {
  // Every frame keeps the hole in child 0.
  return Path(frames_.size(), 0);
}

template class HoleContext<false>;
template class HoleContext<true>;

namespace {

// Walks App-function, Proj-argument and Case-scrutinee positions. Returns the
// head and fills `frames` outermost first.
const Term& weak_head_spine(const Term& t, std::vector<Frame>* frames) {
  const Term* cur = &t;
  for (;;) {
    switch (cur->kind()) {
      case TermKind::App:
        if (frames) frames->push_back(AppFrame{cur->arg()});
        cur = &cur->fun();
        break;
      case TermKind::Proj:
        if (frames) frames->push_back(ProjFrame{cur->index()});
        cur = &cur->arg();
        break;
      case TermKind::Case:
        if (frames) frames->push_back(CaseFrame{cur->case_binder(), cur->left_branch(), cur->right_branch()});
        cur = &cur->scrutinee();
        break;
      default:
        return *cur;
    }
  }
}

}  // namespace

Decomposition decompose(const Term& t) {
  if (t.is(TermKind::Inj)) return IsInjection{t.index(), t.arg()};
  std::vector<Frame> frames;
  const Term& head = weak_head_spine(t, &frames);
  if (head.is(TermKind::Exfalso)) return EfqUnderW{WContext(std::move(frames)), head.arg()};
  if (head.is(TermKind::Var) && !frames.empty() && std::holds_alternative<AppFrame>(frames.back())) {
    Term first = std::get<AppFrame>(frames.back()).arg;
    frames.pop_back();
    return VarAppUnderW{WContext(std::move(frames)), head.name(), std::move(first)};
  }
  return NotDecomposable{};
}

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Beta:
      return "Beta";
    case Rule::Projection:
      return "Projection";
    case Rule::Case:
      return "Case";
    case Rule::VisserInj:
      return "Visser-inj";
    case Rule::VisserEfq:
      return "Visser-efq";
    case Rule::VisserApp:
      return "Visser-app";
    case Rule::HarropInj:
      return "Harrop-inj";
    case Rule::HarropEfq:
      return "Harrop-efq";
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (Rule r : {Rule::Beta, Rule::Projection, Rule::Case, Rule::VisserInj, Rule::VisserEfq, Rule::VisserApp,
                 Rule::HarropInj, Rule::HarropEfq}) {
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

namespace {

void gate(const Term& t, Calculus calculus) {
  if (t.is(TermKind::Visser) && calculus != Calculus::V) {
    throw ReductionError(ReductionError::Kind::CalculusViolation,
                         "visser reduction is not part of " + std::string(calculus_name(calculus)));
  }
  if (t.is(TermKind::Harrop) && calculus != Calculus::KP) {
    throw ReductionError(ReductionError::Kind::CalculusViolation,
                         "hop reduction is not part of " + std::string(calculus_name(calculus)));
  }
}

std::optional<std::size_t> visser_binder_index(const Term& t, const std::string& name) {
  const auto& bs = t.binders();
  for (std::size_t j = 0; j < bs.size(); ++j) {
    if (bs[j].name == name) return j;
  }
  return std::nullopt;
}

// Which rule fires at the top of t, without building the reduct.
std::optional<Rule> redex_rule(const Term& t, Calculus calculus) {
  switch (t.kind()) {
    case TermKind::App:
      if (t.fun().is(TermKind::Abs)) return Rule::Beta;
      return std::nullopt;
    case TermKind::Proj:
      if (t.arg().is(TermKind::Pair)) return Rule::Projection;
      return std::nullopt;
    case TermKind::Case:
      if (t.scrutinee().is(TermKind::Inj)) return Rule::Case;
      return std::nullopt;
    case TermKind::Visser: {
      gate(t, calculus);
      const Decomposition d = decompose(t.main());
      if (std::holds_alternative<IsInjection>(d)) return Rule::VisserInj;
      if (std::holds_alternative<EfqUnderW>(d)) return Rule::VisserEfq;
      if (const auto* va = std::get_if<VarAppUnderW>(&d)) {
        if (visser_binder_index(t, va->var)) return Rule::VisserApp;
      }
      return std::nullopt;
    }
    case TermKind::Harrop: {
      gate(t, calculus);
      const Decomposition d = decompose(t.main());
      if (std::holds_alternative<IsInjection>(d)) return Rule::HarropInj;
      if (std::holds_alternative<EfqUnderW>(d)) return Rule::HarropEfq;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

// Left disjunct of the type of an exfalso-headed main premise. Inference
// under the main's context first; otherwise the type is read off the exfalso
// annotation through the application and projection frames.
Formula efq_left_disjunct(const Term& main, const Context& inner, Calculus calculus) {
  if (auto d = try_infer(inner, main, calculus); d && d->is_disj()) return d->left();
  std::vector<Frame> frames;
  const Term& head = weak_head_spine(main, &frames);
  Formula type = head.annotation();
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    if (std::holds_alternative<AppFrame>(*it) && type.is_impl()) {
      type = type.right();
    } else if (const auto* p = std::get_if<ProjFrame>(&*it); p && type.is_conj()) {
      type = p->index == 1 ? type.left() : type.right();
    } else {
      throw ReductionError(ReductionError::Kind::UntypedRedex,
                           "cannot determine the disjunction proved by the main premise");
    }
  }
  if (!type.is_disj()) {
    throw ReductionError(ReductionError::Kind::UntypedRedex, "main premise does not prove a disjunction");
  }
  return type.left();
}

}  // namespace

std::optional<TopStep> step_top(const Term& t, Calculus calculus, const Context& ctx) {
  const auto rule = redex_rule(t, calculus);
  if (!rule) return std::nullopt;
  switch (*rule) {
    case Rule::Beta:
      return TopStep{*rule, substitute(t.fun().body(), t.fun().name(), t.arg())};
    case Rule::Projection:
      return TopStep{*rule, t.arg().child(static_cast<std::size_t>(t.index() - 1))};
    case Rule::Case: {
      const Term& inj = t.scrutinee();
      const Term& branch = inj.index() == 1 ? t.left_branch() : t.right_branch();
      return TopStep{*rule, substitute(branch, t.case_binder(), inj.arg())};
    }
    case Rule::VisserInj: {
      const auto d = std::get<IsInjection>(decompose(t.main()));
      const Term& branch = d.index == 1 ? t.left_branch() : t.right_branch();
      return TopStep{*rule, substitute(branch, t.case_binder(), abstract_over(t.binders(), d.payload))};
    }
    case Rule::VisserEfq: {
      const auto d = std::get<EfqUnderW>(decompose(t.main()));
      Context inner;
      for (const auto& b : t.binders()) inner.bind(b.name, b.type);
      const Formula a1 = efq_left_disjunct(t.main(), inner, calculus);
      const Term lam = abstract_over(t.binders(), Term::exfalso(a1, d.payload));
      return TopStep{*rule, substitute(t.left_branch(), t.case_binder(), lam)};
    }
    case Rule::VisserApp: {
      const auto d = std::get<VarAppUnderW>(decompose(t.main()));
      const std::size_t j = *visser_binder_index(t, d.var);
      return TopStep{*rule, substitute(t.us()[j], t.u_binder(), abstract_over(t.binders(), d.first_arg))};
    }
    case Rule::HarropInj: {
      const auto d = std::get<IsInjection>(decompose(t.main()));
      const Term& branch = d.index == 1 ? t.left_branch() : t.right_branch();
      return TopStep{*rule, substitute(branch, t.case_binder(), Term::abs(t.name(), t.annotation(), d.payload))};
    }
    case Rule::HarropEfq: {
      const auto d = std::get<EfqUnderW>(decompose(t.main()));
      const Formula a1 = efq_left_disjunct(t.main(), ctx.extended(t.name(), t.annotation()), calculus);
      const Term lam = Term::abs(t.name(), t.annotation(), Term::exfalso(a1, d.payload));
      return TopStep{*rule, substitute(t.left_branch(), t.case_binder(), lam)};
    }
  }
  return std::nullopt;
}

namespace {

void collect_sites(const Term& t, Calculus calculus, Path& path, std::vector<RedexSite>& out, bool first_only) {
  if (auto rule = redex_rule(t, calculus)) {
    out.push_back({path, *rule});
    if (first_only) return;
  }
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    path.push_back(i);
    collect_sites(t.child(i), calculus, path, out, first_only);
    path.pop_back();
    if (first_only && !out.empty()) return;
  }
}

// Context at `path`; built only when the redex there needs one.
Context context_at(const Term& t, const Path& path, Calculus calculus, const Context& ctx) {
  Context cur = ctx;
  const Term* node = &t;
  for (std::size_t i : path) {
    cur = child_context(cur, *node, i, calculus);
    node = &node->child(i);
  }
  return cur;
}

}  // namespace

std::vector<RedexSite> redex_sites(const Term& t, Calculus calculus, const Context&) {
  std::vector<RedexSite> out;
  Path path;
  collect_sites(t, calculus, path, out, false);
  return out;
}

std::optional<RedexSite> first_redex(const Term& t, Calculus calculus, const Context&) {
  std::vector<RedexSite> out;
  Path path;
  collect_sites(t, calculus, path, out, true);
  if (out.empty()) return std::nullopt;
  return out.front();
}

Reduct reduce_at(const Term& t, const Path& path, Calculus calculus, const Context& ctx) {
  const Term* target = nullptr;
  try {
    target = &subterm_at(t, path);
  } catch (const std::out_of_range& e) {
    throw ReductionError(ReductionError::Kind::BadPath, e.what());
  }
  const Context local = target->is(TermKind::Harrop) ? context_at(t, path, calculus, ctx) : Context{};
  auto step = step_top(*target, calculus, local);
  if (!step) throw ReductionError(ReductionError::Kind::BadPath, "no redex at the given path");
  return Reduct{path, step->rule, replace_at(t, path, step->result)};
}

std::vector<Reduct> step_anywhere(const Term& t, Calculus calculus, const Context& ctx) {
  std::vector<Reduct> out;
  for (const auto& site : redex_sites(t, calculus, ctx)) out.push_back(reduce_at(t, site.path, calculus, ctx));
  return out;
}

bool is_normal(const Term& t, Calculus calculus, const Context& ctx) {
  return !first_redex(t, calculus, ctx).has_value();
}

std::optional<Reduct> step_weak_head(const Term& t, const Context& ctx) {
  const Term* cur = &t;
  Path path;
  for (;;) {
    if (redex_rule(*cur, Calculus::KP)) return reduce_at(t, path, Calculus::KP, ctx);
    switch (cur->kind()) {
      case TermKind::App:
      case TermKind::Proj:
      case TermKind::Case:
      case TermKind::Harrop:
        path.push_back(0);
        cur = &cur->child(0);
        break;
      default:
        return std::nullopt;
    }
  }
}

}  // namespace vkp
