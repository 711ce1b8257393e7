#include "vkp/oracle/kripke.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_set>

namespace vkp::oracle {

std::vector<std::vector<bool>> reachability(const KripkeModel& m) {
  std::vector<std::vector<bool>> reach(m.worlds, std::vector<bool>(m.worlds, false));
  for (std::size_t w = 0; w < m.worlds; ++w) {
    std::vector<std::size_t> stack{w};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      if (reach[w][v]) continue;
      reach[w][v] = true;
      if (v < m.successors.size()) {
        for (std::size_t s : m.successors[v]) {
          if (s < m.worlds) stack.push_back(s);
        }
      }
    }
  }
  return reach;
}

std::optional<std::string> model_problem(const KripkeModel& m) {
  if (m.worlds == 0) return "model has no worlds";
  if (m.successors.size() != m.worlds || m.valuation.size() != m.worlds) return "tables do not match the world count";
  for (std::size_t w = 0; w < m.worlds; ++w) {
    for (std::size_t s : m.successors[w]) {
      if (s >= m.worlds) return "edge to a missing world";
    }
  }
  const auto reach = reachability(m);
  for (std::size_t w = 0; w < m.worlds; ++w) {
    if (!reach[0][w]) return "world " + std::to_string(w) + " is not above the root";
    for (std::size_t v = 0; v < m.worlds; ++v) {
      if (v != w && reach[w][v] && reach[v][w]) return "the order has a cycle";
      if (!reach[w][v]) continue;
      for (const auto& atom : m.valuation[w]) {
        if (!m.valuation[v].count(atom)) {
          return "atom " + atom + " holds at " + std::to_string(w) + " but not at " + std::to_string(v);
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

bool forces_with(const KripkeModel& m, const std::vector<std::vector<bool>>& reach, std::size_t w, const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return m.valuation[w].count(a.name()) > 0;
    case Formula::Kind::Falsum:
      return false;
    case Formula::Kind::Conj:
      return forces_with(m, reach, w, a.left()) && forces_with(m, reach, w, a.right());
    case Formula::Kind::Disj:
      return forces_with(m, reach, w, a.left()) || forces_with(m, reach, w, a.right());
    case Formula::Kind::Impl:
      for (std::size_t v = 0; v < m.worlds; ++v) {
        if (reach[w][v] && forces_with(m, reach, v, a.left()) && !forces_with(m, reach, v, a.right())) return false;
      }
      return true;
  }
  return false;
}

using Mask = std::uint32_t;

// Formula flattened in post-order for repeated evaluation over world sets.
struct Compiled {
  struct Op {
    Formula::Kind kind;
    int atom = -1;
    int lhs = -1;
    int rhs = -1;
  };
  std::vector<Op> ops;
  std::vector<std::string> atoms;

  explicit Compiled(const Formula& a) {
    const auto names = a.atoms();
    atoms.assign(names.begin(), names.end());
    emit(a);
  }

  int emit(const Formula& a) {
    Op op{a.kind()};
    if (a.is_atom()) {
      op.atom = static_cast<int>(std::find(atoms.begin(), atoms.end(), a.name()) - atoms.begin());
    } else if (!a.is_falsum()) {
      op.lhs = emit(a.left());
      op.rhs = emit(a.right());
    }
    ops.push_back(op);
    return static_cast<int>(ops.size()) - 1;
  }

  // Set of worlds forcing the formula.
  Mask eval(const std::vector<Mask>& val, const std::vector<Mask>& up, Mask all, std::vector<Mask>& scratch) const {
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const Op& op = ops[i];
      switch (op.kind) {
        case Formula::Kind::Atom:
          scratch[i] = val[static_cast<std::size_t>(op.atom)];
          break;
        case Formula::Kind::Falsum:
          scratch[i] = 0;
          break;
        case Formula::Kind::Conj:
          scratch[i] = scratch[op.lhs] & scratch[op.rhs];
          break;
        case Formula::Kind::Disj:
          scratch[i] = scratch[op.lhs] | scratch[op.rhs];
          break;
        case Formula::Kind::Impl: {
          const Mask bad = scratch[op.lhs] & ~scratch[op.rhs] & all;
          Mask m = 0;
          for (std::size_t w = 0; w < up.size(); ++w) {
            if ((up[w] & bad) == 0) m |= Mask{1} << w;
          }
          scratch[i] = m;
          break;
        }
      }
    }
    return scratch.back();
  }
};

std::string canonical(const std::vector<std::size_t>& parent, std::size_t w) {
  std::vector<std::string> kids;
  for (std::size_t v = 1; v < parent.size(); ++v) {
    if (parent[v] == w) kids.push_back(canonical(parent, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

// Calls f on every parent array of a rooted tree with n worlds (world i > 0
// hangs below parent[i] < i), one per isomorphism class.
void for_each_tree(std::size_t n, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> parent(n, 0);
  std::unordered_set<std::string> seen;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == n) {
      if (!seen.insert(canonical(parent, 0)).second) return false;
      return f(parent);
    }
    for (std::size_t p = 0; p < i; ++p) {
      parent[i] = p;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  rec(1);
}

}  // namespace

bool forces(const KripkeModel& m, std::size_t world, const Formula& a) {
  return forces_with(m, reachability(m), world, a);
}

bool refutes(const KripkeModel& m, const Formula& a) { return !model_problem(m) && !forces(m, 0, a); }

std::optional<KripkeModel> find_countermodel(const Formula& a, const CountermodelOptions& options) {
  const Compiled compiled(a);
  const std::size_t k = compiled.atoms.size();
  std::size_t evaluations = 0;
  std::optional<KripkeModel> found;
  std::vector<Mask> scratch(compiled.ops.size());

  for (std::size_t n = 1; n <= options.max_worlds && !found; ++n) {
    for_each_tree(n, [&](const std::vector<std::size_t>& parent) {
      std::vector<Mask> up(n);
      for (std::size_t w = n; w-- > 0;) {
        up[w] = Mask{1} << w;
        for (std::size_t v = w + 1; v < n; ++v) {
          if (parent[v] == w) up[w] |= up[v];
        }
      }
      const Mask all = (Mask{1} << n) - 1;
      std::vector<Mask> upsets;
      for (Mask s = 0; s <= all; ++s) {
        bool closed = true;
        for (std::size_t w = 0; w < n && closed; ++w) {
          if ((s >> w & 1) && (up[w] & ~s)) closed = false;
        }
        if (closed) upsets.push_back(s);
      }
      std::vector<std::size_t> digit(k, 0);
      std::vector<Mask> val(k, 0);
      for (;;) {
        if (++evaluations > options.max_evaluations) {
          throw SearchBudgetExceeded("countermodel search stopped after " + std::to_string(options.max_evaluations) +
                                     " valuations at " + std::to_string(n) + " worlds");
        }
        for (std::size_t i = 0; i < k; ++i) val[i] = upsets[digit[i]];
        if (!(compiled.eval(val, up, all, scratch) & 1)) {
          KripkeModel m;
          m.worlds = n;
          m.successors.assign(n, {});
          m.valuation.assign(n, {});
          for (std::size_t v = 1; v < n; ++v) m.successors[parent[v]].push_back(v);
          for (std::size_t w = 0; w < n; ++w) {
            for (std::size_t i = 0; i < k; ++i) {
              if (val[i] >> w & 1) m.valuation[w].insert(compiled.atoms[i]);
            }
          }
          found = std::move(m);
          return true;
        }
        std::size_t i = 0;
        while (i < k && ++digit[i] == upsets.size()) digit[i++] = 0;
        if (i == k) return false;
      }
    });
  }
  return found;
}

std::string to_text(const KripkeModel& m) {
  std::ostringstream out;
  out << "worlds " << m.worlds << ", root 0\n";
  for (std::size_t w = 0; w < m.worlds; ++w) {
    out << "  " << w << " ->";
    if (w < m.successors.size()) {
      for (std::size_t s : m.successors[w]) out << ' ' << s;
    }
    out << '\n';
  }
  out << "valuation\n";
  for (std::size_t w = 0; w < m.worlds; ++w) {
    out << "  " << w << ":";
    if (w < m.valuation.size()) {
      for (const auto& atom : m.valuation[w]) out << ' ' << atom;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace vkp::oracle
