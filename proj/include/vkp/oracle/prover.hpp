#pragma once

#include <optional>
#include <variant>

#include "vkp/formula.hpp"
#include "vkp/oracle/kripke.hpp"
#include "vkp/term.hpp"

namespace vkp::oracle {

struct ProverOptions {
  /// Sequents visited before the proof search gives up.
  std::size_t max_sequents = 2'000'000;
  CountermodelOptions countermodel;
};

/// Proof search in the contraction-free sequent calculus for IPC. Returns a
/// closed proof term of `a` in normal form, or nullopt when `a` is not
/// derivable. Throws SearchBudgetExceeded.
std::optional<Term> prove(const Formula& a, const ProverOptions& options = {});

struct Provable {
  Term witness;
};
struct NotProvable {
  KripkeModel countermodel;
};

using ProverResult = std::variant<Provable, NotProvable>;

/// Decides IPC derivability. A refutation comes with a Kripke countermodel
/// checked by the forcing relation. Throws SearchBudgetExceeded when no
/// countermodel exists within the configured number of worlds.
ProverResult ipc_provable(const Formula& a, const ProverOptions& options = {});

}  // namespace vkp::oracle
