#pragma once

#include <optional>
#include <string_view>

namespace vkp {

/// IPC: intuitionistic propositional logic. V: IPC plus the Visser_n rules
/// (closed main premise). KP: IPC plus Harrop's rule (Kreisel-Putnam logic).
enum class Calculus { IPC, V, KP };

constexpr std::string_view calculus_name(Calculus c) {
  switch (c) {
    case Calculus::IPC:
      return "IPC";
    case Calculus::V:
      return "V";
    case Calculus::KP:
      return "KP";
  }
  return "?";
}

constexpr std::optional<Calculus> calculus_from_name(std::string_view s) {
  if (s == "IPC") return Calculus::IPC;
  if (s == "V") return Calculus::V;
  if (s == "KP") return Calculus::KP;
  return std::nullopt;
}

}  // namespace vkp
