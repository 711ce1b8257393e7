#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vkp/formula.hpp"

namespace vkp {

/// Typing context: an ordered map from names to formulas. Names are distinct;
/// extending with a name already present replaces the old entry.
class Context {
 public:
  using Entry = std::pair<std::string, Formula>;

  Context() = default;
  Context(std::initializer_list<Entry> entries);

  [[nodiscard]] Context extended(std::string name, Formula type) const;
  [[nodiscard]] Context erased(std::string_view name) const;
  void bind(std::string name, Formula type);

  std::optional<Formula> lookup(std::string_view name) const;
  bool contains(std::string_view name) const { return lookup(name).has_value(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Every entry is an implication (an implicative context).
  bool is_implicative() const;
  /// Every entry is a negation ~A (a negated context).
  bool is_negated() const;

  friend bool operator==(const Context&, const Context&) = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace vkp
