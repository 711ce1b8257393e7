#include "vkp/context.hpp"

#include <algorithm>

namespace vkp {

Context::Context(std::initializer_list<Entry> entries) {
  for (const auto& [name, type] : entries) bind(name, type);
}

Context Context::extended(std::string name, Formula type) const {
  Context out = *this;
  out.bind(std::move(name), std::move(type));
  return out;
}

Context Context::erased(std::string_view name) const {
  Context out = *this;
  std::erase_if(out.entries_, [&](const Entry& e) { return e.first == name; });
  return out;
}

void Context::bind(std::string name, Formula type) {
  std::erase_if(entries_, [&](const Entry& e) { return e.first == name; });
  entries_.emplace_back(std::move(name), std::move(type));
}

std::optional<Formula> Context::lookup(std::string_view name) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->first == name) return it->second;
  }
  return std::nullopt;
}

bool Context::is_implicative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second.is_impl(); });
}

bool Context::is_negated() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second.is_negation(); });
}

}  // namespace vkp
