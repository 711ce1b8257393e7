#include "vkp/formula.hpp"

#include <cassert>
#include <functional>

namespace vkp {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  std::size_t size;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula::Formula() : Formula(falsum()) {}

Formula Formula::falsum() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Falsum, {}, nullptr, nullptr, 1, 0x51ed});
  return Formula(node);
}

Formula Formula::atom(std::string name) {
  const std::size_t h = mix(0xa7, std::hash<std::string>{}(name));
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr, 1, h}));
}

Formula Formula::impl(Formula lhs, Formula rhs) {
  const std::size_t h = mix(mix(0x11, lhs.node_->hash), rhs.node_->hash);
  const std::size_t n = 1 + lhs.node_->size + rhs.node_->size;
  return Formula(std::make_shared<const Node>(Node{Kind::Impl, {}, std::move(lhs.node_), std::move(rhs.node_), n, h}));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  const std::size_t h = mix(mix(0x22, lhs.node_->hash), rhs.node_->hash);
  const std::size_t n = 1 + lhs.node_->size + rhs.node_->size;
  return Formula(std::make_shared<const Node>(Node{Kind::Conj, {}, std::move(lhs.node_), std::move(rhs.node_), n, h}));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  const std::size_t h = mix(mix(0x33, lhs.node_->hash), rhs.node_->hash);
  const std::size_t n = 1 + lhs.node_->size + rhs.node_->size;
  return Formula(std::make_shared<const Node>(Node{Kind::Disj, {}, std::move(lhs.node_), std::move(rhs.node_), n, h}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_negation() const noexcept {
  return node_->kind == Kind::Impl && node_->rhs->kind == Kind::Falsum;
}

const std::string& Formula::name() const noexcept { return node_->name; }

Formula Formula::left() const {
  assert(node_->lhs);
  return Formula(node_->lhs);
}

Formula Formula::right() const {
  assert(node_->rhs);
  return Formula(node_->rhs);
}

std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  std::function<void(const Node&)> walk = [&](const Node& n) {
    if (n.kind == Kind::Atom) out.insert(n.name);
    if (n.lhs) walk(*n.lhs);
    if (n.rhs) walk(*n.rhs);
  };
  walk(*node_);
  return out;
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  const Formula::Node* x = a.node_.get();
  const Formula::Node* y = b.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->kind != y->kind || x->size != y->size) return false;
  switch (x->kind) {
    case Formula::Kind::Falsum:
      return true;
    case Formula::Kind::Atom:
      return x->name == y->name;
    default:
      return Formula(x->lhs) == Formula(y->lhs) && Formula(x->rhs) == Formula(y->rhs);
  }
}

}  // namespace vkp
