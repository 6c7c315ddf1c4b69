#include "plump/wtree.hpp"

#include <string>
#include <utility>

#include "plump/errors.hpp"

namespace plump {

namespace {

constexpr std::size_t kFnvOffset = 1469598103934665603ULL;
constexpr std::size_t kFnvPrime = 1099511628211ULL;

std::size_t fnv1a_bytes(std::size_t h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

std::size_t fnv1a_u64(std::size_t h, std::uint64_t v) {
  return fnv1a_bytes(h, &v, sizeof(v));
}

}  // namespace

Tree Tree::build(Shape tag, std::vector<Tree> children) {
  std::uint64_t total = 1;
  std::size_t h = kFnvOffset;
  h = fnv1a_u64(h, tag.names.size());
  for (const auto& name : tag.names) {
    h = fnv1a_u64(h, name.size());
    h = fnv1a_bytes(h, name.data(), name.size());
  }
  for (const auto& child : children) {
    total += child.size();
    h = fnv1a_u64(h, child.hash());
  }
  auto node = std::make_shared<const Node>(Node{std::move(tag), std::move(children), total, h});
  return Tree(std::move(node));
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
  if (!(a.node_->tag == b.node_->tag)) return false;
  const auto& ac = a.node_->children;
  const auto& bc = b.node_->children;
  if (ac.size() != bc.size()) return false;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] != bc[i]) return false;
  }
  return true;
}

Tree make_node(const BaseSignature& sig, Shape tag, std::vector<Tree> children) {
  for (const auto& name : tag.names) {
    if (!sig.contains(name)) {
      throw InvalidShape("make_node: unknown shape name '" + name + "' in tag");
    }
  }
  std::uint64_t expected = arity(sig, tag);
  if (children.size() != expected) {
    throw ArityMismatch("make_node: tag arity is " + std::to_string(expected) + " but " +
                            std::to_string(children.size()) + " children were given",
                        static_cast<std::size_t>(expected), children.size());
  }
  return Tree::build(std::move(tag), std::move(children));
}

Tree zero() {
  static const Tree least = Tree::build(Shape{}, {});
  return least;
}

Tree zero(const BaseSignature&) { return zero(); }

Tree join2(const Tree& u, const Tree& v) {
  Shape tag = concat_shapes(u.tag(), v.tag());
  std::vector<Tree> children;
  children.reserve(u.children().size() + v.children().size());
  children.insert(children.end(), u.children().begin(), u.children().end());
  children.insert(children.end(), v.children().begin(), v.children().end());
  return Tree::build(std::move(tag), std::move(children));
}

Tree joinN(std::span<const Tree> trees) {
  if (trees.empty()) {
    throw Error("joinN: the family must be non-empty");
  }
  if (trees.size() == 1) return trees[0];
  Shape tag;
  std::vector<Tree> children;
  std::size_t n_names = 0, n_children = 0;
  for (const Tree& t : trees) {
    n_names += t.tag().names.size();
    n_children += t.children().size();
  }
  tag.names.reserve(n_names);
  children.reserve(n_children);
  for (const Tree& t : trees) {
    tag.names.insert(tag.names.end(), t.tag().names.begin(), t.tag().names.end());
    children.insert(children.end(), t.children().begin(), t.children().end());
  }
  return Tree::build(std::move(tag), std::move(children));
}

Tree nat_tree(const BaseSignature& sig, std::uint64_t n) {
  if (!sig.contains("s") || sig.arity_of("s") != 1) {
    throw ConfigError("nat_tree: signature lacks the designated unary shape 's'");
  }
  Tree t = zero();
  for (std::uint64_t i = 0; i < n; ++i) {
    t = make_node(sig, Shape{{"s"}}, {std::move(t)});
  }
  return t;
}

bool tree_equal(const Tree& u, const Tree& v) { return u == v; }

std::size_t tree_hash(const Tree& u) { return u.hash(); }

bool well_formed(const BaseSignature& sig, const Tree& u) {
  if (!valid_under(sig, u.tag())) return false;
  if (u.children().size() != arity(sig, u.tag())) return false;
  for (const Tree& c : u.children()) {
    if (!well_formed(sig, c)) return false;
  }
  return true;
}

}  // namespace plump
