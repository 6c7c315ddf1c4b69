#ifndef PLUMP_WTREE_HPP
#define PLUMP_WTREE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "plump/container.hpp"

namespace plump {

/// A well-founded tree over a list-closed container: a tag (a Shape) plus
/// exactly arity(tag) child trees, flattened into one sequence. Children are
/// indexed by the coproduct of the base arities, i.e. the children of a node
/// tagged [a, b] are the B(a) positions followed by the B(b) positions.
///
/// Trees are immutable values; copies share structure. Node count and a
/// structural hash are computed once at construction, so size() and hash()
/// are O(1) and equal trees hash equal.
class Tree {
 public:
  const Shape& tag() const { return node_->tag; }
  const std::vector<Tree>& children() const { return node_->children; }

  /// Total number of nodes, children included.
  std::uint64_t size() const { return node_->size; }

  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Tree& a, const Tree& b);
  friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

 private:
  struct Node {
    Shape tag;
    std::vector<Tree> children;
    std::uint64_t size;
    std::size_t hash;
  };

  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Tree build(Shape tag, std::vector<Tree> children);

  std::shared_ptr<const Node> node_;

  friend Tree make_node(const BaseSignature& sig, Shape tag, std::vector<Tree> children);
  friend Tree zero();
  friend Tree join2(const Tree& u, const Tree& v);
  friend Tree joinN(std::span<const Tree> trees);
};

/// The structure map: packages a tag and its children into a tree.
/// Throws InvalidShape if the tag uses undeclared names, ArityMismatch if
/// children.size() != arity(sig, tag).
Tree make_node(const BaseSignature& sig, Shape tag, std::vector<Tree> children);

/// The least tree: empty tag, no children. Valid under every signature.
Tree zero();
Tree zero(const BaseSignature& sig);

/// Binary join u ⊔ v: tag concatenation, children concatenation.
Tree join2(const Tree& u, const Tree& v);

/// n-ary join of a non-empty family, flattened into a single node. Since
/// shape concatenation is strictly associative this equals the binary fold;
/// the singleton case is the identity. Throws Error on an empty family.
Tree joinN(std::span<const Tree> trees);
inline Tree joinN(const std::vector<Tree>& trees) { return joinN(std::span<const Tree>(trees)); }

inline std::uint64_t size(const Tree& u) { return u.size(); }

/// The naturals encoding over a designated unary base shape `s`:
/// nat_tree(0) = zero, nat_tree(n+1) = (tag [s], child nat_tree(n)).
/// Throws ConfigError if `s` is missing or not unary.
Tree nat_tree(const BaseSignature& sig, std::uint64_t n);

bool tree_equal(const Tree& u, const Tree& v);
std::size_t tree_hash(const Tree& u);

/// Recursively checks the child-count-equals-arity invariant under `sig`.
bool well_formed(const BaseSignature& sig, const Tree& u);

}  // namespace plump

#endif
