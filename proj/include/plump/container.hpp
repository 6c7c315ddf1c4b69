#ifndef PLUMP_CONTAINER_HPP
#define PLUMP_CONTAINER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plump/errors.hpp"

namespace plump {

/// A user-declared set of base shapes, each with a finite arity.
///
/// Shapes of trees are not single base names but finite *sequences* of them
/// (see Shape below): taking lists of base names closes the shape type under
/// binary coproducts, with concatenation as the coproduct and the empty
/// sequence as its unit. Arities add up along the sequence.
class BaseSignature {
 public:
  BaseSignature() = default;

  /// Declares a base shape. Names must be unique identifiers matching
  /// [A-Za-z][A-Za-z0-9_]*. Throws Error on duplicates or bad names.
  void add_shape(std::string name, std::uint32_t arity);

  bool contains(std::string_view name) const;

  /// Arity of a single base shape; throws InvalidShape if undeclared.
  std::uint32_t arity_of(std::string_view name) const;

  std::size_t base_count() const { return entries_.size(); }
  const std::pair<std::string, std::uint32_t>& base_at(std::size_t i) const {
    return entries_.at(i);
  }

 private:
  std::vector<std::pair<std::string, std::uint32_t>> entries_;  // declaration order
  std::unordered_map<std::string, std::size_t> index_;
};

/// A shape: a finite sequence of base-shape names. The empty sequence is the
/// least-element shape (arity 0 under every signature).
struct Shape {
  std::vector<std::string> names;

  bool empty() const { return names.empty(); }
  std::size_t length() const { return names.size(); }

  friend bool operator==(const Shape& a, const Shape& b) { return a.names == b.names; }
};

/// Total arity of `s` under `sig`: the sum of the base arities of its names.
/// Throws InvalidShape on an undeclared name.
std::uint64_t arity(const BaseSignature& sig, const Shape& s);

/// Shape coproduct: sequence concatenation.
/// arity(concat_shapes(a, b)) == arity(a) + arity(b).
Shape concat_shapes(const Shape& a, const Shape& b);

bool valid_under(const BaseSignature& sig, const Shape& s);

/// Parses the line-based signature format:
///   shape <name> <arity>
/// '#' starts a comment; blank lines are ignored. Throws ParseError with the
/// offending line number on malformed lines or duplicate names.
BaseSignature parse_signature(std::string_view text);

bool is_valid_shape_name(std::string_view name);

}  // namespace plump

#endif
