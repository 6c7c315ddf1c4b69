#ifndef PLUMP_TREETEXT_HPP
#define PLUMP_TREETEXT_HPP

#include <string>
#include <string_view>

#include "plump/wtree.hpp"

namespace plump {

/// Parses the tree expression grammar
///   tree ::= "(" "w" "[" name* "]" tree* ")"
/// with sugar `zero` for `(w [])` and `(nat <k>)` for the naturals encoding.
/// Whitespace-insensitive. Throws ParseError (with 1-based character
/// position) on syntax errors, InvalidShape / ArityMismatch / ConfigError on
/// semantic ones.
Tree parse_tree(std::string_view text, const BaseSignature& sig);

/// Canonical sugar-free form; parse_tree(print_tree(u), sig) == u.
std::string print_tree(const Tree& u);

}  // namespace plump

#endif
