#pragma once

#include <compare>
#include <string>
#include <vector>

#include "treesigma/tree.hpp"

namespace treesigma {

// Relabeling-invariant encoding of an unrooted tree: the AHU parenthesis
// string of the tree rooted at its center, using the smaller of the two
// rooted encodings when the tree is bicentral. Equal iff isomorphic.
struct CanonicalForm {
  std::string encoding;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// One or two central vertices (ascending).
std::vector<Vertex> tree_centers(const Tree& t);

/// AHU encoding of `t` rooted at `root`.
std::string rooted_encoding(const Tree& t, Vertex root);

CanonicalForm canonical_form(const Tree& t);

inline bool isomorphic(const Tree& a, const Tree& b) {
  return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

}  // namespace treesigma
