#pragma once

#include <string>
#include <string_view>

#include "treesigma/tree.hpp"

namespace treesigma {

/// Decodes one graph6 line (no ">>graph6<<" header, trailing newline allowed).
/// Throws ParseError with the byte offset on malformed input and
/// StructuralError if the decoded graph is not a tree.
Tree parse_graph6(std::string_view text);

/// Encodes the tree on its current labeling. Output has no newline.
std::string write_graph6(const Tree& t);

}  // namespace treesigma
