#pragma once

#include <vector>

#include "treesigma/tree.hpp"

namespace treesigma {

/// Path v_1..v_{2k+1} (vertices 0..2k) with delta-2 pendant leaves on every
/// even-indexed path vertex. Order delta*k + 1. Requires k >= 1, delta >= 4.
Tree tt1_opt(int k, int delta);

/// tt1_opt(k, delta) with the path edge v_position v_{position+1} subdivided
/// and delta-2 pendants hung on the new vertex. Order delta*k + delta.
/// Requires k >= 2, delta >= 4, position odd in [3, 2k-1].
Tree tt0_opt(int k, int delta, int position);

/// Admissible subdivision positions 3, 5, ..., 2k-1 (empty for k < 2).
std::vector<int> tt0_positions(int k);

}  // namespace treesigma
