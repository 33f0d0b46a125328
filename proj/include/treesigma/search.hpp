#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treesigma/canonical.hpp"
#include "treesigma/certificate.hpp"
#include "treesigma/enumeration.hpp"
#include "treesigma/rational.hpp"

namespace treesigma {

/// Largest order searched without an explicit override.
inline constexpr int kSearchSizeGuard = 24;

struct SearchOptions {
  bool override_size_guard = false;
  unsigned threads = 1;
};

enum class BoundStatus { kTight, kGap };

struct ExtremalTree {
  CanonicalForm form;
  std::string graph6;
  std::vector<int> degree_set;                         // distinct degrees, ascending
  std::map<std::pair<int, int>, std::int64_t> pairs;   // nonzero m_{i,j}
  std::optional<Rational> penalty;                     // when max degree == delta
};

struct SearchReport {
  int n = 0;
  int delta = 0;
  DegreeFilter::Kind filter = DegreeFilter::Kind::kExact;
  std::int64_t tree_count = 0;
  std::int64_t sigma_max = 0;
  std::vector<ExtremalTree> extremal_trees;  // sorted by canonical form

  Rational bound;  // LP bound lambda n + mu (n-1)
  BoundStatus bound_status = BoundStatus::kGap;
  Rational gap;    // bound - sigma_max

  SigmaMaxPrediction prediction;
  std::optional<bool> prediction_matches;  // engaged when the residue is covered

  // Explicit extremal family predicted for this order, if any.
  std::string family;                     // "tt1_opt", "tt0_opt", or empty
  std::vector<ExtremalTree> family_members;  // deduplicated up to isomorphism
  std::optional<bool> extremal_equals_family;
  // False when n = 2*delta: the penalty minimum is F(delta, delta) but the
  // structural characterization (m_{2,delta} > 0) cannot hold.
  bool characterization_applicable = true;
  std::vector<std::string> notes;

  std::vector<int> observed_degrees() const;  // union over extremal trees
};

/// Exhaustive sigma maximization over all free trees of order n whose maximum
/// degree is exactly (or at most) delta, compared against the LP bound.
/// Throws DomainError for delta < 4, n <= delta, or n above the size guard
/// without override; VerificationFailure if the bound is ever exceeded.
SearchReport search_sigma_max(int n, int delta, DegreeFilter::Kind filter, const SearchOptions& options = {});

/// One report for every n = delta*k + r, k in [k_min, k_max], r in 1..delta.
std::vector<SearchReport> residue_scan(int delta, int k_min, int k_max, DegreeFilter::Kind filter,
                                       const SearchOptions& options = {});

ExtremalTree describe_tree(const Tree& t, int delta);

std::string bound_status_name(BoundStatus s);

}  // namespace treesigma
