#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treesigma/profile.hpp"

namespace treesigma {

enum class LemmaStatus { kPass, kVacuousPass, kFail };

std::string lemma_status_name(LemmaStatus s);

/// Ordered key/value description of one counterexample; values are exact
/// rationals or integers rendered as text.
using Witness = std::vector<std::pair<std::string, std::string>>;

struct DeltaRange {
  int lo = 4;
  int hi = 4;
};

inline constexpr int kLemmaMaxDelta = 1'000'000;
inline constexpr std::size_t kMaxStoredWitnesses = 1000;

// Outcome of one exact sweep. A pass is a proof for the scanned range.
struct LemmaReport {
  std::string lemma_id;
  DeltaRange delta_range;
  LemmaStatus status = LemmaStatus::kPass;
  std::vector<Witness> witnesses;  // first kMaxStoredWitnesses only
  std::int64_t witness_count = 0;
  std::int64_t checks = 0;
  std::vector<int> vacuous_deltas;  // deltas whose index range is empty
  std::vector<std::pair<std::string, std::int64_t>> counters;
};

/// F >= 0 on 1 <= i <= j <= delta, zero exactly at (1, delta) and (2, delta).
LemmaReport verify_slack_pattern(DeltaRange range, unsigned threads = 1);

/// For 3 <= i <= t: the minimum of j -> F(i, j) over 1 <= j <= delta is
/// attained at delta. For t+1 <= i <= delta-1: the minimum over
/// 1 <= j <= delta-1 is attained at 2. Here t = floor((delta+3)/2).
/// Ties are counted, not failed.
LemmaReport verify_minima_locations(DeltaRange range, unsigned threads = 1);

/// i F(i, 2) > F(delta, delta) for t+1 <= i <= delta-1 (vacuous for delta 4, 5).
LemmaReport verify_high_degree_dominance(DeltaRange range, unsigned threads = 1);

/// (delta-1) F(i, delta) > F(delta, delta) for 3 <= i <= t.
LemmaReport verify_delta_pair_dominance(DeltaRange range, unsigned threads = 1);

/// Both dominance sweeps.
std::pair<LemmaReport, LemmaReport> verify_dominance(DeltaRange range, unsigned threads = 1);

/// F(p, q) >= F(3, delta) for 1 <= p <= q <= t.
LemmaReport verify_pair_floor(DeltaRange range, unsigned threads = 1);

// Edge-block bound on tree profiles: if delta | n, no vertex degree lies in
// (t, delta), and no edge joins two delta-vertices, then the number of edges
// with both endpoint degrees <= t is at least delta - 1. Profiles that miss
// the hypothesis are skipped.
class BlockBoundChecker {
 public:
  explicit BlockBoundChecker(DeltaRange range) : range_(range) {}

  void consider(const DegreeProfile& p, std::string_view label);
  LemmaReport report() const;

  std::int64_t qualifying() const { return qualifying_; }
  std::int64_t skipped() const { return skipped_; }

  /// True when the profile meets the hypothesis (delta taken as p.delta()).
  static bool qualifies(const DegreeProfile& p);
  /// Edges with both endpoint degrees <= floor((delta+3)/2).
  static std::int64_t low_block_edges(const DegreeProfile& p);

 private:
  DeltaRange range_;
  std::int64_t qualifying_ = 0;
  std::int64_t skipped_ = 0;
  std::int64_t witness_count_ = 0;
  std::vector<Witness> witnesses_;
};

/// Block bound over every free tree of order <= max_order whose maximum degree
/// lies in `range`.
LemmaReport verify_block_bound(DeltaRange range, int max_order);

/// All six sweeps in a fixed order.
std::vector<LemmaReport> verify_all(DeltaRange range, int block_max_order, unsigned threads = 1);

inline int low_degree_cutoff(int delta) { return (delta + 3) / 2; }

}  // namespace treesigma
