#include "treesigma/search.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <string>

#include "treesigma/constructions.hpp"
#include "treesigma/errors.hpp"
#include "treesigma/graph6.hpp"
#include "treesigma/profile.hpp"

namespace treesigma {

namespace {

constexpr std::size_t kChunkTrees = 8192;

void check_feasible(int n, int delta, const SearchOptions& options) {
  if (delta < 4) throw DomainError("search requires delta >= 4, got " + std::to_string(delta));
  if (n <= delta) {
    throw DomainError("empty class: no tree of order " + std::to_string(n) + " has maximum degree " +
                      std::to_string(delta));
  }
  if (n > kSearchSizeGuard && !options.override_size_guard) {
    throw DomainError("order " + std::to_string(n) + " exceeds the exhaustive-search guard of " +
                      std::to_string(kSearchSizeGuard) + "; pass --override-size-guard to run it anyway");
  }
}

// Flattened parent arrays of one batch of generated trees.
struct Chunk {
  std::vector<int> parents;
  std::vector<int> degrees;
  std::size_t count = 0;
};

struct ChunkResult {
  std::int64_t best = -1;
  std::vector<std::vector<int>> argmax;  // parent arrays
};

ChunkResult evaluate(const Chunk& chunk, int n) {
  ChunkResult out;
  for (std::size_t t = 0; t < chunk.count; ++t) {
    const int* parent = chunk.parents.data() + t * static_cast<std::size_t>(n);
    const int* degree = chunk.degrees.data() + t * static_cast<std::size_t>(n);
    std::int64_t s = 0;
    for (int v = 1; v < n; ++v) {
      const std::int64_t d = degree[v] - degree[parent[v]];
      s += d * d;
    }
    if (s > out.best) {
      out.best = s;
      out.argmax.clear();
    }
    if (s == out.best) out.argmax.emplace_back(parent, parent + n);
  }
  return out;
}

void merge(ChunkResult& into, ChunkResult&& from) {
  if (from.best > into.best) {
    into = std::move(from);
  } else if (from.best == into.best) {
    for (auto& a : from.argmax) into.argmax.push_back(std::move(a));
  }
}

std::vector<ExtremalTree> dedupe(std::vector<ExtremalTree> trees) {
  std::sort(trees.begin(), trees.end(), [](const auto& a, const auto& b) { return a.form < b.form; });
  trees.erase(std::unique(trees.begin(), trees.end(), [](const auto& a, const auto& b) { return a.form == b.form; }),
              trees.end());
  return trees;
}

}  // namespace

std::string bound_status_name(BoundStatus s) { return s == BoundStatus::kTight ? "tight" : "gap"; }

std::vector<int> SearchReport::observed_degrees() const {
  std::set<int> all;
  for (const auto& t : extremal_trees) all.insert(t.degree_set.begin(), t.degree_set.end());
  return {all.begin(), all.end()};
}

ExtremalTree describe_tree(const Tree& t, int delta) {
  ExtremalTree out;
  out.form = canonical_form(t);
  out.graph6 = write_graph6(t);
  std::set<int> degrees;
  for (Vertex v = 0; v < t.order(); ++v) degrees.insert(t.degree(v));
  out.degree_set.assign(degrees.begin(), degrees.end());
  const DegreeProfile p = profile(t);
  for (int i = 1; i <= p.delta(); ++i) {
    for (int j = i; j <= p.delta(); ++j) {
      if (p.pair_count(i, j) != 0) out.pairs[{i, j}] = p.pair_count(i, j);
    }
  }
  if (delta >= 4 && p.delta() == delta) out.penalty = penalty(p, certificate(delta));
  return out;
}

SearchReport search_sigma_max(int n, int delta, DegreeFilter::Kind filter, const SearchOptions& options) {
  check_feasible(n, delta, options);
  const DegreeFilter degree_filter{filter == DegreeFilter::Kind::kNone ? DegreeFilter::Kind::kAtMost : filter, delta};

  SearchReport report;
  report.n = n;
  report.delta = delta;
  report.filter = degree_filter.kind;

  FreeTreeGenerator gen(n, degree_filter);
  ChunkResult total;
  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::future<ChunkResult>> in_flight;

  auto fill = [&](Chunk& chunk) {
    chunk.count = 0;
    chunk.parents.clear();
    chunk.degrees.clear();
    while (chunk.count < kChunkTrees && gen.next()) {
      chunk.parents.insert(chunk.parents.end(), gen.parents().begin(), gen.parents().end());
      chunk.degrees.insert(chunk.degrees.end(), gen.degrees().begin(), gen.degrees().end());
      ++chunk.count;
    }
    report.tree_count += static_cast<std::int64_t>(chunk.count);
    return chunk.count > 0;
  };

  // Chunks are merged strictly in generation order, so the report does not
  // depend on the thread count.
  for (;;) {
    Chunk chunk;
    if (!fill(chunk)) break;
    if (threads == 1) {
      merge(total, evaluate(chunk, n));
      continue;
    }
    in_flight.push_back(std::async(std::launch::async, [c = std::move(chunk), n] { return evaluate(c, n); }));
    if (in_flight.size() >= threads) {
      for (auto& f : in_flight) merge(total, f.get());
      in_flight.clear();
    }
  }
  for (auto& f : in_flight) merge(total, f.get());

  if (report.tree_count == 0) {
    throw DomainError("no tree of order " + std::to_string(n) + " passes the " + filter_name(report.filter) +
                      " degree filter for delta " + std::to_string(delta));
  }

  report.sigma_max = total.best;
  std::vector<ExtremalTree> extremal;
  for (const auto& parents : total.argmax) extremal.push_back(describe_tree(Tree::from_parents(parents), delta));
  report.extremal_trees = dedupe(std::move(extremal));

  report.prediction = exact_sigma_max(n, delta);
  report.bound = report.prediction.lp_bound;
  const Rational best(report.sigma_max);
  if (best > report.bound) {
    throw VerificationFailure("sigma_max " + best.to_string() + " exceeds the LP bound " + report.bound.to_string() +
                              " at n=" + std::to_string(n) + ", delta=" + std::to_string(delta));
  }
  report.gap = report.bound - best;
  report.bound_status = report.gap.sign() == 0 ? BoundStatus::kTight : BoundStatus::kGap;
  if (report.prediction.value) report.prediction_matches = (*report.prediction.value == best);

  const int k = n / delta;
  std::vector<ExtremalTree> members;
  if (report.prediction.coverage == Coverage::kLpTight) {
    report.family = "tt1_opt";
    members.push_back(describe_tree(tt1_opt(k, delta), delta));
  } else if (report.prediction.coverage == Coverage::kPenaltyMinimum) {
    // n = delta*(k'+1) with k' = n/delta - 1.
    const int family_k = k - 1;
    if (family_k >= 2) {
      report.family = "tt0_opt";
      for (int pos : tt0_positions(family_k)) members.push_back(describe_tree(tt0_opt(family_k, delta, pos), delta));
    } else {
      report.characterization_applicable = false;
      report.notes.push_back(
          "n = 2*delta: the subdivided family is empty (k = 1) and the structural characterization requiring "
          "m_{2,delta} > 0 does not apply; only the extremal value is predicted");
    }
  }
  if (!report.family.empty()) {
    report.family_members = dedupe(std::move(members));
    if (report.filter == DegreeFilter::Kind::kExact) {
      bool same = report.family_members.size() == report.extremal_trees.size();
      for (std::size_t i = 0; same && i < report.family_members.size(); ++i) {
        same = report.family_members[i].form == report.extremal_trees[i].form;
      }
      report.extremal_equals_family = same;
      if (!same) {
        report.notes.push_back("extremal set differs from the " + report.family + " family up to isomorphism (" +
                               std::to_string(report.extremal_trees.size()) + " extremal classes, " +
                               std::to_string(report.family_members.size()) + " family classes)");
      }
    }
  }
  if (report.filter == DegreeFilter::Kind::kAtMost) {
    report.notes.push_back("at-most filter: extremal trees may have maximum degree below delta");
  }
  return report;
}

std::vector<SearchReport> residue_scan(int delta, int k_min, int k_max, DegreeFilter::Kind filter,
                                       const SearchOptions& options) {
  if (k_min < 1 || k_max < k_min) {
    throw DomainError("k range must satisfy 1 <= k_min <= k_max, got [" + std::to_string(k_min) + ", " +
                      std::to_string(k_max) + "]");
  }
  // Validate every order up front so a scan never fails halfway.
  for (int k = k_min; k <= k_max; ++k) {
    for (int r = 1; r <= delta; ++r) check_feasible(delta * k + r, delta, options);
  }
  std::vector<SearchReport> out;
  for (int k = k_min; k <= k_max; ++k) {
    for (int r = 1; r <= delta; ++r) out.push_back(search_sigma_max(delta * k + r, delta, filter, options));
  }
  return out;
}

}  // namespace treesigma
