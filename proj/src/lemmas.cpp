#include "treesigma/lemmas.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <string>

#include "treesigma/certificate.hpp"
#include "treesigma/enumeration.hpp"
#include "treesigma/errors.hpp"
#include "treesigma/graph6.hpp"
#include "treesigma/slack_kernel.hpp"

namespace treesigma {

std::string lemma_status_name(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::kPass:
      return "pass";
    case LemmaStatus::kVacuousPass:
      return "vacuous-pass";
    case LemmaStatus::kFail:
      return "fail";
  }
  return "unknown";
}

namespace {

struct DeltaOutcome {
  std::vector<Witness> witnesses;
  std::int64_t witness_count = 0;
  std::int64_t checks = 0;
  bool vacuous = false;
  std::vector<std::int64_t> counters;

  void fail(Witness w) {
    ++witness_count;
    if (witnesses.size() < kMaxStoredWitnesses) witnesses.push_back(std::move(w));
  }
};

using DeltaCheck = std::function<DeltaOutcome(int delta)>;

void require_range(DeltaRange r) {
  if (r.lo < 4 || r.hi < r.lo || r.hi > kLemmaMaxDelta) {
    throw DomainError("delta range must satisfy 4 <= lo <= hi <= " + std::to_string(kLemmaMaxDelta) + ", got [" +
                      std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]");
  }
}

std::string text(std::int64_t v) { return std::to_string(v); }
std::string text(const ScaledSlack& s) { return s.to_rational().to_string(); }

// Runs `check` for every delta in the range and merges in delta order, so the
// report is independent of `threads`.
LemmaReport sweep(const std::string& id, DeltaRange range, unsigned threads, const std::vector<std::string>& counters,
                  const DeltaCheck& check) {
  require_range(range);
  const int total = range.hi - range.lo + 1;
  std::vector<DeltaOutcome> outcomes(static_cast<std::size_t>(total));
  auto run_block = [&](int begin, int end) {
    for (int k = begin; k < end; ++k) outcomes[static_cast<std::size_t>(k)] = check(range.lo + k);
  };
  const int workers = static_cast<int>(std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(total)));
  if (workers == 1) {
    run_block(0, total);
  } else {
    std::vector<std::future<void>> jobs;
    // Interleaved blocks balance the quadratic per-delta cost.
    const int block = std::max(1, total / (workers * 8));
    std::atomic<int> cursor{0};
    for (int w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&] {
        for (int start = cursor.fetch_add(block); start < total; start = cursor.fetch_add(block)) {
          run_block(start, std::min(total, start + block));
        }
      }));
    }
    for (auto& j : jobs) j.get();
  }

  LemmaReport report;
  report.lemma_id = id;
  report.delta_range = range;
  std::vector<std::int64_t> sums(counters.size(), 0);
  bool any_checked = false;
  for (int k = 0; k < total; ++k) {
    auto& o = outcomes[static_cast<std::size_t>(k)];
    report.checks += o.checks;
    report.witness_count += o.witness_count;
    for (auto& w : o.witnesses) {
      if (report.witnesses.size() < kMaxStoredWitnesses) report.witnesses.push_back(std::move(w));
    }
    if (o.vacuous) {
      report.vacuous_deltas.push_back(range.lo + k);
    } else {
      any_checked = true;
    }
    for (std::size_t c = 0; c < sums.size() && c < o.counters.size(); ++c) sums[c] += o.counters[c];
  }
  for (std::size_t c = 0; c < counters.size(); ++c) report.counters.emplace_back(counters[c], sums[c]);
  if (report.witness_count > 0) {
    report.status = LemmaStatus::kFail;
  } else {
    report.status = any_checked ? LemmaStatus::kPass : LemmaStatus::kVacuousPass;
  }
  return report;
}

}  // namespace

LemmaReport verify_slack_pattern(DeltaRange range, unsigned threads) {
  return sweep("slack-nonnegativity", range, threads, {}, [](int delta) {
    DeltaOutcome out;
    for (int i = 1; i <= delta; ++i) {
      for (int j = i; j <= delta; ++j) {
        const ScaledSlack f = scaled_slack(delta, i, j);
        const bool tight = j == delta && (i == 1 || i == 2);
        ++out.checks;
        if (tight ? f.sign() != 0 : f.sign() <= 0) {
          out.fail({{"delta", text(delta)}, {"i", text(i)}, {"j", text(j)}, {"F", text(f)},
                    {"expected", tight ? "F = 0" : "F > 0"}});
        }
      }
    }
    return out;
  });
}

LemmaReport verify_minima_locations(DeltaRange range, unsigned threads) {
  const std::vector<std::string> counters{"ties_first_range", "ties_second_range", "second_range_min_shifts_with_j_delta",
                                          "second_range_ties_with_j_delta"};
  return sweep("slack-minima", range, threads, counters, [](int delta) {
    DeltaOutcome out;
    out.counters.assign(4, 0);
    const int t = low_degree_cutoff(delta);

    // Returns the argmin set of j -> F(i, j) over [1, j_max] and the minimum.
    auto argmin = [&](int i, int j_max, ScaledSlack& min_value) {
      std::vector<int> arg{1};
      min_value = scaled_slack(delta, i, 1);
      for (int j = 2; j <= j_max; ++j) {
        const ScaledSlack f = scaled_slack(delta, i, j);
        const int c = compare_scaled(f, 1, min_value, 1);
        if (c < 0) {
          min_value = f;
          arg.assign(1, j);
        } else if (c == 0) {
          arg.push_back(j);
        }
      }
      return arg;
    };

    for (int i = 3; i <= t && i <= delta; ++i) {
      ScaledSlack m{};
      const auto arg = argmin(i, delta, m);
      ++out.checks;
      if (arg.size() > 1) ++out.counters[0];
      if (std::find(arg.begin(), arg.end(), delta) == arg.end()) {
        out.fail({{"delta", text(delta)}, {"i", text(i)}, {"range", "1.." + text(delta)},
                  {"argmin_j", text(arg.front())}, {"min_F", text(m)},
                  {"F_at_delta", text(scaled_slack(delta, i, delta))}});
      }
    }
    for (int i = t + 1; i <= delta - 1; ++i) {
      ScaledSlack m{};
      const auto arg = argmin(i, delta - 1, m);
      ++out.checks;
      if (arg.size() > 1) ++out.counters[1];
      const int with_delta = compare_scaled(scaled_slack(delta, i, delta), 1, m, 1);
      if (with_delta < 0) ++out.counters[2];
      if (with_delta == 0) ++out.counters[3];
      if (std::find(arg.begin(), arg.end(), 2) == arg.end()) {
        out.fail({{"delta", text(delta)}, {"i", text(i)}, {"range", "1.." + text(delta - 1)},
                  {"argmin_j", text(arg.front())}, {"min_F", text(m)}, {"F_at_2", text(scaled_slack(delta, i, 2))}});
      }
    }
    return out;
  });
}

LemmaReport verify_high_degree_dominance(DeltaRange range, unsigned threads) {
  return sweep("high-degree-dominance", range, threads, {}, [](int delta) {
    DeltaOutcome out;
    const ScaledSlack corner = scaled_slack(delta, delta, delta);
    const int lo = low_degree_cutoff(delta) + 1;
    out.vacuous = lo > delta - 1;
    for (int i = lo; i <= delta - 1; ++i) {
      const ScaledSlack f = scaled_slack(delta, i, 2);
      ++out.checks;
      if (compare_scaled(f, i, corner, 1) <= 0) {
        out.fail({{"delta", text(delta)}, {"i", text(i)}, {"i*F(i,2)", (f.to_rational() * Rational(i)).to_string()},
                  {"F(delta,delta)", text(corner)}});
      }
    }
    return out;
  });
}

LemmaReport verify_delta_pair_dominance(DeltaRange range, unsigned threads) {
  return sweep("delta-pair-dominance", range, threads, {}, [](int delta) {
    DeltaOutcome out;
    const ScaledSlack corner = scaled_slack(delta, delta, delta);
    const int hi = low_degree_cutoff(delta);
    out.vacuous = hi < 3;
    for (int i = 3; i <= hi; ++i) {
      const ScaledSlack f = scaled_slack(delta, i, delta);
      ++out.checks;
      if (compare_scaled(f, delta - 1, corner, 1) <= 0) {
        out.fail({{"delta", text(delta)}, {"i", text(i)},
                  {"(delta-1)*F(i,delta)", (f.to_rational() * Rational(delta - 1)).to_string()},
                  {"F(delta,delta)", text(corner)}});
      }
    }
    return out;
  });
}

std::pair<LemmaReport, LemmaReport> verify_dominance(DeltaRange range, unsigned threads) {
  return {verify_high_degree_dominance(range, threads), verify_delta_pair_dominance(range, threads)};
}

LemmaReport verify_pair_floor(DeltaRange range, unsigned threads) {
  return sweep("pair-floor", range, threads, {}, [](int delta) {
    DeltaOutcome out;
    const ScaledSlack floor = scaled_slack(delta, 3, delta);
    const int t = low_degree_cutoff(delta);
    for (int p = 1; p <= t; ++p) {
      for (int q = p; q <= t; ++q) {
        const ScaledSlack f = scaled_slack(delta, p, q);
        ++out.checks;
        if (compare_scaled(f, 1, floor, 1) < 0) {
          out.fail({{"delta", text(delta)}, {"p", text(p)}, {"q", text(q)}, {"F(p,q)", text(f)},
                    {"F(3,delta)", text(floor)}});
        }
      }
    }
    return out;
  });
}

bool BlockBoundChecker::qualifies(const DegreeProfile& p) {
  const int delta = p.delta();
  if (delta < 4 || p.order() % delta != 0) return false;
  for (int i = low_degree_cutoff(delta) + 1; i < delta; ++i) {
    if (p.degree_count(i) != 0) return false;
  }
  return p.pair_count(delta, delta) == 0;
}

std::int64_t BlockBoundChecker::low_block_edges(const DegreeProfile& p) {
  const int t = low_degree_cutoff(p.delta());
  std::int64_t total = 0;
  for (int a = 1; a <= t; ++a) {
    for (int b = a; b <= t; ++b) total += p.pair_count(a, b);
  }
  return total;
}

void BlockBoundChecker::consider(const DegreeProfile& p, std::string_view label) {
  if (p.delta() < range_.lo || p.delta() > range_.hi || !qualifies(p)) {
    ++skipped_;
    return;
  }
  ++qualifying_;
  const std::int64_t block = low_block_edges(p);
  if (block < p.delta() - 1) {
    ++witness_count_;
    if (witnesses_.size() < kMaxStoredWitnesses) {
      witnesses_.push_back({{"tree", std::string(label)},
                            {"n", std::to_string(p.order())},
                            {"delta", std::to_string(p.delta())},
                            {"low_block_edges", std::to_string(block)},
                            {"required", std::to_string(p.delta() - 1)}});
    }
  }
}

LemmaReport BlockBoundChecker::report() const {
  LemmaReport r;
  r.lemma_id = "block-edge-bound";
  r.delta_range = range_;
  r.witnesses = witnesses_;
  r.witness_count = witness_count_;
  r.checks = qualifying_;
  r.counters = {{"qualifying_profiles", qualifying_}, {"skipped_profiles", skipped_}};
  if (witness_count_ > 0) {
    r.status = LemmaStatus::kFail;
  } else {
    r.status = qualifying_ > 0 ? LemmaStatus::kPass : LemmaStatus::kVacuousPass;
  }
  return r;
}

LemmaReport verify_block_bound(DeltaRange range, int max_order) {
  require_range(range);
  BlockBoundChecker checker(range);
  for (int n = range.lo + 1; n <= max_order; ++n) {
    FreeTreeGenerator gen(n, DegreeFilter::at_most(std::min(range.hi, n - 1)));
    while (gen.next()) {
      const Tree t = gen.tree();
      checker.consider(profile(t), write_graph6(t));
    }
  }
  return checker.report();
}

std::vector<LemmaReport> verify_all(DeltaRange range, int block_max_order, unsigned threads) {
  std::vector<LemmaReport> out;
  out.push_back(verify_slack_pattern(range, threads));
  out.push_back(verify_minima_locations(range, threads));
  auto [high, pair] = verify_dominance(range, threads);
  out.push_back(std::move(high));
  out.push_back(std::move(pair));
  out.push_back(verify_block_bound(range, block_max_order));
  out.push_back(verify_pair_floor(range, threads));
  return out;
}

}  // namespace treesigma
