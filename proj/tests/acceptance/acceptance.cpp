// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "support/prufer_oracle.hpp"
#include "support/random_trees.hpp"
#include "treesigma/canonical.hpp"
#include "treesigma/certificate.hpp"
#include "treesigma/constructions.hpp"
#include "treesigma/enumeration.hpp"
#include "treesigma/lemmas.hpp"
#include "treesigma/profile.hpp"
#include "treesigma/search.hpp"

namespace ts = treesigma;

namespace {

// All comparisons below are exact; no floating-point tolerance is used.
constexpr double kTolerance = 0.0;
constexpr int kMaxOrderResidueOne = 18;
constexpr int kLemmaDeltaMax = 1000;
constexpr int kBlockBoundMaxOrder = 16;
constexpr int kDecompositionMaxOrder = 12;
constexpr int kRandomLargeTrees = 10000;
constexpr int kOracleMaxOrder = 12;
constexpr int kPruferMaxOrder = 8;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;
};

unsigned threads() { return std::max(1u, std::thread::hardware_concurrency()); }

ts::SearchReport search(int n, int delta) {
  ts::SearchOptions opt;
  opt.threads = threads();
  return ts::search_sigma_max(n, delta, ts::DegreeFilter::Kind::kExact, opt);
}

Outcome residue_one_tightness() {
  Outcome out;
  std::ostringstream detail;
  int instances = 0;
  for (int d = 4; d <= 8; ++d) {
    for (int n = d + 1; n <= kMaxOrderResidueOne; n += d) {
      const ts::SearchReport r = search(n, d);
      ++instances;
      const bool value_ok = ts::Rational(r.sigma_max) == r.bound;
      const bool unique_ok = r.extremal_trees.size() == 1 && r.extremal_equals_family == true;
      if (!value_ok || !unique_ok) {
        out.pass = false;
        detail << " (delta=" << d << ", n=" << n << ": sigma_max=" << r.sigma_max << " bound=" << r.bound
               << " extremal_classes=" << r.extremal_trees.size() << ")";
      }
    }
  }
  out.detail = std::to_string(instances) + " instances" + detail.str();
  return out;
}

Outcome residue_zero_family() {
  Outcome out;
  std::ostringstream detail;
  const std::vector<std::pair<int, int>> cases{{4, 12}, {4, 16}, {5, 15}, {6, 18}};
  for (const auto& [d, n] : cases) {
    const ts::SearchReport r = search(n, d);
    const ts::Rational expected = r.bound - ts::certificate(d).slack(d, d);
    const bool value_ok = ts::Rational(r.sigma_max) == expected;
    const bool family_ok = r.extremal_equals_family == true;
    if (!value_ok || !family_ok) out.pass = false;
    detail << " (delta=" << d << ", n=" << n << ": sigma_max=" << r.sigma_max << " expected=" << expected
           << " extremal_classes=" << r.extremal_trees.size() << " family_classes=" << r.family_members.size()
           << (value_ok ? "" : " VALUE MISMATCH") << (family_ok ? "" : " FAMILY MISMATCH") << ")";
  }
  out.detail = detail.str();
  return out;
}

Outcome k_one_probe() {
  Outcome out;
  std::ostringstream detail;
  for (const auto& [d, n] : std::vector<std::pair<int, int>>{{4, 8}, {5, 10}}) {
    const ts::SearchReport r = search(n, d);
    const ts::Rational expected = r.bound - ts::certificate(d).slack(d, d);
    if (ts::Rational(r.sigma_max) != expected) out.pass = false;
    detail << " (delta=" << d << ", n=" << n << ": sigma_max=" << r.sigma_max << " expected=" << expected
           << " extremal=";
    for (const auto& t : r.extremal_trees) detail << t.graph6 << ' ';
    detail << "characterization_applicable=" << (r.characterization_applicable ? "true" : "false") << ")";
  }
  out.detail = detail.str();
  return out;
}

Outcome strictness() {
  Outcome out;
  std::ostringstream detail;
  for (int n : {10, 11, 14, 15}) {
    const ts::SearchReport r = search(n, 4);
    if (!(ts::Rational(r.sigma_max) < r.bound)) out.pass = false;
    detail << " (n=" << n << ": sigma_max=" << r.sigma_max << " bound=" << r.bound << " gap=" << r.gap << ")";
  }
  out.detail = detail.str();
  return out;
}

Outcome certificate_suite() {
  Outcome out;
  std::ostringstream detail;
  const ts::DeltaRange range{4, kLemmaDeltaMax};
  std::vector<ts::LemmaReport> reports;
  reports.push_back(ts::verify_slack_pattern(range, threads()));
  reports.push_back(ts::verify_minima_locations(range, threads()));
  auto [high, pair] = ts::verify_dominance(range, threads());
  reports.push_back(std::move(high));
  reports.push_back(std::move(pair));
  reports.push_back(ts::verify_pair_floor(range, threads()));
  for (const auto& r : reports) {
    if (r.status == ts::LemmaStatus::kFail) out.pass = false;
    detail << ' ' << r.lemma_id << '=' << ts::lemma_status_name(r.status);
    if (!r.vacuous_deltas.empty()) {
      detail << "[vacuous:";
      for (int d : r.vacuous_deltas) detail << ' ' << d;
      detail << ']';
    }
  }
  const auto& high_report = reports[2];
  if (high_report.vacuous_deltas != std::vector<int>{4, 5}) out.pass = false;
  // Spot-check the scaled sweep against the certificate's exact rational table.
  for (int d : {4, 5, 17, 250, kLemmaDeltaMax}) {
    const ts::DualCertificate cert(d);
    if (cert.slack(1, d).sign() != 0 || cert.slack(2, d).sign() != 0) out.pass = false;
  }
  const ts::LemmaReport block = ts::verify_block_bound(ts::DeltaRange{4, kBlockBoundMaxOrder}, kBlockBoundMaxOrder);
  detail << ' ' << block.lemma_id << '=' << ts::lemma_status_name(block.status) << "(n<=" << kBlockBoundMaxOrder << ")";
  if (block.status == ts::LemmaStatus::kFail) out.pass = false;
  out.detail = "delta 4.." + std::to_string(kLemmaDeltaMax) + ":" + detail.str();
  return out;
}

Outcome decomposition_identity() {
  Outcome out;
  std::int64_t checked = 0;
  auto check = [&](const ts::Tree& t, int d) {
    const ts::DegreeProfile p = ts::profile(t);
    ++checked;
    if (ts::sigma_via_decomposition(p, ts::certificate(d), t.order()) != ts::Rational(ts::sigma(t))) out.pass = false;
  };
  std::vector<ts::DualCertificate> certs;
  for (int d = 4; d <= 8; ++d) {
    for (int n = d + 1; n <= kDecompositionMaxOrder; ++n) {
      ts::FreeTreeGenerator gen(n, ts::DegreeFilter::exact(d));
      while (gen.next()) check(gen.tree(), d);
    }
  }
  const std::int64_t enumerated = checked;
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> deltas(4, 12);
  std::uniform_int_distribution<int> orders(kDecompositionMaxOrder + 1, 400);
  for (int k = 0; k < kRandomLargeTrees; ++k) {
    const int d = deltas(rng);
    check(ts::testing::random_tree_with_max_degree(std::max(orders(rng), d + 1), d, rng), d);
  }
  out.detail = std::to_string(enumerated) + " enumerated + " + std::to_string(checked - enumerated) + " random trees";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::ostringstream detail;
  const auto closure = ts::testing::leaf_extension_classes(kOracleMaxOrder, kPruferMaxOrder);
  for (int n = 1; n <= kOracleMaxOrder; ++n) {
    std::set<ts::CanonicalForm> produced;
    std::int64_t count = 0;
    ts::FreeTreeGenerator gen(n);
    while (gen.next()) {
      produced.insert(ts::canonical_form(gen.tree()));
      ++count;
    }
    const bool distinct = static_cast<std::int64_t>(produced.size()) == count;
    const std::set<ts::CanonicalForm> oracle =
        n <= kPruferMaxOrder ? ts::testing::prufer_free_tree_classes(n) : closure.at(n);
    const bool same = produced == oracle && count == ts::testing::known_free_tree_count(n);
    if (!distinct || !same) {
      out.pass = false;
      detail << " n=" << n << " mismatch";
    }
  }
  out.detail = "n<=" + std::to_string(kOracleMaxOrder) + " (Pruefer dedup n<=" + std::to_string(kPruferMaxOrder) +
               ", leaf-extension closure above)" + detail.str();
  return out;
}

Outcome handshake_identities() {
  Outcome out;
  std::int64_t checked = 0;
  auto check = [&](const ts::Tree& t) {
    ++checked;
    if (!ts::profile(t).identity_violations().empty()) out.pass = false;
  };
  for (int n = 1; n <= kOracleMaxOrder; ++n) {
    ts::FreeTreeGenerator gen(n);
    while (gen.next()) check(gen.tree());
  }
  std::mt19937_64 rng(kSeed + 1);
  for (int k = 0; k < kRandomLargeTrees; ++k) check(ts::testing::random_tree(2 + k % 500, rng));
  for (int d = 4; d <= 12; ++d) {
    for (int k = 1; k <= 30; ++k) {
      check(ts::tt1_opt(k, d));
      for (int pos : ts::tt0_positions(k)) check(ts::tt0_opt(k, d, pos));
    }
  }
  out.detail = std::to_string(checked) + " trees";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 residue-1 tightness and uniqueness", residue_one_tightness},
      {"2 residue-0 value and subdivided family", residue_zero_family},
      {"3 k=1 double-star probe", k_one_probe},
      {"4 strict bound off covered residues", strictness},
      {"5 certificate and lemma sweeps", certificate_suite},
      {"6 decomposition identity", decomposition_identity},
      {"7 enumeration oracle equivalence", oracle_equivalence},
      {"8 handshake identities", handshake_identities},
  };
  std::printf("tolerance: %g (exact arithmetic)\n", kTolerance);
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = fn();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
