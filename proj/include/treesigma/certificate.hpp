#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treesigma/profile.hpp"
#include "treesigma/rational.hpp"

namespace treesigma {

/// Certificates up to this delta carry a precomputed slack table; larger
/// ones evaluate the slack function on demand.
inline constexpr int kEagerSlackTableMaxDelta = 1000;

/// Slack of the dual constraint for edge type (i, j) under the certificate for
/// `delta`: (4d-6)(1/i + 1/j) + d^2 - 6d + 3 + 6/d - (i-j)^2. Symmetric in (i, j).
Rational slack_value(int delta, int i, int j);

// Dual-feasible (lambda, mu) for the edge-multiplicity LP with maximum degree
// `delta`, and the slack F(i, j) of every dual constraint. Construction
// verifies lambda = 4d-6, F >= 0, and that F vanishes exactly on (1, d) and (2, d).
class DualCertificate {
 public:
  explicit DualCertificate(int delta);  // throws DomainError if delta < 4

  int delta() const { return delta_; }
  const Rational& lambda() const { return lambda_; }
  const Rational& mu() const { return mu_; }
  const Rational& a_const() const { return lambda_; }
  const Rational& b_const() const { return mu_; }
  bool has_table() const { return !table_.empty(); }

  /// F(i, j) for 1 <= i, j <= delta; throws std::out_of_range otherwise.
  Rational slack(int i, int j) const;

 private:
  int delta_;
  Rational lambda_;
  Rational mu_;
  std::vector<Rational> table_;  // upper triangle, row-major, when delta <= threshold
};

DualCertificate certificate(int delta);

struct LpOptimum {
  int n = 0;
  int delta = 0;
  Rational m_1_delta;
  Rational m_2_delta;
  Rational sigma_bound;  // lambda n + mu (n-1)

  bool integral() const { return m_1_delta.is_integer() && m_2_delta.is_integer(); }
};

/// Closed-form unique optimum of the LP relaxation. Requires delta >= 4 and
/// n >= delta + 1 (n = delta + 1 gives the star).
LpOptimum lp_optimum(int n, int delta);

/// Sum of F(i, j) m_{i,j}. Throws DomainError if p.delta() > cert.delta().
Rational penalty(const DegreeProfile& p, const DualCertificate& cert);

/// lambda n + mu (n-1) - penalty. Accepts profiles whose maximum degree is at
/// most cert.delta(); the identity holds for any such tree.
Rational sigma_via_decomposition(const DegreeProfile& p, const DualCertificate& cert, int n);

enum class Coverage {
  kLpTight,         // n = 1 (mod delta): max equals the LP bound
  kPenaltyMinimum,  // n = 0 (mod delta): max equals LP bound - F(delta, delta)
  kNotCovered,      // other residues: only the strict LP bound is known
};

struct SigmaMaxPrediction {
  int n = 0;
  int delta = 0;
  int residue = 0;  // n mod delta
  Coverage coverage = Coverage::kNotCovered;
  Rational lp_bound;
  std::optional<Rational> value;  // engaged unless kNotCovered
};

SigmaMaxPrediction exact_sigma_max(int n, int delta);

const char* coverage_name(Coverage c);

}  // namespace treesigma
