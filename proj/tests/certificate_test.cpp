#include "treesigma/certificate.hpp"

#include <random>

#include "gtest/gtest.h"
#include "support/random_trees.hpp"
#include "treesigma/constructions.hpp"
#include "treesigma/enumeration.hpp"
#include "treesigma/errors.hpp"
#include "treesigma/slack_kernel.hpp"

namespace treesigma {
namespace {

Tree from(int n, std::vector<Edge> e) { return Tree::from_edges(n, e); }

Tree path(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Tree::from_edges(n, e);
}

Tree double_star(int delta) {
  std::vector<Edge> e{{0, 1}};
  int next = 2;
  for (int c = 0; c < 2; ++c) {
    for (int k = 0; k < delta - 1; ++k) e.emplace_back(c, next++);
  }
  return Tree::from_edges(next, e);
}

TEST(CertificateTest, DeltaFourValues) {
  const DualCertificate cert = certificate(4);
  EXPECT_EQ(cert.lambda(), Rational(10));
  EXPECT_EQ(cert.mu(), Rational(-7, 2));
  EXPECT_EQ(cert.slack(1, 4), Rational(0));
  EXPECT_EQ(cert.slack(2, 4), Rational(0));
  EXPECT_EQ(cert.slack(4, 4), Rational(3, 2));  // 2*10/4 - 7/2
  EXPECT_EQ(cert.slack(3, 3), Rational(19, 6));  // 10*(2/3) - 7/2
  EXPECT_EQ(cert.slack(4, 1), cert.slack(1, 4));
}

TEST(CertificateTest, RejectsSmallDelta) {
  EXPECT_THROW((void)certificate(3), DomainError);
  EXPECT_THROW((void)certificate(0), DomainError);
}

TEST(CertificateTest, SlackIndexOutOfRange) {
  const DualCertificate cert = certificate(5);
  EXPECT_THROW((void)cert.slack(0, 3), std::out_of_range);
  EXPECT_THROW((void)cert.slack(2, 6), std::out_of_range);
}

TEST(CertificateTest, ClosedFormsAcrossDeltas) {
  for (int d = 4; d <= 80; ++d) {
    const DualCertificate cert = certificate(d);
    EXPECT_EQ(cert.lambda(), Rational(4 * d - 6));
    EXPECT_EQ(cert.mu(), Rational(d * d - 6 * d + 3) + Rational(6, d));
    // F(i,j) = lambda(1/i + 1/j) + mu - (i-j)^2, including the tight pairs.
    for (int i = 1; i <= d; ++i) {
      for (int j = i; j <= d; ++j) {
        const Rational expected =
            cert.lambda() * (Rational(1, i) + Rational(1, j)) + cert.mu() - Rational((i - j) * (i - j));
        ASSERT_EQ(cert.slack(i, j), expected);
        const bool tight = j == d && (i == 1 || i == 2);
        ASSERT_EQ(cert.slack(i, j).sign(), tight ? 0 : 1) << d << " " << i << " " << j;
      }
    }
  }
}

TEST(CertificateTest, ScaledKernelAgreesWithRationalTable) {
  for (int d = 4; d <= 60; ++d) {
    const DualCertificate cert = certificate(d);
    for (int i = 1; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) ASSERT_EQ(scaled_slack(d, i, j).to_rational(), cert.slack(i, j));
    }
  }
}

TEST(CertificateTest, CompareScaledFallsBackOnOverflow) {
  const std::int64_t d = kScaledSlackMaxDelta;
  const ScaledSlack a = scaled_slack(d, 3, d);
  const ScaledSlack b = scaled_slack(d, d, d);
  const Rational ra = a.to_rational() * Rational(d - 1);
  const Rational rb = b.to_rational();
  EXPECT_EQ(compare_scaled(a, d - 1, b, 1), (ra > rb) - (ra < rb));
  EXPECT_EQ(compare_scaled(b, 1, b, 1), 0);
}

TEST(CertificateTest, OnDemandAboveTableThreshold) {
  const DualCertificate cert = certificate(kEagerSlackTableMaxDelta + 7);
  EXPECT_FALSE(cert.has_table());
  EXPECT_TRUE(certificate(kEagerSlackTableMaxDelta).has_table());
  const int d = cert.delta();
  EXPECT_EQ(cert.slack(1, d), Rational(0));
  EXPECT_EQ(cert.slack(7, 300), slack_value(d, 7, 300));
}

TEST(LpOptimumTest, SubstitutionExamples) {
  const LpOptimum nine = lp_optimum(9, 4);
  EXPECT_EQ(nine.m_1_delta, Rational(6));
  EXPECT_EQ(nine.m_2_delta, Rational(2));
  EXPECT_EQ(nine.sigma_bound, Rational(62));
  EXPECT_TRUE(nine.integral());

  const LpOptimum ten = lp_optimum(10, 4);
  EXPECT_EQ(ten.m_1_delta, Rational(13, 2));
  EXPECT_FALSE(ten.integral());

  const LpOptimum star = lp_optimum(5, 4);
  EXPECT_EQ(star.m_1_delta, Rational(4));
  EXPECT_EQ(star.m_2_delta, Rational(0));
  EXPECT_EQ(star.sigma_bound, Rational(36));
}

TEST(LpOptimumTest, IntegralButUnrealizedAtHalfResidue) {
  const LpOptimum opt = lp_optimum(7, 4);
  EXPECT_EQ(opt.m_1_delta, Rational(5));
  EXPECT_EQ(opt.m_2_delta, Rational(1));
  EXPECT_TRUE(opt.integral());
  EXPECT_EQ(exact_sigma_max(7, 4).coverage, Coverage::kNotCovered);
}

TEST(LpOptimumTest, DomainErrors) {
  EXPECT_THROW((void)lp_optimum(4, 4), DomainError);
  EXPECT_THROW((void)lp_optimum(10, 3), DomainError);
}

// Primal feasibility, strong duality, and integrality iff delta | 2(n-1).
// For even delta this includes n = 1 + delta/2 (mod delta), where the
// integral optimum is still not realized by any tree.
TEST(LpOptimumTest, DualityAndIntegralityProperties) {
  for (int d = 4; d <= 40; ++d) {
    for (int n = d + 1; n <= d + 4 * d; ++n) {
      const LpOptimum opt = lp_optimum(n, d);
      ASSERT_EQ(opt.m_1_delta + opt.m_2_delta, Rational(n - 1));
      const Rational w1 = Rational(1) + Rational(1, d);
      const Rational w2 = Rational(1, 2) + Rational(1, d);
      ASSERT_EQ(w1 * opt.m_1_delta + w2 * opt.m_2_delta, Rational(n));
      const Rational primal =
          Rational((d - 1) * (d - 1)) * opt.m_1_delta + Rational((d - 2) * (d - 2)) * opt.m_2_delta;
      ASSERT_EQ(primal, opt.sigma_bound);
      ASSERT_EQ(opt.integral(), 2 * (n - 1) % d == 0) << n << " " << d;
      if (n % d == 1) ASSERT_TRUE(opt.integral());
    }
  }
}

TEST(PenaltyTest, PathAgainstDeltaFour) {
  const DualCertificate cert = certificate(4);
  const DegreeProfile p = profile(path(9));
  EXPECT_EQ(penalty(p, cert), Rational(60));  // 62 - sigma(P9) = 62 - 2
  EXPECT_EQ(sigma_via_decomposition(p, cert, 9), Rational(2));
}

TEST(PenaltyTest, RejectsProfileAboveCertificate) {
  const DegreeProfile p = profile(from(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}));
  EXPECT_THROW((void)penalty(p, certificate(4)), DomainError);
  EXPECT_THROW((void)sigma_via_decomposition(p, certificate(4), 6), DomainError);
}

TEST(DecompositionTest, Examples) {
  const DualCertificate cert = certificate(4);
  EXPECT_EQ(sigma_via_decomposition(profile(tt1_opt(2, 4)), cert, 9), Rational(62));
  EXPECT_EQ(penalty(profile(double_star(4)), cert), Rational(3, 2));
  EXPECT_EQ(sigma_via_decomposition(profile(double_star(4)), cert, 8), Rational(54));
  EXPECT_EQ(sigma_via_decomposition(profile(tt1_opt(1, 4)), cert, 5), Rational(36));
}

TEST(DecompositionTest, MatchesEdgewiseSigmaOnRandomTrees) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> deltas(4, 8);
  for (int k = 0; k < 2000; ++k) {
    const int d = deltas(rng);
    const Tree t = testing::random_tree_with_max_degree(d + 1 + k % 60, d, rng);
    const DualCertificate cert = certificate(d);
    const DegreeProfile p = profile(t);
    ASSERT_EQ(sigma_via_decomposition(p, cert, t.order()), Rational(sigma(t)));
    ASSERT_GE(penalty(p, cert).sign(), 0);
  }
}

// Zero penalty forces the support into {(1,d), (2,d)}.
TEST(PenaltyTest, ZeroPenaltyImpliesTightSupport) {
  for (int d = 4; d <= 6; ++d) {
    const DualCertificate cert = certificate(d);
    for (int n = d + 1; n <= 14; ++n) {
      FreeTreeGenerator gen(n, DegreeFilter::exact(d));
      while (gen.next()) {
        const DegreeProfile p = profile(gen.tree());
        if (penalty(p, cert).sign() != 0) continue;
        for (int i = 1; i <= d; ++i) {
          for (int j = i; j <= d; ++j) {
            if (j == d && (i == 1 || i == 2)) continue;
            ASSERT_EQ(p.pair_count(i, j), 0);
          }
        }
        ASSERT_EQ(n % d, 1);
      }
    }
  }
}

TEST(ExactSigmaMaxTest, Residues) {
  const auto nine = exact_sigma_max(9, 4);
  EXPECT_EQ(nine.coverage, Coverage::kLpTight);
  EXPECT_EQ(*nine.value, Rational(62));

  const auto eight = exact_sigma_max(8, 4);
  EXPECT_EQ(eight.coverage, Coverage::kPenaltyMinimum);
  EXPECT_EQ(*eight.value, Rational(54));

  const auto ten = exact_sigma_max(10, 4);
  EXPECT_EQ(ten.coverage, Coverage::kNotCovered);
  EXPECT_FALSE(ten.value.has_value());
  EXPECT_EQ(ten.lp_bound, Rational(137, 2));
  EXPECT_THROW((void)exact_sigma_max(3, 4), DomainError);
}

}  // namespace
}  // namespace treesigma
