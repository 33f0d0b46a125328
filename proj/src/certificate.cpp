#include "treesigma/certificate.hpp"

#include <stdexcept>
#include <string>

#include "treesigma/errors.hpp"
#include "treesigma/slack_kernel.hpp"

namespace treesigma {

Rational ScaledSlack::to_rational() const {
  auto to_text = [](int128 v) {
    const bool negative = v < 0;
    uint128 u = negative ? -static_cast<uint128>(v) : static_cast<uint128>(v);
    std::string digits;
    do {
      digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
      u /= 10;
    } while (u != 0);
    return negative ? "-" + digits : digits;
  };
  return Rational::parse(to_text(num) + "/" + to_text(den));
}

int compare_scaled(const ScaledSlack& lhs, std::int64_t lhs_weight, const ScaledSlack& rhs, std::int64_t rhs_weight) {
  int128 left = 0;
  int128 right = 0;
  const bool overflow = __builtin_mul_overflow(lhs.num, int128{lhs_weight}, &left) ||
                        __builtin_mul_overflow(left, rhs.den, &left) ||
                        __builtin_mul_overflow(rhs.num, int128{rhs_weight}, &right) ||
                        __builtin_mul_overflow(right, lhs.den, &right);
  if (!overflow) return (left > right) - (left < right);
  const Rational l = lhs.to_rational() * Rational(lhs_weight);
  const Rational r = rhs.to_rational() * Rational(rhs_weight);
  return (l > r) - (l < r);
}

namespace {

void require_delta(int delta) {
  if (delta < 4) throw DomainError("maximum degree must be >= 4, got " + std::to_string(delta));
}

Rational lambda_for(int delta) { return Rational(4LL * delta - 6); }

Rational mu_for(int delta) {
  const std::int64_t d = delta;
  return Rational(d * d - 6 * d + 3) + Rational(6, d);
}

}  // namespace

Rational slack_value(int delta, int i, int j) {
  const Rational weight = Rational(1, i) + Rational(1, j);
  const std::int64_t diff = i - j;
  return lambda_for(delta) * weight + mu_for(delta) - Rational(diff * diff);
}

DualCertificate::DualCertificate(int delta) : delta_(delta) {
  require_delta(delta);
  lambda_ = lambda_for(delta);
  mu_ = mu_for(delta);

  // lambda is pinned by the two tight constraints at (1, d) and (2, d).
  const std::int64_t d = delta;
  if (lambda_ != Rational(2 * ((d - 1) * (d - 1) - (d - 2) * (d - 2)))) {
    throw VerificationFailure("lambda differs from 2((d-1)^2 - (d-2)^2)");
  }

  auto check_entry = [&](int i, int j, const Rational& f) {
    const bool tight_pair = j == delta && (i == 1 || i == 2);
    if (tight_pair ? f.sign() != 0 : f.sign() <= 0) {
      throw VerificationFailure("slack F(" + std::to_string(i) + "," + std::to_string(j) + ") = " + f.to_string() +
                                " breaks the nonnegativity/zero-set pattern for delta " + std::to_string(delta));
    }
  };

  if (delta <= kEagerSlackTableMaxDelta) {
    table_.reserve(static_cast<std::size_t>(delta) * (delta + 1) / 2);
    for (int i = 1; i <= delta; ++i) {
      const Rational inv_i = Rational(1, i);
      for (int j = i; j <= delta; ++j) {
        const std::int64_t diff = j - i;
        Rational f = lambda_ * (inv_i + Rational(1, j)) + mu_ - Rational(diff * diff);
        check_entry(i, j, f);
        table_.push_back(std::move(f));
      }
    }
  } else {
    // Sign pattern via the exact scaled kernel; values stay on demand.
    for (int i = 1; i <= delta; ++i) {
      for (int j = i; j <= delta; ++j) {
        const int s = scaled_slack(delta, i, j).sign();
        const bool tight_pair = j == delta && (i == 1 || i == 2);
        if (tight_pair ? s != 0 : s <= 0) check_entry(i, j, slack_value(delta, i, j));
      }
    }
  }
}

Rational DualCertificate::slack(int i, int j) const {
  if (i < 1 || j < 1 || i > delta_ || j > delta_) {
    throw std::out_of_range("slack index (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." +
                            std::to_string(delta_));
  }
  if (i > j) std::swap(i, j);
  if (table_.empty()) return slack_value(delta_, i, j);
  const auto row = static_cast<std::size_t>(i - 1);
  return table_[row * static_cast<std::size_t>(delta_) - row * (row - 1) / 2 + static_cast<std::size_t>(j - i)];
}

DualCertificate certificate(int delta) { return DualCertificate(delta); }

LpOptimum lp_optimum(int n, int delta) {
  require_delta(delta);
  if (n <= delta) {
    throw DomainError("no tree of order n = " + std::to_string(n) + " has maximum degree " + std::to_string(delta));
  }
  const std::int64_t nn = n;
  const std::int64_t d = delta;
  LpOptimum opt;
  opt.n = n;
  opt.delta = delta;
  opt.m_1_delta = Rational((d - 2) * nn + (d + 2), d);
  opt.m_2_delta = Rational(2 * (nn - d - 1), d);
  opt.sigma_bound = lambda_for(delta) * Rational(nn) + mu_for(delta) * Rational(nn - 1);
  return opt;
}

namespace {

Rational slack_sum(const DegreeProfile& p, const DualCertificate& cert) {
  Rational total;
  for (int i = 1; i <= p.delta(); ++i) {
    for (int j = i; j <= p.delta(); ++j) {
      const auto m = p.pair_count(i, j);
      if (m != 0) total += cert.slack(i, j) * Rational(m);
    }
  }
  return total;
}

}  // namespace

Rational penalty(const DegreeProfile& p, const DualCertificate& cert) {
  if (p.delta() > cert.delta()) {
    throw DomainError("profile has maximum degree " + std::to_string(p.delta()) + " but the certificate only covers " +
                      std::to_string(cert.delta()));
  }
  return slack_sum(p, cert);
}

Rational sigma_via_decomposition(const DegreeProfile& p, const DualCertificate& cert, int n) {
  if (p.delta() > cert.delta()) {
    throw DomainError("profile maximum degree " + std::to_string(p.delta()) + " exceeds certificate delta " +
                      std::to_string(cert.delta()));
  }
  return cert.lambda() * Rational(n) + cert.mu() * Rational(n - 1) - slack_sum(p, cert);
}

SigmaMaxPrediction exact_sigma_max(int n, int delta) {
  const LpOptimum opt = lp_optimum(n, delta);
  SigmaMaxPrediction out;
  out.n = n;
  out.delta = delta;
  out.residue = n % delta;
  out.lp_bound = opt.sigma_bound;
  if (out.residue == 1) {
    out.coverage = Coverage::kLpTight;
    out.value = opt.sigma_bound;
  } else if (out.residue == 0) {
    out.coverage = Coverage::kPenaltyMinimum;
    out.value = opt.sigma_bound - slack_value(delta, delta, delta);
  }
  return out;
}

const char* coverage_name(Coverage c) {
  switch (c) {
    case Coverage::kLpTight:
      return "lp-tight";
    case Coverage::kPenaltyMinimum:
      return "penalty-minimum";
    case Coverage::kNotCovered:
      return "not-covered";
  }
  return "unknown";
}

}  // namespace treesigma
