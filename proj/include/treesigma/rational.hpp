#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace treesigma {

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator. Thin value wrapper around GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "p" or "p/q"; throws std::invalid_argument on malformed text or q == 0.
  static Rational parse(std::string_view text);

  bool is_integer() const;
  int sign() const { return sgn(value_); }
  std::string numerator() const;
  std::string denominator() const;

  /// "p/q" in lowest terms, or "p" when the denominator is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value);
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace treesigma
