#include "treesigma/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace treesigma {

namespace {

mpz_class to_mpz(std::int64_t v) {
  // mpz_class(long) is exact on LP64; go through a string elsewhere.
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    return mpz_class(static_cast<long>(v));
  } else {
    return mpz_class(std::to_string(v));
  }
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(to_mpz(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  value_ = mpq_class(to_mpz(num), to_mpz(den));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw std::invalid_argument("Rational: empty component in '" + std::string(text) + "'");
    std::size_t start = (part[0] == '-') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
      }
    }
    return mpz_class(std::string(part));
  };
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_int(text)));
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  return Rational(mpq_class(num, den));
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::numerator() const { return value_.get_num().get_str(); }
std::string Rational::denominator() const { return value_.get_den().get_str(); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace treesigma
