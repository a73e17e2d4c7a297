#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stabwalls {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown for malformed user input (bad rational strings, bad JSON shapes).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p" or "-p/q" into a canonical rational. q must be nonzero.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Decimal rendering with a fixed number of fractional digits. Presentation only.
std::string to_decimal(const Rational& q, int digits = 6);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// An extended slope value: a finite rational or +infinity.
class Slope {
 public:
  static Slope infinite() { return Slope(); }
  explicit Slope(Rational value) : finite_(true), value_(std::move(value)) {}

  bool is_infinite() const { return !finite_; }
  const Rational& value() const;

  friend bool operator==(const Slope& a, const Slope& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

  std::string str() const { return finite_ ? to_string(value_) : "+inf"; }

 private:
  Slope() = default;
  bool finite_ = false;
  Rational value_;
};

}  // namespace stabwalls
