#pragma once

#include "stabwalls/rational.hpp"

#include <string>
#include <vector>

namespace stabwalls {

/// Dense univariate polynomial over Q, coefficients in increasing degree.
/// The zero polynomial has no coefficients; trailing zeros are always trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// a + b t
  static Polynomial linear(const Rational& a, const Rational& b) { return Polynomial({a, b}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& k) const;

  /// Monic scaling; the zero polynomial stays zero.
  Polynomial monic() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient, remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace stabwalls
