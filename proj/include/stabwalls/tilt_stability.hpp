#pragma once

#include "stabwalls/chern_lattice.hpp"

#include <stdexcept>
#include <vector>

namespace stabwalls {

/// Signals parameters outside alpha^2 > 0, s > 0.
class InvalidParams : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A point (beta, alpha^2, s) of the stability parameter space. alpha only
/// enters the charges through alpha^2, so it is stored squared to stay exact.
class StabilityParams {
 public:
  /// Throws InvalidParams unless alpha_sq > 0 and s > 0.
  StabilityParams(Rational beta, Rational alpha_sq, Rational s = Rational(1, 3));

  /// alpha given directly; alpha must be positive.
  static StabilityParams from_alpha(Rational beta, const Rational& alpha, Rational s = Rational(1, 3));

  const Rational& beta() const { return beta_; }
  const Rational& alpha_sq() const { return alpha_sq_; }
  const Rational& s() const { return s_; }

  friend bool operator==(const StabilityParams&, const StabilityParams&) = default;

 private:
  Rational beta_, alpha_sq_, s_;
};

/// Exact value of a central charge, re + i im.
struct ChargeValue {
  Rational re, im;
  friend bool operator==(const ChargeValue&, const ChargeValue&) = default;
  bool is_zero() const { return re == 0 && im == 0; }
};

enum class SlopeOrder { Less, Equal, Greater };

/// Raised by slope_compare when a charge vanishes.
class BothZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// mu_beta = (ch1 - beta ch0) / ch0, +inf for ch0 = 0.
Slope mu_beta(const ChernCharacter& v, const Rational& beta);

/// Z_{alpha,beta} = -(ch2 - beta ch1 + (beta^2 - alpha^2)/2 ch0) + i (ch1 - beta ch0).
ChargeValue z_tilt(const ChernCharacter& v, const StabilityParams& p);

/// nu_{alpha,beta} = -Re Z / Im Z, +inf when Im Z = 0.
Slope nu(const ChernCharacter& v, const StabilityParams& p);

/// The slope -re/im of a charge, +inf when im = 0.
Slope slope_of(const ChargeValue& z);

/// Orders charges by slope -re/im with +inf maximal, without dividing.
/// Throws BothZero if either charge is (0, 0).
SlopeOrder slope_compare(const ChargeValue& z1, const ChargeValue& z2);

/// Delta = ch1^2 - 2 ch0 ch2.
Rational bogomolov_delta(const ChernCharacter& v);

/// alpha^2/6 (ch1 - beta ch0) - (ch3 - beta ch2 + beta^2/2 ch1 - beta^3/6 ch0).
/// Nonnegative for nu-semistable objects with nu = 0.
Rational gbg_residual(const ChernCharacter& v, const StabilityParams& p);

/// Im(z1 * conj(z2)) = z1.im z2.re - z1.re z2.im; vanishes iff z1, z2 are R-parallel.
Rational cross(const ChargeValue& z1, const ChargeValue& z2);

/// True when the linear map sending each source basis charge to the matching
/// target charge exists and has positive determinant. Both lists must hold two
/// charges whose source determinant is nonzero.
bool related_by_gl2_plus(const std::vector<ChargeValue>& source, const std::vector<ChargeValue>& target);

}  // namespace stabwalls
