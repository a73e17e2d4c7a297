#include "stabwalls/tilt_stability.hpp"

namespace stabwalls {

StabilityParams::StabilityParams(Rational beta, Rational alpha_sq, Rational s)
    : beta_(std::move(beta)), alpha_sq_(std::move(alpha_sq)), s_(std::move(s)) {
  if (sgn(alpha_sq_) <= 0) throw InvalidParams("alpha^2 must be positive, got " + to_string(alpha_sq_));
  if (sgn(s_) <= 0) throw InvalidParams("s must be positive, got " + to_string(s_));
}

StabilityParams StabilityParams::from_alpha(Rational beta, const Rational& alpha, Rational s) {
  if (sgn(alpha) <= 0) throw InvalidParams("alpha must be positive, got " + to_string(alpha));
  return StabilityParams(std::move(beta), alpha * alpha, std::move(s));
}

Slope mu_beta(const ChernCharacter& v, const Rational& beta) {
  if (v.ch0 == 0) return Slope::infinite();
  return Slope((v.ch1 - beta * v.ch0) / v.ch0);
}

ChargeValue z_tilt(const ChernCharacter& v, const StabilityParams& p) {
  const Rational& b = p.beta();
  Rational re = -(v.ch2 - b * v.ch1 + (b * b - p.alpha_sq()) / 2 * v.ch0);
  Rational im = v.ch1 - b * v.ch0;
  return {std::move(re), std::move(im)};
}

Slope slope_of(const ChargeValue& z) {
  if (z.im == 0) return Slope::infinite();
  return Slope(-z.re / z.im);
}

Slope nu(const ChernCharacter& v, const StabilityParams& p) { return slope_of(z_tilt(v, p)); }

SlopeOrder slope_compare(const ChargeValue& z1, const ChargeValue& z2) {
  if (z1.is_zero() || z2.is_zero()) throw BothZero("slope_compare: charge is zero");
  const int s1 = sgn(z1.im), s2 = sgn(z2.im);
  if (s1 == 0 && s2 == 0) return SlopeOrder::Equal;
  if (s1 == 0) return SlopeOrder::Greater;
  if (s2 == 0) return SlopeOrder::Less;
  // nu1 - nu2 = (re2 im1 - re1 im2) / (im1 im2)
  const int c = sgn(z2.re * z1.im - z1.re * z2.im) * s1 * s2;
  return c < 0 ? SlopeOrder::Less : c > 0 ? SlopeOrder::Greater : SlopeOrder::Equal;
}

Rational bogomolov_delta(const ChernCharacter& v) { return v.ch1 * v.ch1 - 2 * v.ch0 * v.ch2; }

Rational gbg_residual(const ChernCharacter& v, const StabilityParams& p) {
  const Rational& b = p.beta();
  const Rational lhs = v.ch3 - b * v.ch2 + b * b / 2 * v.ch1 - b * b * b / 6 * v.ch0;
  return p.alpha_sq() / 6 * (v.ch1 - b * v.ch0) - lhs;
}

Rational cross(const ChargeValue& z1, const ChargeValue& z2) { return z1.im * z2.re - z1.re * z2.im; }

bool related_by_gl2_plus(const std::vector<ChargeValue>& source, const std::vector<ChargeValue>& target) {
  if (source.size() != 2 || target.size() != 2) {
    throw std::invalid_argument("related_by_gl2_plus needs two basis charges on each side");
  }
  // Columns (re, im); T = target * source^{-1}, det T = det target / det source.
  const Rational det_src = source[0].re * source[1].im - source[1].re * source[0].im;
  if (det_src == 0) throw std::invalid_argument("related_by_gl2_plus: source charges are parallel");
  const Rational det_tgt = target[0].re * target[1].im - target[1].re * target[0].im;
  return sgn(det_tgt) * sgn(det_src) > 0;
}

}  // namespace stabwalls
