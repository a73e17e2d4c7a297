#include "stabwalls/lambda_stability.hpp"

namespace stabwalls {

ChargeValue z_lambda(const ChernCharacter& v, const StabilityParams& p) {
  const Rational& b = p.beta();
  const Rational k = (p.s() + Rational(1, 6)) * p.alpha_sq();
  Rational re = -(v.ch3 - b * v.ch2 - (k - b * b / 2) * v.ch1 - (b * b * b / 6 - k * b) * v.ch0);
  Rational im = v.ch2 - b * v.ch1 + (b * b - p.alpha_sq()) / 2 * v.ch0;
  return {std::move(re), std::move(im)};
}

Slope lambda_slope(const ChernCharacter& v, const StabilityParams& p) { return slope_of(z_lambda(v, p)); }

}  // namespace stabwalls
