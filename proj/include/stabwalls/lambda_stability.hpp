#pragma once

#include "stabwalls/tilt_stability.hpp"

namespace stabwalls {

/// Second-tilt charge Z_{alpha,beta,s}:
///   re = -(ch3 - beta ch2 - ((s + 1/6) alpha^2 - beta^2/2) ch1 - (beta^3/6 - (s + 1/6) alpha^2 beta) ch0)
///   im = ch2 - beta ch1 + (beta^2/2 - alpha^2/2) ch0
ChargeValue z_lambda(const ChernCharacter& v, const StabilityParams& p);

/// lambda_{alpha,beta,s} = -Re / Im, +inf when Im = 0.
Slope lambda_slope(const ChernCharacter& v, const StabilityParams& p);

}  // namespace stabwalls
