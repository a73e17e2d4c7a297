#include "stabwalls/riemann_roch.hpp"

namespace stabwalls {

const ToddClass& todd_p3() {
  static const ToddClass td = [] {
    // Euler sequence: c(T_P3) = (1 + H)^4.
    const Rational c1 = 4, c2 = 6;
    return ToddClass{1, c1 / 2, (c1 * c1 + c2) / 12, c1 * c2 / 24};
  }();
  return td;
}

Rational euler_chi(const ChernCharacter& v) {
  const ToddClass& td = todd_p3();
  return v.ch3 * td.td0 + v.ch2 * td.td1 + v.ch1 * td.td2 + v.ch0 * td.td3;
}

Rational euler_pairing(const ChernCharacter& v, const ChernCharacter& w) {
  return euler_chi(multiply(dual(v), w));
}

Polynomial hilbert_polynomial(const ChernCharacter& v) {
  // v(m) = v . e^{mH}; collect chi(v(m)) by powers of m.
  const ToddClass& td = todd_p3();
  const Rational t[4] = {td.td3, td.td2, td.td1, td.td0};  // weight of ch_k in chi
  std::vector<Rational> coeffs(4);
  Rational fact[4] = {1, 1, 2, 6};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; i + j < 4; ++j) {
      // ch_i(v) * m^j H^j / j! lands in degree i + j
      coeffs[j] += v[i] / fact[j] * t[i + j];
    }
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace stabwalls
