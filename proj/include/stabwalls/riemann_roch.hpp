#pragma once

#include "stabwalls/chern_lattice.hpp"
#include "stabwalls/polynomial.hpp"

namespace stabwalls {

/// Todd class of P^3 in units of H^i.
struct ToddClass {
  Rational td0, td1, td2, td3;
  friend bool operator==(const ToddClass&, const ToddClass&) = default;
};

/// Computed from the Chern classes of the tangent bundle (c1 = 4H, c2 = 6H^2,
/// c3 = 4H^3) via td = 1 + c1/2 + (c1^2 + c2)/12 + c1 c2/24.
const ToddClass& todd_p3();

/// chi(v) = integral of v . td(P^3).
Rational euler_chi(const ChernCharacter& v);

/// chi(v, w) = sum (-1)^i dim Ext^i(E, F) for ch(E) = v, ch(F) = w.
Rational euler_pairing(const ChernCharacter& v, const ChernCharacter& w);

/// P(m) = chi(v(m)); a cubic (or lower) polynomial in m.
Polynomial hilbert_polynomial(const ChernCharacter& v);

}  // namespace stabwalls
