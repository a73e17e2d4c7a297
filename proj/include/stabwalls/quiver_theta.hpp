#pragma once

#include "stabwalls/linalg.hpp"
#include "stabwalls/polynomial.hpp"

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabwalls {

/// Two vertices and `arrow_count` arrows from the first to the second.
struct KroneckerQuiver {
  long arrow_count = 4;
};

/// (m, n) = (dim at source, dim at target).
struct DimVector {
  long m = 0, n = 0;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;
};

/// theta(m, n) = -3m + 2n.
long theta(const DimVector& d);

/// <d, e> = m m' + n n' - k m n'.
long euler_form(const KroneckerQuiver& q, const DimVector& d, const DimVector& e);

/// 1 - <d, d>.
long expected_dim(const KroneckerQuiver& q, const DimVector& d);

/// Proper nonzero (m', n') <= d with theta(m', n') <= 0, sorted.
std::vector<DimVector> destabilizing_subdims(const DimVector& d);

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Representation of the 4-arrow Kronecker quiver with dimension vector (2, 3):
/// four 3x2 matrices V -> W.
class QuiverRep {
 public:
  explicit QuiverRep(std::vector<Matrix> arrows);
  const std::vector<Matrix>& arrows() const { return arrows_; }

  /// h f g^{-1} for invertible g (2x2) and h (3x3).
  QuiverRep base_change(const Matrix& g, const Matrix& h) const;

 private:
  std::vector<Matrix> arrows_;
};

/// Evidence for a destabilizing subrepresentation.
struct StabilityWitness {
  enum class Kind {
    image_basis,    // subdim (2, n'): basis of the total image f1 V + ... + f4 V
    source_vector,  // subdim (1, n'): explicit rational vector v in V
    source_root,    // subdim (1, 1): v = (1, t) with t a root of `root_poly`
  };
  DimVector subdim;
  Kind kind = Kind::source_vector;
  std::vector<std::vector<Rational>> image_basis;
  std::vector<Rational> source_vector;
  Polynomial root_poly;
};

struct StabilityVerdict {
  bool stable = true;
  std::optional<StabilityWitness> witness;
};

/// Exact theta-stability over an algebraically closed field of characteristic 0.
/// Checked in order: a common kernel vector (1, 0); a total image of dimension
/// below 3 (2, n'); a vector whose four images span a line (1, 1).
StabilityVerdict is_stable_rep(const QuiverRep& rep);

}  // namespace stabwalls
