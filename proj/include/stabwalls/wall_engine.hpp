#pragma once

#include "stabwalls/lambda_stability.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabwalls {

/// A numerical tilt wall for a pair of classes in the (beta, alpha) upper half-plane.
struct WallCircle {
  enum class Kind { semicircle, vertical, degenerate_equal, empty };

  Kind kind = Kind::empty;
  Rational center;     // semicircle only
  Rational radius_sq;  // semicircle only, > 0
  Rational beta0;      // vertical only

  static WallCircle semicircle(Rational c, Rational r2) { return {Kind::semicircle, std::move(c), std::move(r2), {}}; }
  static WallCircle vertical(Rational b) { return {Kind::vertical, {}, {}, std::move(b)}; }
  static WallCircle degenerate() { return {Kind::degenerate_equal, {}, {}, {}}; }
  static WallCircle none() { return {Kind::empty, {}, {}, {}}; }

  /// Exact membership of (beta, alpha^2), alpha^2 > 0.
  bool contains(const Rational& beta, const Rational& alpha_sq) const;

  friend bool operator==(const WallCircle&, const WallCircle&) = default;
};

std::string kind_name(WallCircle::Kind kind);

/// Solves (alpha^2 + beta^2)/2 (r c' - r' c) - beta (r d' - r' d) + (c d' - c' d) = 0
/// with (r, c, d) = (ch0, ch1, ch2) of v and w.
WallCircle tilt_wall(const ChernCharacter& v, const ChernCharacter& w);

/// Im(Z(w) conj Z(v)) for the tilt charge. Zero iff nu(w) = nu(v) or a charge vanishes.
Rational tilt_wall_residual(const ChernCharacter& v, const ChernCharacter& w, const StabilityParams& p);

/// Im(Z(w) conj Z(v)) for the second-tilt charge.
Rational lambda_wall_residual(const ChernCharacter& v, const ChernCharacter& w, const StabilityParams& p);

enum class ChargeKind { tilt, lambda };

std::string kind_name(ChargeKind kind);
ChargeKind charge_kind_from_name(const std::string& name);

/// One endpoint of a path segment. Not validated on construction; PathSpec checks it.
struct PathPoint {
  Rational beta, alpha_sq, s;
  friend bool operator==(const PathPoint&, const PathPoint&) = default;
};

struct PathSegment {
  PathPoint from, to;
  /// Linear interpolation from + t (to - from).
  StabilityParams at(const Rational& t) const;
};

class InvalidPath : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Piecewise-linear path in (beta, alpha^2, s). When `reversed` is set the path
/// is traversed from the last endpoint back to the first.
class PathSpec {
 public:
  explicit PathSpec(std::vector<PathSegment> segments, bool reversed = false);

  /// Segments in traversal order, each oriented along the traversal.
  const std::vector<PathSegment>& segments() const { return oriented_; }
  bool reversed() const { return reversed_; }
  const std::vector<PathSegment>& raw_segments() const { return raw_; }

 private:
  std::vector<PathSegment> raw_;
  std::vector<PathSegment> oriented_;
  bool reversed_;
};

/// A sign change of the residual of candidate `candidate` against v on segment
/// `segment`, bracketed in the segment parameter. t0 == t1 marks an exact root.
struct Crossing {
  std::size_t segment = 0;
  std::size_t candidate = 0;
  Rational t0, t1;
  ChernCharacter w;
  int sign_before = 0;
  int sign_after = 0;
};

/// A (segment, candidate) pair whose residual vanishes at every sample.
struct DegenerateRun {
  std::size_t segment = 0;
  std::size_t candidate = 0;
};

struct ScanResult {
  std::vector<Crossing> crossings;
  std::vector<DegenerateRun> degenerate;
};

class DegenerateCandidate : public std::invalid_argument {
 public:
  explicit DegenerateCandidate(std::size_t index);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class EmptyCandidates : public std::invalid_argument {
 public:
  EmptyCandidates() : std::invalid_argument("candidate list is empty") {}
};

class NotPositiveIm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Residual of w against v under the chosen charge.
Rational wall_residual(ChargeKind kind, const ChernCharacter& v, const ChernCharacter& w, const StabilityParams& p);

/// Finds every sign change of the residual of each candidate against v along
/// the path. The residual is sampled on the dyadic grid k / 2^K of each segment,
/// where 2^-K is the largest power of two not above tol (K capped at 12), and
/// each sign change is refined by exact bisection until its width is <= tol.
/// Output is sorted by (segment, t0, candidate).
ScanResult scan_path(const ChernCharacter& v, const PathSpec& path, const std::vector<ChernCharacter>& candidates,
                     ChargeKind kind, const Rational& tol);

/// Truncated classes (r, c, d) with ch3 set to 0 that numerically destabilize v
/// at params: |r| <= rank_bound, 0 < Im Z(w) < Im Z(v), Z(w) parallel to Z(v),
/// c in Z, 2d in Z with 2d = c mod 2, Delta(w) >= 0 and Delta(v - w) >= 0.
/// Sorted lexicographically by (r, c, 2d).
std::vector<ChernCharacter> enumerate_destabilizers(const ChernCharacter& v, const StabilityParams& params,
                                                    long rank_bound);

/// Best-effort name for a class, e.g. "3·O(-2)" or "I_p(-1)"; empty if unknown.
std::string label_class(const ChernCharacter& w);

struct WallReport {
  Crossing crossing;
  ChernCharacter v_a;  // the candidate
  ChernCharacter v_b;  // v - v_a
  std::string label_a, label_b;
  bool complement_in_candidates = false;
};

struct ChamberReport {
  std::vector<WallReport> walls;
  std::vector<std::string> chambers;  // "chamber 1", ..., walls.size() + 1 entries
  std::vector<DegenerateRun> degenerate;
};

/// The shipped default path (s = 1/3 throughout):
///   (beta, alpha^2) = (-5/2, 1/5) -> (-5/2, 2) -> (-4, 2) -> (-4, 16).
/// It crosses the three walls of v = ch(I_C) in the order 3·O(-2), I_p(-1), O(-1).
PathSpec default_path();

/// 3·ch(O(-2)), ch(I_p(-1)), ch(O(-1)).
std::vector<ChernCharacter> default_candidates();

ChamberReport chamber_report(const ChernCharacter& v, const PathSpec& path,
                             const std::vector<ChernCharacter>& candidates, ChargeKind kind, const Rational& tol);

}  // namespace stabwalls
