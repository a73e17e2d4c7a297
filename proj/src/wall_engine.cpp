#include "stabwalls/wall_engine.hpp"

#include <algorithm>
#include <tuple>

namespace stabwalls {

namespace {

bool proportional(const ChernCharacter& v, const ChernCharacter& w) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (v[i] * w[j] - v[j] * w[i] != 0) return false;
    }
  }
  return true;
}

PathPoint lerp(const PathPoint& a, const PathPoint& b, const Rational& t) {
  return {a.beta + (b.beta - a.beta) * t, a.alpha_sq + (b.alpha_sq - a.alpha_sq) * t, a.s + (b.s - a.s) * t};
}

void check_point(const PathPoint& p, std::size_t seg) {
  if (sgn(p.alpha_sq) <= 0 || sgn(p.s) <= 0) {
    throw InvalidPath("segment " + std::to_string(seg) + ": alpha^2 and s must be positive at both endpoints");
  }
}

// Exponent K with 2^-K <= tol < 2^-(K-1).
int dyadic_exponent(const Rational& tol) {
  if (sgn(tol) <= 0) throw std::invalid_argument("tolerance must be positive");
  int k = 0;
  Rational width(1);
  while (width > tol) {
    width /= 2;
    ++k;
    if (k > 64) throw std::invalid_argument("tolerance below 2^-64");
  }
  return k;
}

}  // namespace

bool WallCircle::contains(const Rational& beta, const Rational& alpha_sq) const {
  switch (kind) {
    case Kind::semicircle: {
      Rational db = beta - center;
      return db * db + alpha_sq == radius_sq;
    }
    case Kind::vertical: return beta == beta0;
    case Kind::degenerate_equal: return true;
    case Kind::empty: return false;
  }
  return false;
}

std::string kind_name(WallCircle::Kind kind) {
  switch (kind) {
    case WallCircle::Kind::semicircle: return "semicircle";
    case WallCircle::Kind::vertical: return "vertical";
    case WallCircle::Kind::degenerate_equal: return "degenerate_equal";
    case WallCircle::Kind::empty: return "empty";
  }
  return "empty";
}

std::string kind_name(ChargeKind kind) { return kind == ChargeKind::tilt ? "tilt" : "lambda"; }

ChargeKind charge_kind_from_name(const std::string& name) {
  if (name == "tilt") return ChargeKind::tilt;
  if (name == "lambda") return ChargeKind::lambda;
  throw std::invalid_argument("unknown charge kind '" + name + "' (expected tilt or lambda)");
}

WallCircle tilt_wall(const ChernCharacter& v, const ChernCharacter& w) {
  const Rational &r = v.ch0, &c = v.ch1, &d = v.ch2;
  const Rational &r2 = w.ch0, &c2 = w.ch1, &d2 = w.ch2;
  const Rational k = r * c2 - r2 * c;
  const Rational e = r * d2 - r2 * d;
  const Rational f = c * d2 - c2 * d;
  if (k != 0) {
    Rational center = e / k;
    Rational radius_sq = center * center - 2 * f / k;
    if (sgn(radius_sq) <= 0) return WallCircle::none();
    return WallCircle::semicircle(std::move(center), std::move(radius_sq));
  }
  if (e != 0) return WallCircle::vertical(f / e);
  if (f == 0) return WallCircle::degenerate();
  return WallCircle::none();
}

Rational tilt_wall_residual(const ChernCharacter& v, const ChernCharacter& w, const StabilityParams& p) {
  return cross(z_tilt(w, p), z_tilt(v, p));
}

Rational lambda_wall_residual(const ChernCharacter& v, const ChernCharacter& w, const StabilityParams& p) {
  return cross(z_lambda(w, p), z_lambda(v, p));
}

Rational wall_residual(ChargeKind kind, const ChernCharacter& v, const ChernCharacter& w, const StabilityParams& p) {
  return kind == ChargeKind::tilt ? tilt_wall_residual(v, w, p) : lambda_wall_residual(v, w, p);
}

StabilityParams PathSegment::at(const Rational& t) const {
  PathPoint p = lerp(from, to, t);
  return StabilityParams(std::move(p.beta), std::move(p.alpha_sq), std::move(p.s));
}

PathSpec::PathSpec(std::vector<PathSegment> segments, bool reversed)
    : raw_(std::move(segments)), reversed_(reversed) {
  if (raw_.empty()) throw InvalidPath("path has no segments");
  for (std::size_t i = 0; i < raw_.size(); ++i) {
    // alpha^2 and s are affine in t, so positivity at both ends covers the segment.
    check_point(raw_[i].from, i);
    check_point(raw_[i].to, i);
  }
  oriented_ = raw_;
  if (reversed_) {
    std::reverse(oriented_.begin(), oriented_.end());
    for (auto& seg : oriented_) std::swap(seg.from, seg.to);
  }
}

DegenerateCandidate::DegenerateCandidate(std::size_t index)
    : std::invalid_argument("candidate " + std::to_string(index) + " is proportional to v"), index_(index) {}

ScanResult scan_path(const ChernCharacter& v, const PathSpec& path, const std::vector<ChernCharacter>& candidates,
                     ChargeKind kind, const Rational& tol) {
  if (candidates.empty()) throw EmptyCandidates();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (proportional(v, candidates[i])) throw DegenerateCandidate(i);
  }
  const int k_fine = dyadic_exponent(tol);
  const int k_grid = std::min(k_fine, 12);
  const long n = 1L << k_grid;
  Rational fine_width(1);
  fine_width /= Rational(Integer(1) << k_fine);

  ScanResult out;
  const auto& segs = path.segments();
  for (std::size_t si = 0; si < segs.size(); ++si) {
    const PathSegment& seg = segs[si];
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      const ChernCharacter& w = candidates[ci];
      auto sign_at = [&](const Rational& t) { return sgn(wall_residual(kind, v, w, seg.at(t))); };

      std::vector<int> signs(n + 1);
      for (long i = 0; i <= n; ++i) signs[i] = sign_at(Rational(i, n));
      if (std::all_of(signs.begin(), signs.end(), [](int s) { return s == 0; })) {
        out.degenerate.push_back({si, ci});
        continue;
      }

      long prev = -1;
      for (long i = 0; i <= n; ++i) {
        if (signs[i] == 0) continue;
        if (prev >= 0 && signs[i] != signs[prev]) {
          Crossing c{si, ci, {}, {}, w, signs[prev], signs[i]};
          if (i == prev + 1) {
            Rational lo(prev, n), hi(i, n);
            lo.canonicalize();
            hi.canonicalize();
            while (hi - lo > fine_width) {
              Rational mid = (lo + hi) / 2;
              int sm = sign_at(mid);
              if (sm == 0) {
                lo = hi = mid;
                break;
              }
              (sm == c.sign_before ? lo : hi) = mid;
            }
            c.t0 = lo;
            c.t1 = hi;
          } else {
            // Exact roots at the intermediate samples.
            c.t0 = Rational(prev + 1, n);
            c.t1 = Rational(i - 1, n);
            c.t0.canonicalize();
            c.t1.canonicalize();
          }
          out.crossings.push_back(std::move(c));
        }
        prev = i;
      }
    }
  }
  std::stable_sort(out.crossings.begin(), out.crossings.end(), [](const Crossing& a, const Crossing& b) {
    if (a.segment != b.segment) return a.segment < b.segment;
    if (a.t0 != b.t0) return a.t0 < b.t0;
    return a.candidate < b.candidate;
  });
  return out;
}

std::vector<ChernCharacter> enumerate_destabilizers(const ChernCharacter& v, const StabilityParams& params,
                                                    long rank_bound) {
  if (rank_bound < 0) throw std::invalid_argument("rank bound must be nonnegative");
  const ChargeValue zv = z_tilt(v, params);
  if (sgn(zv.im) <= 0) throw NotPositiveIm("Im Z(v) = " + to_string(zv.im) + " is not positive");
  const Rational& b = params.beta();
  const Rational half_a2 = (b * b - params.alpha_sq()) / 2;

  std::vector<ChernCharacter> out;
  for (long r = -rank_bound; r <= rank_bound; ++r) {
    // Im Z(w) = c - b r must lie strictly inside (0, Im Z(v)).
    const Rational lo = b * r, hi = b * r + zv.im;
    Integer c_min = Integer(lo.get_num() / lo.get_den()) - 1;
    for (Integer c = c_min; Rational(c) < hi; ++c) {
      const Rational im_w = Rational(c) - lo;
      if (sgn(im_w) <= 0) continue;
      // Re Z(w) = Re Z(v) Im Z(w) / Im Z(v) fixes d.
      const Rational re_w = zv.re * im_w / zv.im;
      const Rational d = b * Rational(c) - half_a2 * r - re_w;
      const Rational twice_d = 2 * d;
      if (!is_integer(twice_d)) continue;
      if ((twice_d.get_num() - c) % 2 != 0) continue;
      ChernCharacter w(Rational(r), Rational(c), d, Rational(0));
      if (sgn(bogomolov_delta(w)) < 0) continue;
      ChernCharacter u(v.ch0 - w.ch0, v.ch1 - w.ch1, v.ch2 - w.ch2, Rational(0));
      if (sgn(bogomolov_delta(u)) < 0) continue;
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end(), [](const ChernCharacter& a, const ChernCharacter& b) {
    return std::tie(a.ch0, a.ch1, a.ch2) < std::tie(b.ch0, b.ch1, b.ch2);
  });
  return out;
}

std::string label_class(const ChernCharacter& w) {
  std::vector<ObjectKind> catalog;
  catalog.push_back(ObjectKind::ideal_twisted_cubic());
  catalog.push_back(ObjectKind::point_sheaf());
  for (long n = -6; n <= 6; ++n) {
    catalog.push_back(ObjectKind::line_bundle(n));
    catalog.push_back(ObjectKind::plane_sheaf(n));
    catalog.push_back(ObjectKind::ideal_point(n));
    catalog.push_back(ObjectKind::ideal_point_in_plane(n));
    catalog.push_back(ObjectKind::line_sheaf(n));
  }
  for (long mult = 1; mult <= 4; ++mult) {
    for (const auto& kind : catalog) {
      const ChernCharacter base = of_standard(kind);
      const std::string prefix = mult == 1 ? "" : std::to_string(mult) + "·";
      if (scale(base, mult) == w) return prefix + describe(kind);
      if (scale(base, -mult) == w) return prefix + describe(kind) + "[1]";
    }
  }
  return "";
}

PathSpec default_path() {
  const Rational s(1, 3);
  const PathPoint a{Rational(-5, 2), Rational(1, 5), s}, b{Rational(-5, 2), Rational(2), s};
  const PathPoint c{Rational(-4), Rational(2), s}, d{Rational(-4), Rational(16), s};
  return PathSpec({{a, b}, {b, c}, {c, d}});
}

std::vector<ChernCharacter> default_candidates() {
  return {scale(of_line_bundle(-2), 3), of_standard(ObjectKind::ideal_point(-1)), of_line_bundle(-1)};
}

ChamberReport chamber_report(const ChernCharacter& v, const PathSpec& path,
                             const std::vector<ChernCharacter>& candidates, ChargeKind kind, const Rational& tol) {
  ScanResult scan = scan_path(v, path, candidates, kind, tol);
  ChamberReport rep;
  rep.degenerate = std::move(scan.degenerate);
  for (auto& c : scan.crossings) {
    WallReport wall;
    wall.v_a = c.w;
    wall.v_b = v - c.w;
    wall.label_a = label_class(wall.v_a);
    wall.label_b = label_class(wall.v_b);
    wall.complement_in_candidates =
        std::find(candidates.begin(), candidates.end(), wall.v_b) != candidates.end();
    wall.crossing = std::move(c);
    rep.walls.push_back(std::move(wall));
  }
  for (std::size_t i = 0; i <= rep.walls.size(); ++i) rep.chambers.push_back("chamber " + std::to_string(i + 1));
  return rep;
}

}  // namespace stabwalls
