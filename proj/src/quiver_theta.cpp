#include "stabwalls/quiver_theta.hpp"

namespace stabwalls {

long theta(const DimVector& d) { return -3 * d.m + 2 * d.n; }

long euler_form(const KroneckerQuiver& q, const DimVector& d, const DimVector& e) {
  return d.m * e.m + d.n * e.n - q.arrow_count * d.m * e.n;
}

long expected_dim(const KroneckerQuiver& q, const DimVector& d) { return 1 - euler_form(q, d, d); }

std::vector<DimVector> destabilizing_subdims(const DimVector& d) {
  std::vector<DimVector> out;
  for (long m = 0; m <= d.m; ++m) {
    for (long n = 0; n <= d.n; ++n) {
      DimVector e{m, n};
      if ((m == 0 && n == 0) || e == d) continue;
      if (theta(e) <= 0) out.push_back(e);
    }
  }
  return out;
}

QuiverRep::QuiverRep(std::vector<Matrix> arrows) : arrows_(std::move(arrows)) {
  if (arrows_.size() != 4) throw ShapeError("expected 4 arrows, got " + std::to_string(arrows_.size()));
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].rows() != 3 || arrows_[i].cols() != 2) {
      throw ShapeError("arrow " + std::to_string(i) + " must be 3x2");
    }
  }
}

QuiverRep QuiverRep::base_change(const Matrix& g, const Matrix& h) const {
  const Matrix g_inv = inverse(g);
  std::vector<Matrix> out;
  for (const auto& f : arrows_) out.push_back(h * f * g_inv);
  return QuiverRep(std::move(out));
}

namespace {

// 12x2 matrix whose kernel is the common kernel of the arrows.
Matrix stacked(const QuiverRep& rep) {
  Matrix m(12, 2);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 2; ++c) m(3 * a + r, c) = rep.arrows()[a](r, c);
    }
  }
  return m;
}

std::vector<Rational> kernel_vector_2(const Matrix& m) {
  // m has two columns and rank < 2.
  Echelon e = rref(m);
  if (e.pivots.empty()) return {Rational(1), Rational(0)};
  if (e.pivots[0] == 0) return {-e.reduced(0, 1), Rational(1)};
  return {Rational(1), Rational(0)};
}

// Column j of A(v) = [f1 v | ... | f4 v] has entries linear in t for v = (1, t).
std::vector<std::vector<Polynomial>> image_matrix(const QuiverRep& rep) {
  std::vector<std::vector<Polynomial>> a(3, std::vector<Polynomial>(4));
  for (std::size_t j = 0; j < 4; ++j) {
    const Matrix& f = rep.arrows()[j];
    for (std::size_t r = 0; r < 3; ++r) a[r][j] = Polynomial::linear(f(r, 0), f(r, 1));
  }
  return a;
}

// rank of [f1 v | ... | f4 v] at a concrete v.
std::size_t image_rank(const QuiverRep& rep, const std::vector<Rational>& v) {
  Matrix a(3, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    const Matrix& f = rep.arrows()[j];
    for (std::size_t r = 0; r < 3; ++r) a(r, j) = f(r, 0) * v[0] + f(r, 1) * v[1];
  }
  return rank(a);
}

}  // namespace

StabilityVerdict is_stable_rep(const QuiverRep& rep) {
  StabilityVerdict verdict;

  const Matrix st = stacked(rep);
  if (rank(st) < 2) {
    StabilityWitness w;
    w.subdim = {1, 0};
    w.kind = StabilityWitness::Kind::source_vector;
    w.source_vector = kernel_vector_2(st);
    verdict.stable = false;
    verdict.witness = std::move(w);
    return verdict;
  }

  Matrix total = rep.arrows()[0];
  for (std::size_t j = 1; j < 4; ++j) total = total.hcat(rep.arrows()[j]);
  const std::size_t img = rank(total);
  if (img < 3) {
    StabilityWitness w;
    w.subdim = {2, static_cast<long>(img)};
    w.kind = StabilityWitness::Kind::image_basis;
    w.image_basis = column_space_basis(total);
    verdict.stable = false;
    verdict.witness = std::move(w);
    return verdict;
  }

  // No common kernel, so every image span is nonzero; look for one of dimension 1.
  if (image_rank(rep, {Rational(0), Rational(1)}) <= 1) {
    StabilityWitness w;
    w.subdim = {1, 1};
    w.source_vector = {Rational(0), Rational(1)};
    verdict.stable = false;
    verdict.witness = std::move(w);
    return verdict;
  }
  const auto a = image_matrix(rep);
  Polynomial g;
  for (std::size_t r1 = 0; r1 < 3; ++r1) {
    for (std::size_t r2 = r1 + 1; r2 < 3; ++r2) {
      for (std::size_t c1 = 0; c1 < 4; ++c1) {
        for (std::size_t c2 = c1 + 1; c2 < 4; ++c2) {
          g = gcd(g, a[r1][c1] * a[r2][c2] - a[r1][c2] * a[r2][c1]);
        }
      }
    }
  }
  if (g.degree() == 0) return verdict;
  if (g.degree() >= 2) {
    // a repeated rational root still gives an explicit vector
    std::vector<Rational> dg;
    for (std::size_t i = 1; i < g.coeffs().size(); ++i) dg.push_back(g.coeffs()[i] * static_cast<long>(i));
    g = divmod(g, gcd(g, Polynomial(dg))).quotient.monic();
  }

  StabilityWitness w;
  w.subdim = {1, 1};
  if (g.is_zero()) {
    w.source_vector = {Rational(1), Rational(0)};
  } else if (g.degree() == 1) {
    w.source_vector = {Rational(1), -g.coeff(0) / g.coeff(1)};
  } else {
    w.kind = StabilityWitness::Kind::source_root;
    w.root_poly = g;
  }
  verdict.stable = false;
  verdict.witness = std::move(w);
  return verdict;
}

}  // namespace stabwalls
