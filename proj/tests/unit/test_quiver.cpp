#include <doctest.h>

#include <array>
#include <cstdint>

#include "stabwalls/linalg.hpp"
#include "stabwalls/quiver_theta.hpp"
#include "stabwalls/riemann_roch.hpp"
#include "test_support.hpp"

using namespace stabwalls;
using stabwalls::testing::rand_int;

namespace {

constexpr std::int64_t kPrime = 10007;

using IntArrow = std::array<std::array<long, 2>, 3>;
using IntRep = std::array<IntArrow, 4>;

QuiverRep to_rep(const IntRep& r) {
  std::vector<Matrix> arrows;
  for (const auto& f : r) {
    Matrix m(3, 2);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = f[i][j];
    arrows.push_back(m);
  }
  return QuiverRep(arrows);
}

std::int64_t mod(std::int64_t x) { return ((x % kPrime) + kPrime) % kPrime; }

std::int64_t inv_mod(std::int64_t a) {
  std::int64_t r = 1, e = kPrime - 2;
  a = mod(a);
  while (e) {
    if (e & 1) r = r * a % kPrime;
    a = a * a % kPrime;
    e >>= 1;
  }
  return r;
}

int rank_mod(std::vector<std::vector<std::int64_t>> m) {
  int rank = 0;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    std::int64_t inv = inv_mod(m[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      std::int64_t f = m[r][c] * inv % kPrime;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = mod(m[r][k] - f * m[rank][k]);
    }
    ++rank;
  }
  return rank;
}

// brute force over F_p: search every destabilizing subdimension directly
bool stable_mod_p(const IntRep& r) {
  std::vector<std::vector<std::int64_t>> total(3, std::vector<std::int64_t>(8));
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 2; ++j) total[i][2 * a + j] = mod(r[a][i][j]);
  if (rank_mod(total) <= 2) return false;
  auto images_rank = [&](std::int64_t x, std::int64_t y) {
    std::vector<std::vector<std::int64_t>> m(3, std::vector<std::int64_t>(4));
    for (int a = 0; a < 4; ++a)
      for (int i = 0; i < 3; ++i) m[i][a] = mod(r[a][i][0] * x + r[a][i][1] * y);
    return rank_mod(m);
  };
  if (images_rank(0, 1) <= 1) return false;
  for (std::int64_t t = 0; t < kPrime; ++t)
    if (images_rank(1, t) <= 1) return false;
  return true;
}

IntArrow outer(const std::array<long, 3>& col, const std::array<long, 2>& row) {
  IntArrow f{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) f[i][j] = col[i] * row[j];
  return f;
}

IntArrow plus(const IntArrow& a, const IntArrow& b) {
  IntArrow f{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) f[i][j] = a[i][j] + b[i][j];
  return f;
}

std::array<long, 3> rand3(std::mt19937_64& rng, long b = 4) {
  return {rand_int(rng, -b, b), rand_int(rng, -b, b), rand_int(rng, -b, b)};
}
std::array<long, 2> rand2(std::mt19937_64& rng, long b = 4) {
  return {rand_int(rng, -b, b), rand_int(rng, -b, b)};
}

IntRep random_rep(std::mt19937_64& rng, int family) {
  IntRep r{};
  std::array<long, 2> v = rand2(rng);
  if (v[0] == 0 && v[1] == 0) v = {1, 2};
  std::array<long, 2> perp = {-v[1], v[0]};
  std::array<long, 3> w = rand3(rng);
  for (int a = 0; a < 4; ++a) {
    switch (family) {
      case 0:  // generic
        r[a] = plus(outer(rand3(rng), {1, 0}), outer(rand3(rng), {0, 1}));
        break;
      case 1:  // common kernel vector
        r[a] = outer(rand3(rng), perp);
        break;
      case 2:  // all images of v on one line
        r[a] = plus(outer(w, rand2(rng)), outer(rand3(rng), perp));
        break;
      default:  // total image in a fixed plane, filled in below
        break;
    }
  }
  if (family == 3) {
    // rebuild with one shared pair of column vectors
    std::array<long, 3> p = rand3(rng), q = rand3(rng);
    for (int a = 0; a < 4; ++a) r[a] = plus(outer(p, rand2(rng)), outer(q, rand2(rng)));
  }
  return r;
}

// confirm that the witness exhibits a subrepresentation of the stated dimension
bool witness_valid(const QuiverRep& rep, const StabilityWitness& w) {
  const auto& f = rep.arrows();
  if (w.kind == StabilityWitness::Kind::image_basis) {
    Matrix basis(3, w.image_basis.size());
    for (std::size_t c = 0; c < w.image_basis.size(); ++c)
      for (int i = 0; i < 3; ++i) basis(i, c) = w.image_basis[c][i];
    Matrix all = f[0].hcat(f[1]).hcat(f[2]).hcat(f[3]);
    return rank(basis) == static_cast<std::size_t>(w.subdim.n) && rank(basis.hcat(all)) == rank(basis);
  }
  if (w.kind == StabilityWitness::Kind::source_vector) {
    Matrix v(2, 1, {w.source_vector[0], w.source_vector[1]});
    if (w.source_vector[0] == 0 && w.source_vector[1] == 0) return false;
    Matrix img = f[0] * v;
    for (int a = 1; a < 4; ++a) img = img.hcat(f[a] * v);
    return rank(img) <= static_cast<std::size_t>(w.subdim.n);
  }
  return w.root_poly.degree() >= 2;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = testing::rand_rational(rng, 6, 4);
    if (determinant(m) != 0) return m;
  }
}

}  // namespace

TEST_SUITE("quiver_theta") {

TEST_CASE("numerics of the (2,3) moduli") {
  KroneckerQuiver k4;
  CHECK(theta({2, 3}) == 0);
  CHECK(euler_form(k4, {2, 3}, {2, 3}) == -11);
  CHECK(expected_dim(k4, {2, 3}) == 12);
  CHECK(euler_pairing(testing::ideal_cubic(), testing::ideal_cubic()) == -11);
  auto subs = destabilizing_subdims({2, 3});
  CHECK(subs == std::vector<DimVector>{{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}});
  for (auto d : subs) CHECK(theta(d) != 0);
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(QuiverRep({Matrix(3, 2), Matrix(3, 2), Matrix(3, 2)}), ShapeError);
  CHECK_THROWS_AS(QuiverRep({Matrix(3, 2), Matrix(3, 2), Matrix(2, 3), Matrix(3, 2)}), ShapeError);
}

TEST_CASE("named representations") {
  QuiverRep hb = rep_from_json(testing::load_json("data/examples/rep_hilbert_burch.json"));
  CHECK(is_stable_rep(hb).stable);

  StabilityVerdict rank2 = is_stable_rep(rep_from_json(testing::load_json("data/examples/rep_rank2_repeated.json")));
  REQUIRE_FALSE(rank2.stable);
  CHECK(rank2.witness->subdim == DimVector{2, 2});

  StabilityVerdict zero = is_stable_rep(rep_from_json(testing::load_json("data/examples/rep_zero.json")));
  REQUIRE_FALSE(zero.stable);
  CHECK(zero.witness->subdim == DimVector{1, 0});
  CHECK(zero.witness->kind == StabilityWitness::Kind::source_vector);
}

TEST_CASE("conjugate common lines force a small total image") {
  // images (1, t, 0) and (t, 2, 0) are parallel exactly when t^2 = 2; the two conjugate
  // points already span V, so the total image is the plane they sit in
  IntRep s{};
  s[0] = {{{1, 0}, {0, 1}, {0, 0}}};
  s[1] = {{{0, 1}, {2, 0}, {0, 0}}};
  StabilityVerdict b = is_stable_rep(to_rep(s));
  REQUIRE_FALSE(b.stable);
  CHECK(b.witness->subdim == DimVector{2, 2});
  CHECK(b.witness->kind == StabilityWitness::Kind::image_basis);
}

TEST_CASE("agreement with the finite field oracle") {
  std::mt19937_64 rng(601);
  int checked = 0, excluded = 0, unstable = 0;
  for (int i = 0; i < 100; ++i) {
    IntRep r = random_rep(rng, i % 4);
    QuiverRep rep = to_rep(r);
    StabilityVerdict v = is_stable_rep(rep);
    bool oracle = stable_mod_p(r);
    if (!v.stable) CHECK(witness_valid(rep, *v.witness));
    bool root_only = !v.stable && v.witness->kind == StabilityWitness::Kind::source_root;
    if ((v.stable && !oracle) || root_only) {
      ++excluded;  // bad reduction or a point not defined over F_p
      continue;
    }
    ++checked;
    unstable += !v.stable;
    CHECK(v.stable == oracle);
  }
  CHECK(excluded <= 3);
  CHECK(unstable >= 50);
  CHECK(checked - unstable >= 20);
}

TEST_CASE("verdict is invariant under base change") {
  std::mt19937_64 rng(602);
  for (int i = 0; i < 20; ++i) {
    QuiverRep rep = to_rep(random_rep(rng, i % 4));
    Matrix g = random_invertible(rng, 2), h = random_invertible(rng, 3);
    QuiverRep moved = rep.base_change(g, h);
    StabilityVerdict a = is_stable_rep(rep), b = is_stable_rep(moved);
    CHECK(a.stable == b.stable);
    if (!a.stable && !b.stable) {
      CHECK(a.witness->subdim == b.witness->subdim);
      CHECK(witness_valid(moved, *b.witness));
    }
  }
}

}  // TEST_SUITE
