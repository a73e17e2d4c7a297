// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stabwalls/exact_sequence_audit.hpp"
#include "stabwalls/json_io.hpp"
#include "stabwalls/quiver_theta.hpp"
#include "stabwalls/riemann_roch.hpp"
#include "stabwalls/tilt_stability.hpp"
#include "stabwalls/wall_engine.hpp"

using namespace stabwalls;

namespace {

std::string src(const std::string& rel) { return std::string(STABWALLS_SOURCE_DIR) + "/" + rel; }

struct Check {
  bool ok = true;
  std::string first_failure;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

Rational q(long a, long b = 1) { return make_rational(a, b); }

ChernCharacter ic() { return of_standard(ObjectKind::ideal_twisted_cubic()); }

void lattice(Check& c) {
  ChernCharacter v(1, 0, -3, 5);
  c.expect(add(scale(of_line_bundle(-2), 3), scale(shift(of_line_bundle(-3)), 2)) == v, "3·O(-2) + 2·O(-3)[1]");
  c.expect(add(of_standard(ObjectKind::ideal_point(-1)), of_standard(ObjectKind::plane_sheaf(-3))) == v,
           "I_p(-1) + O_V(-3)");
  c.expect(add(of_line_bundle(-1), of_standard(ObjectKind::ideal_point_in_plane(-3))) == v, "O(-1) + I_{q/V}(-3)");
  c.expect(ic() == v, "ch(I_C)");
}

void euler(Check& c) {
  Json tables = read_json_file(src("data/fixtures/ext_tables.json"))["tables"];
  int matched = 0;
  for (const auto& t : tables) {
    if (!t["expect"].get<bool>()) continue;
    ChernCharacter a = class_from_json(t["left"]), b = class_from_json(t["right"]);
    Rational chi = parse_rational(t["chi"].get<std::string>());
    c.expect(euler_pairing(a, b) == chi, t["cite"].get<std::string>());
    c.expect(chi_crosscheck(t["dims"].get<std::array<long, 4>>(), a, b), t["cite"].get<std::string>() + " dims");
    ++matched;
  }
  c.expect(matched == 8, "eight tables");
}

void dimension12(Check& c) {
  KroneckerQuiver k4;
  c.expect(euler_form(k4, {2, 3}, {2, 3}) == -11, "euler form");
  c.expect(euler_pairing(ic(), ic()) == -11, "chi(v,v)");
  c.expect(expected_dim(k4, {2, 3}) == 12, "expected dim");
}

void first_wall(Check& c) {
  c.expect(tilt_wall(ic(), scale(of_line_bundle(-2), 3)) == WallCircle::semicircle(q(-5, 2), q(1, 4)), "wall");
  for (Rational t : {q(1, 16), q(1, 4), q(1), q(5, 3), q(9)}) {
    ChargeValue z = z_tilt(of_line_bundle(-2), StabilityParams(q(-5, 2), t));
    c.expect(z.re == q(-1, 8) + t / 2 && z.im == q(1, 2), "Z(O(-2)) at " + to_string(t));
  }
}

void slope_flip(Check& c) {
  ChernCharacter a = of_line_bundle(-2), b = shift(of_line_bundle(-3));
  auto order = [&](Rational t) {
    StabilityParams p(q(-5, 2), t);
    return slope_compare(z_tilt(a, p), z_tilt(b, p));
  };
  c.expect(order(1) == SlopeOrder::Less, "Less at 1");
  c.expect(order(q(1, 16)) == SlopeOrder::Greater, "Greater at 1/16");
  Rational s(1, 3);
  PathSpec path(std::vector<PathSegment>{{{q(-5, 2), q(1, 16), s}, {q(-5, 2), q(1), s}}});
  ScanResult r = scan_path(b, path, {a}, ChargeKind::tilt, q(1, 1024));
  c.expect(r.crossings.size() == 1, "one crossing");
  if (r.crossings.size() != 1) return;
  const Crossing& x = r.crossings[0];
  Rational lo = path.segments()[0].at(x.t0).alpha_sq(), hi = path.segments()[0].at(x.t1).alpha_sq();
  c.expect(lo < q(1, 4) && q(1, 4) < hi, "bracket contains 1/4");
  c.expect(x.t1 - x.t0 <= q(1, 1024), "bracket width");
  c.expect(order(q(1, 4)) == SlopeOrder::Equal, "Equal at 1/4");
}

void destabilizers(Check& c) {
  StabilityParams p(q(-5, 2), q(1, 4));
  ChernCharacter v = ic();
  auto ws = enumerate_destabilizers(v, p, 3);
  auto has = [&](long r, long cc, Rational d) {
    return std::find(ws.begin(), ws.end(), ChernCharacter(r, cc, d, 0)) != ws.end();
  };
  c.expect(has(3, -6, 6), "(3,-6,6)");
  c.expect(has(-2, 6, -9), "(-2,6,-9)");
  // box oracle: every lattice triple, constraints checked from scratch
  std::vector<ChernCharacter> brute;
  ChargeValue zv = z_tilt(v, p);
  for (long r = -3; r <= 3; ++r)
    for (long cc = -30; cc <= 30; ++cc)
      for (long dd = -200; dd <= 200; ++dd) {
        if (((dd - cc) % 2 + 2) % 2) continue;
        ChernCharacter w(r, cc, q(dd, 2), 0);
        ChargeValue zw = z_tilt(w, p);
        if (zw.im <= 0 || zw.im >= zv.im || cross(zw, zv) != 0) continue;
        if (bogomolov_delta(w) < 0 || bogomolov_delta(v - w) < 0) continue;
        brute.push_back(w);
      }
  c.expect(brute == ws, "agrees with box oracle");
}

void chambers(Check& c) {
  ChamberReport rep = chamber_report(ic(), default_path(), default_candidates(), ChargeKind::lambda, q(1, 1024));
  c.expect(rep.walls.size() == 3, "three walls");
  c.expect(rep.chambers.size() == 4, "four chambers");
  if (rep.walls.size() != 3) return;
  c.expect(rep.walls[0].label_a == "3·O(-2)" && rep.walls[1].label_a == "I_p(-1)" && rep.walls[2].label_a == "O(-1)",
           "wall order");
  Json golden = read_json_file(src("tests/oracles/path_goldens.json"))["default_path_lambda"];
  for (std::size_t i = 0; i < 3; ++i) {
    const Crossing& x = rep.walls[i].crossing;
    c.expect(x.segment == golden[i]["segment"].get<std::size_t>() &&
                 to_string(x.t0) == golden[i]["t0"].get<std::string>() &&
                 to_string(x.t1) == golden[i]["t1"].get<std::string>(),
             "golden bracket " + std::to_string(i + 1));
  }
  PathSpec shipped = path_from_json(read_json_file(src("data/default_path.json")));
  ChamberReport again = chamber_report(ic(), shipped, default_candidates(), ChargeKind::lambda, q(1, 1024));
  c.expect(again.walls.size() == 3, "shipped path file");
}

Matrix mat(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return Matrix(3, 2, v);
}

// brute force over F_p of every destabilizing subdimension
bool stable_mod_p(const std::vector<std::array<long, 6>>& f) {
  constexpr long p = 10007;
  auto md = [](long x) { return ((x % p) + p) % p; };
  auto inv = [&](long a) {
    long r = 1, e = p - 2;
    a = md(a);
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  auto rank = [&](std::vector<std::vector<long>> m) {
    int rk = 0;
    for (std::size_t col = 0; col < m[0].size() && rk < static_cast<int>(m.size()); ++col) {
      std::size_t piv = rk;
      while (piv < m.size() && m[piv][col] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[piv], m[rk]);
      long iv = inv(m[rk][col]);
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == static_cast<std::size_t>(rk) || !m[r][col]) continue;
        long k = m[r][col] * iv % p;
        for (std::size_t j = col; j < m[0].size(); ++j) m[r][j] = md(m[r][j] - k * m[rk][j]);
      }
      ++rk;
    }
    return rk;
  };
  std::vector<std::vector<long>> total(3, std::vector<long>(8));
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 2; ++j) total[i][2 * a + j] = md(f[a][2 * i + j]);
  if (rank(total) <= 2) return false;
  auto line = [&](long x, long y) {
    std::vector<std::vector<long>> m(3, std::vector<long>(4));
    for (int a = 0; a < 4; ++a)
      for (int i = 0; i < 3; ++i) m[i][a] = md(f[a][2 * i] * x + f[a][2 * i + 1] * y);
    return rank(m) <= 1;
  };
  if (line(0, 1)) return false;
  for (long t = 0; t < p; ++t)
    if (line(1, t)) return false;
  return true;
}

void quiver(Check& c) {
  StabilityVerdict hb = is_stable_rep(rep_from_json(read_json_file(src("data/examples/rep_hilbert_burch.json"))));
  c.expect(hb.stable, "Hilbert-Burch stable");
  StabilityVerdict r2 = is_stable_rep(rep_from_json(read_json_file(src("data/examples/rep_rank2_repeated.json"))));
  c.expect(!r2.stable && r2.witness->subdim == DimVector{2, 2}, "rank-2 witness (2,2)");
  StabilityVerdict z = is_stable_rep(rep_from_json(read_json_file(src("data/examples/rep_zero.json"))));
  c.expect(!z.stable && z.witness->subdim == DimVector{1, 0}, "zero witness (1,0)");

  std::mt19937_64 rng(2024);
  auto ri = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  int agreed = 0, valid = 0;
  std::vector<QuiverRep> sample;
  for (int i = 0; i < 100; ++i) {
    std::vector<std::array<long, 6>> f(4);
    long v0 = ri(1, 3), v1 = ri(-3, 3);
    long w[3] = {ri(-3, 3), ri(-3, 3), ri(1, 3)};
    for (auto& a : f)
      for (auto& x : a) x = ri(-4, 4);
    if (i % 3 == 1) {
      // f_a = w (x) l_a + c_a (x) perp with perp(v) = 0, so every f_a(v) lies on the line of w
      for (auto& a : f) {
        long l0 = ri(-3, 3), l1 = ri(-3, 3);
        for (int r = 0; r < 3; ++r) {
          long cr = ri(-3, 3);
          a[2 * r] = w[r] * l0 - cr * v1;
          a[2 * r + 1] = w[r] * l1 + cr * v0;
        }
      }
    }
    if (i % 3 == 2) {
      long pc[3] = {ri(-3, 3), ri(-3, 3), ri(-3, 3)}, qc[3] = {1, ri(-3, 3), ri(-3, 3)};
      for (auto& a : f) {
        long x0 = ri(-3, 3), x1 = ri(-3, 3), y0 = ri(-3, 3), y1 = ri(-3, 3);
        for (int r = 0; r < 3; ++r) {
          a[2 * r] = pc[r] * x0 + qc[r] * y0;
          a[2 * r + 1] = pc[r] * x1 + qc[r] * y1;
        }
      }
    }
    std::vector<Matrix> arrows;
    for (auto& a : f) arrows.push_back(mat({a[0], a[1], a[2], a[3], a[4], a[5]}));
    QuiverRep rep(arrows);
    StabilityVerdict v = is_stable_rep(rep);
    bool oracle = stable_mod_p(f);
    if (v.stable && !oracle) continue;  // bad reduction mod p
    if (!v.stable && v.witness->kind == StabilityWitness::Kind::source_root) continue;
    ++valid;
    agreed += v.stable == oracle;
    sample.push_back(rep);
  }
  c.expect(valid >= 95 && agreed == valid, "finite field oracle " + std::to_string(agreed) + "/" +
                                               std::to_string(valid));
  auto inv_mat = [&](std::size_t n) {
    for (;;) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = q(ri(-5, 5), ri(1, 3));
      if (determinant(m) != 0) return m;
    }
  };
  for (int i = 0; i < 20; ++i) {
    const QuiverRep& rep = sample[i * sample.size() / 20];
    StabilityVerdict a = is_stable_rep(rep), b = is_stable_rep(rep.base_change(inv_mat(2), inv_mat(3)));
    c.expect(a.stable == b.stable && (a.stable || a.witness->subdim == b.witness->subdim),
             "base change " + std::to_string(i));
  }
}

void gbg(Check& c) {
  std::mt19937_64 rng(99);
  for (long n = -3; n <= 3; ++n)
    for (int i = 0; i < 5; ++i) {
      Rational beta = Rational(n) - q(std::uniform_int_distribution<long>(1, 40)(rng), 7);
      StabilityParams p(beta, (Rational(n) - beta) * (Rational(n) - beta));
      c.expect(gbg_residual(of_line_bundle(n), p) == 0, "O(" + std::to_string(n) + ")");
    }
  c.expect(gbg_residual(ic(), StabilityParams(q(-5, 2), q(1, 4))) == 0, "v on the first wall");
  c.expect(gbg_residual(of_standard(ObjectKind::plane_sheaf(-3)), StabilityParams(q(-7, 2), 1)) == q(1, 8),
           "O_V(-3)");
}

void audit(Check& c) {
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(src("data/fixtures")))
    if (e.path().filename().string().find("_wall_") != std::string::npos) files.push_back(e.path().string());
  c.expect(files.size() >= 7, "fixtures present");
  for (const auto& f : files) c.expect(grid_check(grid_from_json(read_json_file(f))).all_ok, f);
  ExtGrid cf = grid_from_json(read_json_file(src("data/fixtures/third_wall_E_counterfactual.json")));
  c.expect(!feasible_ranks(cf.lines.at(0).fragment).feasible, "Ext^1(E,E) = 12 infeasible");

  MonomialQuadricSet qs = quadrics_from_json(read_json_file(src("data/fixtures/kuranishi_quadrics.json")));
  auto comps = monomial_quadric_components(qs);
  std::multiset<long> dims;
  for (auto& x : comps) dims.insert(x.dim);
  c.expect(dims == std::multiset<long>{12, 15}, "components 15 and 12");
  c.expect(comps.size() == 2 && intersection_dim(qs, comps[0], comps[1]) == 11, "intersection 11");
  std::multiset<long> vals;
  for (const auto& e : dimension_ledger()) {
    c.expect(e.ok, e.name);
    vals.insert(e.value);
  }
  for (long x : {9L, 15L, 12L, 11L, 16L, 14L, 5L}) c.expect(vals.count(x) > 0, "ledger value " + std::to_string(x));
}

struct Criterion {
  int id;
  const char* title;
  double budget_ms;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> all = {
      {1, "lattice decompositions of I_C", 1000, lattice},
      {2, "Euler pairings of both wall pairs", 1000, euler},
      {3, "dimension 12 consistency", 1000, dimension12},
      {4, "first wall and Z(O(-2))", 1000, first_wall},
      {5, "slope flip of O(-2) against O(-3)[1]", 1000, slope_flip},
      {6, "destabilizer enumeration", 10000, destabilizers},
      {7, "three walls and four chambers on the default path", 30000, chambers},
      {8, "quiver stability suite", 30000, quiver},
      {9, "generalized Bogomolov-Gieseker residuals", 1000, gbg},
      {10, "Ext grid audit and dimension ledger", 1000, audit},
  };
  int failures = 0;
  for (const auto& crit : all) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      crit.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ms > crit.budget_ms) c.expect(false, "over time budget");
    std::printf("criterion %2d %s  %-52s %9.1f ms%s%s\n", crit.id, c.ok ? "PASS" : "FAIL", crit.title, ms,
                c.ok ? "" : "  ", c.ok ? "" : c.first_failure.c_str());
    failures += !c.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failures, all.size());
  return failures;
}
