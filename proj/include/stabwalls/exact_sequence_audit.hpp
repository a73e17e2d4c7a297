#pragma once

#include "stabwalls/chern_lattice.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabwalls {

/// A stretch d_0 -> d_1 -> ... -> d_{n-1} of a long exact sequence.
/// Map i leaves d_i; exactness at d_i reads d_i = rank(map i-1) + rank(map i),
/// with map -1 the incoming map of rank r_in and map n-1 the outgoing one,
/// whose rank must be r_out. `forced` pins ranks of individual maps.
/// Without r_in, the incoming rank is solved backwards from the first forced
/// map, or from r_out if nothing is forced.
struct LESFragment {
  std::vector<long> dims;
  std::optional<long> r_in;
  long r_out = 0;
  std::map<std::size_t, long> forced;
  std::string cite;
};

struct Infeasibility {
  long position = 0;  // map index; -1 for the incoming map
  std::string reason;
};

struct RankResult {
  bool feasible = false;
  long r_in = 0;
  std::vector<long> ranks;  // maps 0 .. n-2
  long terminal = 0;        // map n-1
  std::optional<Infeasibility> failure;
};

RankResult feasible_ranks(const LESFragment& frag);

class MalformedGrid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GridLine {
  LESFragment fragment;
  bool expect_feasible = true;
};

/// The printed lines of one Ext diagram, each checked as its own fragment.
struct ExtGrid {
  std::string name;
  std::string cite;
  std::vector<GridLine> lines;
};

struct LineVerdict {
  std::string cite;
  RankResult result;
  bool expected_feasible = true;
  bool ok = false;  // result.feasible == expected_feasible
};

struct GridReport {
  std::string name;
  std::vector<LineVerdict> lines;
  bool all_ok = true;
};

/// Throws MalformedGrid on an empty grid, an empty line or negative entries.
GridReport grid_check(const ExtGrid& grid);

/// d0 - d1 + d2 - d3 == chi(v, w).
bool chi_crosscheck(const std::array<long, 4>& dims, const ChernCharacter& v, const ChernCharacter& w);

struct LedgerEntry {
  std::string name;
  std::string formula;
  long value = 0;
  long expected = 0;
  bool ok = false;
};

/// Dimension counts of the moduli spaces and their loci, each recomputed from its parts.
std::vector<LedgerEntry> dimension_ledger();

/// Vanishing set of the monomials u_a u_b, variables numbered 1..n.
struct MonomialQuadricSet {
  long n = 0;
  std::vector<std::pair<long, long>> pairs;
};

/// The coordinate subspace {u_i = 0 for i in zero_vars}.
struct CoordinateSubspace {
  std::vector<long> zero_vars;
  long dim = 0;
  friend bool operator==(const CoordinateSubspace&, const CoordinateSubspace&) = default;
};

/// Irreducible components, one per minimal vertex cover of the pair graph,
/// sorted by dimension (descending) then by zero_vars.
std::vector<CoordinateSubspace> monomial_quadric_components(const MonomialQuadricSet& q);

long intersection_dim(const MonomialQuadricSet& q, const CoordinateSubspace& a, const CoordinateSubspace& b);

/// True iff the point lies on the vanishing set (point[i] is u_{i+1}).
bool on_vanishing_set(const MonomialQuadricSet& q, const std::vector<Rational>& point);

bool in_subspace(const CoordinateSubspace& s, const std::vector<Rational>& point);

}  // namespace stabwalls
