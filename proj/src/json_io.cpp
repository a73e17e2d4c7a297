#include "stabwalls/json_io.hpp"

#include <fstream>
#include <sstream>

namespace stabwalls {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

long as_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::vector<Rational> rational_list(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) bad(std::string(what) + " must be an array of " + std::to_string(n));
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  bad("expected a rational string \"p/q\" or an integer");
}

Json to_json(const ChernCharacter& v) {
  return Json::array({to_json(v.ch0), to_json(v.ch1), to_json(v.ch2), to_json(v.ch3)});
}

ChernCharacter chern_from_json(const Json& j) {
  auto x = rational_list(j, 4, "a Chern character");
  return {x[0], x[1], x[2], x[3]};
}

Json to_json(const ObjectKind& k) {
  using T = ObjectKind::Tag;
  Json j;
  j["kind"] = tag_name(k.tag);
  switch (k.tag) {
    case T::point_sheaf:
    case T::ideal_twisted_cubic: break;
    case T::curve_sheaf:
    case T::ideal_curve:
      j["degree"] = k.degree;
      j["chi"] = k.chi;
      break;
    case T::shift_of: j["of"] = to_json(*k.inner); break;
    default: j["d"] = k.d;
  }
  return j;
}

ObjectKind object_from_json(const Json& j) {
  using T = ObjectKind::Tag;
  if (!j.is_object()) bad("object description must be a JSON object");
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("'kind' must be a string");
  T tag;
  try {
    tag = tag_from_name(kind.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  switch (tag) {
    case T::point_sheaf: return ObjectKind::point_sheaf();
    case T::ideal_twisted_cubic: return ObjectKind::ideal_twisted_cubic();
    case T::curve_sheaf:
      return ObjectKind::curve_sheaf(as_long(field(j, "degree"), "degree"), as_long(field(j, "chi"), "chi"));
    case T::ideal_curve:
      return ObjectKind::ideal_curve(as_long(field(j, "degree"), "degree"), as_long(field(j, "chi"), "chi"));
    case T::shift_of: return ObjectKind::shift_of(object_from_json(field(j, "of")));
    default: {
      ObjectKind k;
      k.tag = tag;
      k.d = as_long(field(j, "d"), "d");
      return k;
    }
  }
}

ChernCharacter class_from_json(const Json& j) {
  if (j.is_array()) return chern_from_json(j);
  ChernCharacter v = of_standard(object_from_json(j));
  if (j.contains("mult")) v = scale(v, as_long(j.at("mult"), "mult"));
  return v;
}

Json to_json(const Slope& s) { return s.is_infinite() ? Json("+inf") : to_json(s.value()); }

Json to_json(const ChargeValue& z) { return {{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

Json to_json(const WallCircle& w) {
  Json j{{"kind", kind_name(w.kind)}};
  if (w.kind == WallCircle::Kind::semicircle) {
    j["center"] = to_json(w.center);
    j["radius_sq"] = to_json(w.radius_sq);
  } else if (w.kind == WallCircle::Kind::vertical) {
    j["beta0"] = to_json(w.beta0);
  }
  return j;
}

WallCircle wall_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "semicircle") {
    Rational r2 = rational_from_json(field(j, "radius_sq"));
    if (sgn(r2) <= 0) bad("semicircle radius_sq must be positive");
    return WallCircle::semicircle(rational_from_json(field(j, "center")), std::move(r2));
  }
  if (k == "vertical") return WallCircle::vertical(rational_from_json(field(j, "beta0")));
  if (k == "degenerate_equal") return WallCircle::degenerate();
  if (k == "empty") return WallCircle::none();
  bad("unknown wall kind '" + k + "'");
}

namespace {

Json point_json(const PathPoint& p) {
  return {{"beta", to_json(p.beta)}, {"alpha_sq", to_json(p.alpha_sq)}, {"s", to_json(p.s)}};
}

PathPoint point_from_json(const Json& j) {
  PathPoint p;
  p.beta = rational_from_json(field(j, "beta"));
  p.alpha_sq = rational_from_json(field(j, "alpha_sq"));
  p.s = j.contains("s") ? rational_from_json(j.at("s")) : Rational(1, 3);
  return p;
}

}  // namespace

Json to_json(const PathSpec& p) {
  Json segs = Json::array();
  for (const auto& s : p.raw_segments()) segs.push_back({{"from", point_json(s.from)}, {"to", point_json(s.to)}});
  Json j{{"segments", segs}};
  if (p.reversed()) j["reversed"] = true;
  return j;
}

PathSpec path_from_json(const Json& j) {
  const Json& segs = field(j, "segments");
  if (!segs.is_array()) bad("'segments' must be an array");
  std::vector<PathSegment> out;
  for (const auto& s : segs) out.push_back({point_from_json(field(s, "from")), point_from_json(field(s, "to"))});
  bool reversed = false;
  if (j.contains("reversed")) {
    if (!j.at("reversed").is_boolean()) bad("'reversed' must be a boolean");
    reversed = j.at("reversed").get<bool>();
  }
  return PathSpec(std::move(out), reversed);
}

Json to_json(const Crossing& c) {
  return {{"segment", c.segment},          {"candidate", c.candidate},        {"t0", to_json(c.t0)},
          {"t1", to_json(c.t1)},           {"w", to_json(c.w)},               {"sign_before", c.sign_before},
          {"sign_after", c.sign_after}};
}

Json to_json(const ScanResult& r) {
  Json cs = Json::array(), ds = Json::array();
  for (const auto& c : r.crossings) cs.push_back(to_json(c));
  for (const auto& d : r.degenerate) ds.push_back({{"segment", d.segment}, {"candidate", d.candidate}});
  return {{"crossings", cs}, {"degenerate", ds}};
}

Json to_json(const ChamberReport& r) {
  Json walls = Json::array();
  for (std::size_t i = 0; i < r.walls.size(); ++i) {
    const auto& w = r.walls[i];
    walls.push_back({{"wall", i + 1},
                     {"between", Json::array({r.chambers[i], r.chambers[i + 1]})},
                     {"crossing", to_json(w.crossing)},
                     {"v_A", to_json(w.v_a)},
                     {"v_B", to_json(w.v_b)},
                     {"A", w.label_a},
                     {"B", w.label_b},
                     {"B_in_candidates", w.complement_in_candidates}});
  }
  Json ds = Json::array();
  for (const auto& d : r.degenerate) ds.push_back({{"segment", d.segment}, {"candidate", d.candidate}});
  return {{"walls", walls}, {"chambers", r.chambers}, {"degenerate", ds}};
}

Json to_json(const QuiverRep& rep) {
  Json arrows = Json::array();
  for (const auto& f : rep.arrows()) {
    Json m = Json::array();
    for (std::size_t r = 0; r < f.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < f.cols(); ++c) row.push_back(to_json(f(r, c)));
      m.push_back(row);
    }
    arrows.push_back(m);
  }
  return {{"arrows", arrows}};
}

QuiverRep rep_from_json(const Json& j) {
  const Json& arrows = field(j, "arrows");
  if (!arrows.is_array()) bad("'arrows' must be an array");
  std::vector<Matrix> out;
  for (const auto& m : arrows) {
    if (!m.is_array() || m.empty()) bad("each arrow must be a nonempty array of rows");
    const std::size_t rows = m.size(), cols = m[0].is_array() ? m[0].size() : 0;
    Matrix f(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!m[r].is_array() || m[r].size() != cols) bad("ragged arrow matrix");
      for (std::size_t c = 0; c < cols; ++c) f(r, c) = rational_from_json(m[r][c]);
    }
    out.push_back(std::move(f));
  }
  return QuiverRep(std::move(out));
}

Json to_json(const StabilityVerdict& v) {
  Json j{{"stable", v.stable}};
  if (!v.witness) return j;
  const auto& w = *v.witness;
  Json wj{{"subdim", Json::array({w.subdim.m, w.subdim.n})}};
  switch (w.kind) {
    case StabilityWitness::Kind::image_basis: {
      Json basis = Json::array();
      for (const auto& col : w.image_basis) {
        Json c = Json::array();
        for (const auto& x : col) c.push_back(to_json(x));
        basis.push_back(c);
      }
      wj["image_basis"] = basis;
      break;
    }
    case StabilityWitness::Kind::source_vector:
      wj["source_vector"] = Json::array({to_json(w.source_vector[0]), to_json(w.source_vector[1])});
      break;
    case StabilityWitness::Kind::source_root: {
      Json coeffs = Json::array();
      for (const auto& c : w.root_poly.coeffs()) coeffs.push_back(to_json(c));
      wj["source_root"] = {{"chart", "v = (1, t)"}, {"poly", coeffs}, {"text", w.root_poly.str()}};
      break;
    }
  }
  j["witness"] = wj;
  return j;
}

LESFragment fragment_from_json(const Json& j) {
  LESFragment f;
  const Json& dims = field(j, "dims");
  if (!dims.is_array()) bad("'dims' must be an array");
  for (const auto& d : dims) f.dims.push_back(as_long(d, "dims entry"));
  if (j.contains("r_in") && !j.at("r_in").is_null()) f.r_in = as_long(j.at("r_in"), "r_in");
  if (j.contains("r_out")) f.r_out = as_long(j.at("r_out"), "r_out");
  if (j.contains("forced")) {
    for (const auto& p : j.at("forced")) {
      if (!p.is_array() || p.size() != 2) bad("'forced' entries are [map index, rank]");
      const long idx = as_long(p[0], "forced index");
      if (idx < 0) bad("forced index must be nonnegative");
      f.forced[static_cast<std::size_t>(idx)] = as_long(p[1], "forced rank");
    }
  }
  if (j.contains("cite")) f.cite = j.at("cite").get<std::string>();
  return f;
}

Json to_json(const RankResult& r) {
  Json j{{"feasible", r.feasible}, {"r_in", r.r_in}, {"ranks", r.ranks}};
  if (r.feasible) j["terminal"] = r.terminal;
  if (r.failure) j["failure"] = {{"position", r.failure->position}, {"reason", r.failure->reason}};
  return j;
}

ExtGrid grid_from_json(const Json& j) {
  ExtGrid g;
  if (!j.is_object()) bad("grid must be a JSON object");
  if (j.contains("name")) g.name = j.at("name").get<std::string>();
  if (j.contains("cite")) g.cite = j.at("cite").get<std::string>();
  for (const char* key : {"rows", "columns"}) {
    if (!j.contains(key)) continue;
    if (!j.at(key).is_array()) bad(std::string("'") + key + "' must be an array");
    for (const auto& line : j.at(key)) {
      GridLine gl;
      gl.fragment = fragment_from_json(line);
      if (line.contains("expect")) {
        const std::string e = line.at("expect").get<std::string>();
        if (e != "feasible" && e != "infeasible") bad("'expect' must be feasible or infeasible");
        gl.expect_feasible = e == "feasible";
      }
      g.lines.push_back(std::move(gl));
    }
  }
  return g;
}

Json to_json(const GridReport& r) {
  Json lines = Json::array();
  for (const auto& l : r.lines) {
    lines.push_back({{"cite", l.cite},
                     {"expected", l.expected_feasible ? "feasible" : "infeasible"},
                     {"ok", l.ok},
                     {"result", to_json(l.result)}});
  }
  return {{"name", r.name}, {"all_ok", r.all_ok}, {"lines", lines}};
}

Json to_json(const std::vector<LedgerEntry>& ledger) {
  Json out = Json::array();
  for (const auto& e : ledger) {
    out.push_back({{"name", e.name}, {"formula", e.formula}, {"value", e.value}, {"expected", e.expected}, {"ok", e.ok}});
  }
  return out;
}

MonomialQuadricSet quadrics_from_json(const Json& j) {
  MonomialQuadricSet q;
  q.n = as_long(field(j, "n"), "n");
  for (const auto& p : field(j, "pairs")) {
    if (!p.is_array() || p.size() != 2) bad("pairs are [a, b]");
    q.pairs.emplace_back(as_long(p[0], "pair entry"), as_long(p[1], "pair entry"));
  }
  return q;
}

Json to_json(const CoordinateSubspace& s) { return {{"zero_vars", s.zero_vars}, {"dim", s.dim}}; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace stabwalls
