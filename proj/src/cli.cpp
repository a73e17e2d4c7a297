#include "stabwalls/cli.hpp"

#include "stabwalls/config.hpp"
#include "stabwalls/json_io.hpp"
#include "stabwalls/riemann_roch.hpp"
#include "stabwalls/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace stabwalls {

namespace {

// Raised when a check ran but failed; carries the JSON already printed.
struct FailedCheck {
  std::string message;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<long> parse_longs(const std::string& s, const char* what) {
  std::vector<long> out;
  for (const auto& part : split(s, ',')) {
    Rational q = parse_rational(part);
    if (!is_integer(q)) throw ParseError(std::string(what) + ": '" + part + "' is not an integer");
    out.push_back(q.get_num().get_si());
  }
  return out;
}

// Inline JSON when the value starts with '{' or '[', otherwise a file path.
Json json_arg(const std::string& value) {
  const auto p = value.find_first_not_of(" \t\n");
  if (p != std::string::npos && (value[p] == '{' || value[p] == '[')) return parse_json(value);
  return read_json_file(value);
}

struct ParamFlags {
  std::string beta, alpha, alpha_sq, s;

  void attach(CLI::App* app) {
    app->add_option("--beta", beta, "beta as p/q")->required();
    app->add_option("--alpha", alpha, "alpha as p/q (squared internally)");
    app->add_option("--alpha-sq", alpha_sq, "alpha^2 as p/q");
    app->add_option("--s", s, "s as p/q (lambda charge only)");
  }

  StabilityParams build(const Config& cfg) const {
    if (alpha.empty() == alpha_sq.empty()) throw ParseError("give exactly one of --alpha, --alpha-sq");
    Rational sv = s.empty() ? cfg.s : parse_rational(s);
    if (!alpha.empty()) return StabilityParams::from_alpha(parse_rational(beta), parse_rational(alpha), sv);
    return StabilityParams(parse_rational(beta), parse_rational(alpha_sq), sv);
  }
};

void emit(std::ostream& out, const Json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << "\n"; }

ChernCharacter v_or_default(const std::string& v) {
  return v.empty() ? of_standard(ObjectKind::ideal_twisted_cubic()) : class_from_json(json_arg(v));
}

std::vector<ChernCharacter> candidates_arg(const std::string& value) {
  if (value.empty()) return default_candidates();
  Json j = json_arg(value);
  if (!j.is_array()) throw ParseError("--candidates must be a JSON array");
  std::vector<ChernCharacter> out;
  for (const auto& c : j) out.push_back(class_from_json(c));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact wall-and-chamber computations for stability conditions on P^3", "stabwalls"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  bool pretty = false;
  app.add_option("--config", config_path, "config file (overrides STABWALLS_CONFIG)");
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::function<int(const Config&)> action;

  // chern
  auto* chern = app.add_subcommand("chern", "Chern character of an object or class");
  std::string chern_obj;
  long chern_twist = 0;
  bool chern_lattice = false, chern_dual = false;
  chern->add_option("--object", chern_obj, "object JSON or class array")->required();
  chern->add_option("--twist", chern_twist, "twist by O(n)");
  chern->add_flag("--dual", chern_dual, "dualize");
  chern->add_flag("--lattice", chern_lattice, "also print [O],[O_V],[O_L],[pt] coordinates");
  chern->callback([&] {
    action = [&](const Config&) {
      ChernCharacter v = twist(class_from_json(json_arg(chern_obj)), chern_twist);
      if (chern_dual) v = dual(v);
      if (!chern_lattice) {
        emit(out, to_json(v), pretty);
        return kOk;
      }
      LatticeCoords x = lattice_coords(v);
      emit(out, {{"class", to_json(v)}, {"lattice", Json::array({x.a.get_str(), x.b.get_str(), x.c.get_str(), x.d.get_str()})}},
           pretty);
      return kOk;
    };
  });

  // chi
  auto* chi = app.add_subcommand("chi", "Euler characteristic chi(left) or pairing chi(left, right)");
  std::string chi_left, chi_right, chi_table;
  chi->add_option("--left", chi_left, "object JSON")->required();
  chi->add_option("--right", chi_right, "object JSON");
  chi->add_option("--table", chi_table, "Ext^0..Ext^3 dims d0,d1,d2,d3 to cross-check");
  chi->callback([&] {
    action = [&](const Config&) {
      const ChernCharacter v = class_from_json(json_arg(chi_left));
      if (chi_right.empty()) {
        if (!chi_table.empty()) throw ParseError("--table needs --right");
        emit(out, to_json(euler_chi(v)), pretty);
        return kOk;
      }
      const ChernCharacter w = class_from_json(json_arg(chi_right));
      const Rational value = euler_pairing(v, w);
      if (chi_table.empty()) {
        emit(out, to_json(value), pretty);
        return kOk;
      }
      auto d = parse_longs(chi_table, "--table");
      if (d.size() != 4) throw ParseError("--table needs four entries");
      const bool ok = chi_crosscheck({d[0], d[1], d[2], d[3]}, v, w);
      emit(out, {{"alternating_sum", d[0] - d[1] + d[2] - d[3]}, {"chi", to_json(value)}, {"ok", ok}}, pretty);
      return ok ? kOk : kFailedCheck;
    };
  });

  // hilb
  auto* hilb = app.add_subcommand("hilb", "Hilbert polynomial m -> chi(E(m))");
  std::string hilb_obj, hilb_at;
  hilb->add_option("--object", hilb_obj, "object JSON")->required();
  hilb->add_option("--at", hilb_at, "evaluate at this m");
  hilb->callback([&] {
    action = [&](const Config&) {
      const Polynomial p = hilbert_polynomial(class_from_json(json_arg(hilb_obj)));
      if (!hilb_at.empty()) {
        emit(out, to_json(p(parse_rational(hilb_at))), pretty);
        return kOk;
      }
      Json coeffs = Json::array();
      for (std::size_t i = 0; i < 4; ++i) coeffs.push_back(to_json(p.coeff(i)));
      emit(out, {{"coeffs", coeffs}, {"text", p.str("m")}}, pretty);
      return kOk;
    };
  });

  // z, nu, lambda, gbg
  auto* z = app.add_subcommand("z", "central charge");
  std::string z_obj, z_kind = "tilt";
  ParamFlags z_params;
  z->add_option("--object", z_obj, "object JSON")->required();
  z->add_option("--kind", z_kind, "tilt or lambda");
  z_params.attach(z);
  z->callback([&] {
    action = [&](const Config& cfg) {
      const ChernCharacter v = class_from_json(json_arg(z_obj));
      const StabilityParams p = z_params.build(cfg);
      emit(out, to_json(charge_kind_from_name(z_kind) == ChargeKind::tilt ? z_tilt(v, p) : z_lambda(v, p)), pretty);
      return kOk;
    };
  });

  auto* nu_cmd = app.add_subcommand("nu", "tilt slope");
  std::string nu_obj;
  ParamFlags nu_params;
  nu_cmd->add_option("--object", nu_obj, "object JSON")->required();
  nu_params.attach(nu_cmd);
  nu_cmd->callback([&] {
    action = [&](const Config& cfg) {
      emit(out, to_json(nu(class_from_json(json_arg(nu_obj)), nu_params.build(cfg))), pretty);
      return kOk;
    };
  });

  auto* lam = app.add_subcommand("lambda", "second-tilt slope");
  std::string lam_obj;
  ParamFlags lam_params;
  lam->add_option("--object", lam_obj, "object JSON")->required();
  lam_params.attach(lam);
  lam->callback([&] {
    action = [&](const Config& cfg) {
      emit(out, to_json(lambda_slope(class_from_json(json_arg(lam_obj)), lam_params.build(cfg))), pretty);
      return kOk;
    };
  });

  auto* gbg = app.add_subcommand("gbg", "generalized Bogomolov-Gieseker residual");
  std::string gbg_obj;
  ParamFlags gbg_params;
  gbg->add_option("--object", gbg_obj, "object JSON")->required();
  gbg_params.attach(gbg);
  gbg->callback([&] {
    action = [&](const Config& cfg) {
      emit(out, to_json(gbg_residual(class_from_json(json_arg(gbg_obj)), gbg_params.build(cfg))), pretty);
      return kOk;
    };
  });

  // wall
  auto* wall = app.add_subcommand("wall", "numerical tilt wall of w against v");
  std::string wall_v, wall_w;
  wall->add_option("--v", wall_v, "class of v (default I_C)");
  wall->add_option("--w", wall_w, "destabilizing class")->required();
  wall->callback([&] {
    action = [&](const Config&) {
      emit(out, to_json(tilt_wall(v_or_default(wall_v), class_from_json(json_arg(wall_w)))), pretty);
      return kOk;
    };
  });

  // destab
  auto* destab = app.add_subcommand("destab", "enumerate numerical destabilizers (r, c, d)");
  std::string destab_v;
  std::optional<long> destab_bound;
  ParamFlags destab_params;
  destab->add_option("--v", destab_v, "class of v (default I_C)");
  destab->add_option("--rank-bound", destab_bound, "bound on |rank|");
  destab_params.attach(destab);
  destab->callback([&] {
    action = [&](const Config& cfg) {
      const auto list = enumerate_destabilizers(v_or_default(destab_v), destab_params.build(cfg),
                                                destab_bound.value_or(cfg.rank_bound));
      Json j = Json::array();
      for (const auto& w : list) j.push_back(Json::array({to_json(w.ch0), to_json(w.ch1), to_json(w.ch2)}));
      emit(out, j, pretty);
      return kOk;
    };
  });

  // scan and chambers share their flags
  struct PathFlags {
    std::string v, path, candidates, kind = "lambda", tol;
  };
  PathFlags scan_f, ch_f;
  auto attach_path = [](CLI::App* a, PathFlags& f) {
    a->add_option("--v", f.v, "class of v (default I_C)");
    a->add_option("--path", f.path, "path JSON (default: the shipped default path)");
    a->add_option("--candidates", f.candidates, "JSON array of classes (default: the three wall classes)");
    a->add_option("--kind", f.kind, "tilt or lambda");
    a->add_option("--tol", f.tol, "bracket width in the path parameter");
  };
  auto* scan = app.add_subcommand("scan", "residual sign changes along a path");
  attach_path(scan, scan_f);
  scan->callback([&] {
    action = [&](const Config& cfg) {
      const PathSpec path = scan_f.path.empty() ? default_path() : path_from_json(json_arg(scan_f.path));
      const Rational tol = scan_f.tol.empty() ? cfg.tolerance : parse_rational(scan_f.tol);
      emit(out, to_json(scan_path(v_or_default(scan_f.v), path, candidates_arg(scan_f.candidates),
                                  charge_kind_from_name(scan_f.kind), tol)),
           pretty);
      return kOk;
    };
  });
  auto* chambers = app.add_subcommand("chambers", "chambers and labeled walls along a path");
  attach_path(chambers, ch_f);
  chambers->callback([&] {
    action = [&](const Config& cfg) {
      const PathSpec path = ch_f.path.empty() ? default_path() : path_from_json(json_arg(ch_f.path));
      const Rational tol = ch_f.tol.empty() ? cfg.tolerance : parse_rational(ch_f.tol);
      emit(out, to_json(chamber_report(v_or_default(ch_f.v), path, candidates_arg(ch_f.candidates),
                                       charge_kind_from_name(ch_f.kind), tol)),
           pretty);
      return kOk;
    };
  });

  // quiver
  auto* quiver = app.add_subcommand("quiver", "Kronecker quiver computations");
  quiver->require_subcommand(1);
  auto* qcheck = quiver->add_subcommand("check", "theta-stability of a (2,3) representation");
  std::string qrep;
  qcheck->add_option("--rep", qrep, "representation JSON")->required();
  qcheck->callback([&] {
    action = [&](const Config&) {
      const StabilityVerdict v = is_stable_rep(rep_from_json(json_arg(qrep)));
      emit(out, to_json(v), pretty);
      return v.stable ? kOk : kFailedCheck;
    };
  });
  auto* qdim = quiver->add_subcommand("dim", "Euler form, expected dimension, destabilizing subdims");
  long qarrows = 4;
  std::string qd = "2,3";
  qdim->add_option("--arrows", qarrows, "number of arrows");
  qdim->add_option("--dim", qd, "dimension vector m,n");
  qdim->callback([&] {
    action = [&](const Config&) {
      auto mn = parse_longs(qd, "--dim");
      if (mn.size() != 2 || mn[0] < 0 || mn[1] < 0 || qarrows <= 0) throw ParseError("--dim needs m,n >= 0");
      const KroneckerQuiver q{qarrows};
      const DimVector d{mn[0], mn[1]};
      Json subs = Json::array();
      for (const auto& e : destabilizing_subdims(d)) subs.push_back(Json::array({e.m, e.n}));
      emit(out,
           {{"theta", theta(d)},
            {"euler_form", euler_form(q, d, d)},
            {"expected_dim", expected_dim(q, d)},
            {"destabilizing_subdims", subs}},
           pretty);
      return kOk;
    };
  });

  // les
  auto* les = app.add_subcommand("les", "long exact sequence rank feasibility");
  std::string les_fixture, les_dims, les_forced;
  std::optional<long> les_rin;
  long les_rout = 0;
  les->add_option("--fixture", les_fixture, "ExtGrid JSON");
  les->add_option("--dims", les_dims, "d0,d1,...");
  les->add_option("--r-in", les_rin, "rank of the incoming map");
  les->add_option("--r-out", les_rout, "rank of the outgoing map");
  les->add_option("--forced", les_forced, "i:rank,... forced map ranks");
  les->callback([&] {
    action = [&](const Config&) {
      if (les_fixture.empty() == les_dims.empty()) throw ParseError("give exactly one of --fixture, --dims");
      if (!les_fixture.empty()) {
        const GridReport rep = grid_check(grid_from_json(json_arg(les_fixture)));
        emit(out, to_json(rep), pretty);
        return rep.all_ok ? kOk : kFailedCheck;
      }
      LESFragment f;
      f.dims = parse_longs(les_dims, "--dims");
      f.r_in = les_rin;
      f.r_out = les_rout;
      if (!les_forced.empty()) {
        for (const auto& item : split(les_forced, ',')) {
          auto kv = split(item, ':');
          if (kv.size() != 2) throw ParseError("--forced entries are i:rank");
          auto i = parse_longs(kv[0], "--forced"), r = parse_longs(kv[1], "--forced");
          if (i[0] < 0) throw ParseError("--forced index must be nonnegative");
          f.forced[static_cast<std::size_t>(i[0])] = r[0];
        }
      }
      const RankResult r = feasible_ranks(f);
      emit(out, to_json(r), pretty);
      return r.feasible ? kOk : kFailedCheck;
    };
  });

  // ledger
  auto* ledger = app.add_subcommand("ledger", "dimension identities and monomial quadric components");
  std::string ledger_quadrics;
  ledger->add_option("--quadrics", ledger_quadrics, "{\"n\":16,\"pairs\":[[1,2],...]}");
  ledger->callback([&] {
    action = [&](const Config&) {
      if (!ledger_quadrics.empty()) {
        const MonomialQuadricSet q = quadrics_from_json(json_arg(ledger_quadrics));
        const auto comps = monomial_quadric_components(q);
        Json cj = Json::array(), ij = Json::array();
        for (const auto& c : comps) cj.push_back(to_json(c));
        for (std::size_t a = 0; a < comps.size(); ++a) {
          for (std::size_t b = a + 1; b < comps.size(); ++b) {
            ij.push_back({{"pair", Json::array({a, b})}, {"dim", intersection_dim(q, comps[a], comps[b])}});
          }
        }
        emit(out, {{"components", cj}, {"intersections", ij}}, pretty);
        return kOk;
      }
      const auto entries = dimension_ledger();
      emit(out, to_json(entries), pretty);
      return std::all_of(entries.begin(), entries.end(), [](const LedgerEntry& e) { return e.ok; }) ? kOk
                                                                                                      : kFailedCheck;
    };
  });

  // plot
  auto* plot = app.add_subcommand("plot", "SVG picture of tilt walls in the (beta, alpha) half-plane");
  std::string plot_v, plot_walls, plot_out, bmin = "-6", bmax = "-1", amax = "3";
  std::vector<std::string> plot_w, plot_markers;
  int pw = 800, ph = 400;
  plot->add_option("--v", plot_v, "class of v (default I_C)");
  plot->add_option("--w", plot_w, "destabilizing class JSON (repeatable; default: the three wall classes)");
  plot->add_option("--walls", plot_walls, "JSON array of wall objects drawn as given");
  plot->add_option("--beta-min", bmin);
  plot->add_option("--beta-max", bmax);
  plot->add_option("--alpha-max", amax);
  plot->add_option("--width", pw);
  plot->add_option("--height", ph);
  plot->add_option("--marker", plot_markers, "beta,alpha_sq,label (repeatable)");
  plot->add_option("--out", plot_out, "write SVG here instead of stdout");
  plot->callback([&] {
    action = [&](const Config&) {
      std::vector<WallCircle> walls;
      if (!plot_walls.empty()) {
        Json j = json_arg(plot_walls);
        if (!j.is_array()) throw ParseError("--walls must be a JSON array");
        for (const auto& w : j) walls.push_back(wall_from_json(w));
      } else {
        const ChernCharacter v = v_or_default(plot_v);
        std::vector<ChernCharacter> ws;
        if (plot_w.empty()) {
          ws = default_candidates();
        } else {
          for (const auto& s : plot_w) ws.push_back(class_from_json(json_arg(s)));
        }
        for (const auto& w : ws) walls.push_back(tilt_wall(v, w));
      }
      PlotWindow win{parse_rational(bmin), parse_rational(bmax), parse_rational(amax), pw, ph};
      std::vector<Marker> markers;
      for (const auto& m : plot_markers) {
        auto parts = split(m, ',');
        if (parts.size() < 2) throw ParseError("--marker needs beta,alpha_sq[,label]");
        std::string label;
        for (std::size_t i = 2; i < parts.size(); ++i) label += (i > 2 ? "," : "") + parts[i];
        markers.push_back({parse_rational(parts[0]), parse_rational(parts[1]), label});
      }
      const SvgDocument doc = render_walls_svg(walls, win, markers);
      if (doc.empty_window) err << "warning: no wall meets the plot window; drawing axes only\n";
      if (plot_out.empty()) {
        out << doc.text;
      } else {
        std::ofstream f(plot_out, std::ios::binary);
        if (!f) throw ParseError("cannot write '" + plot_out + "'");
        f << doc.text;
      }
      return kOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Config cfg = config_path.empty() ? config_from_env() : load_config_file(config_path);
    return action ? action(cfg) : kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // Domain-level rejections of well-formed input (degenerate candidates, bad shapes, malformed grids).
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace stabwalls
