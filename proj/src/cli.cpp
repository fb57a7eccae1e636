#include "geonet/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "geonet/combinatorics.hpp"
#include "geonet/errors.hpp"
#include "geonet/network_io.hpp"
#include "geonet/render.hpp"
#include "geonet/replacement.hpp"
#include "geonet/solver.hpp"
#include "geonet/stationarity.hpp"
#include "geonet/sweep.hpp"

namespace geonet {

using nlohmann::json;

namespace {

json vec2_json(const Eigen::Vector2d& v) { return json::array({v.x(), v.y()}); }

json pairs_json(const std::vector<EdgeIndexPair>& pairs) {
  json a = json::array();
  for (const auto& [i, j] : pairs) a.push_back({i, j});
  return a;
}

json integer_vector_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(integer_to_json(z));
  return a;
}

json problem_json(const ReplacementProblem& p) {
  json positions = json::array();
  for (std::size_t k = 0; k < p.positions.size(); ++k) {
    json entry{{"angle", p.positions[k].angle()}, {"m", p.exterior_mults[k]}};
    if (p.positions[k].is_exact()) {
      const auto& e = p.positions[k].exact();
      entry["tan_half"] = e.at_pi() ? json("inf") : surd_to_json(*e.tan_half);
    } else {
      entry["tan_half"] = nullptr;
    }
    positions.push_back(entry);
  }
  return {{"positions", positions}};
}

std::string outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found:
      return "found";
    case SearchOutcome::none_any_bound:
      return "none-for-any-bound";
    case SearchOutcome::none_within_bound:
      return "none-within-bound";
    case SearchOutcome::undecidable:
      return "undecidable";
  }
  return "";
}

int run_validate(const std::string& path, const std::string& mode_name, double tol,
                 std::ostream& out, std::ostream& err) {
  const Network net = read_network(path);
  Mode mode = net.all_exact() ? Mode::exact : Mode::floating;
  if (mode_name == "exact") mode = Mode::exact;
  if (mode_name == "float") mode = Mode::floating;
  const auto report = check_admissible(net, mode, tol);
  const auto inv = invariant_report(net);
  json violations = json::array();
  for (const auto& f : report.violations) violations.push_back({{"tag", f.tag}, {"detail", f.detail}});
  json invariants{{"exterior_balance", vec2_json(inv.exterior_balance)},
                  {"mass_gap", inv.mass_gap},
                  {"exterior_parity", inv.exterior_parity == Parity::even ? "even" : "odd"}};
  if (inv.balance_vanishes) invariants["balance_vanishes_exactly"] = *inv.balance_vanishes;
  if (inv.mass_gap_vanishes) invariants["mass_gap_vanishes_exactly"] = *inv.mass_gap_vanishes;
  json doc{{"admissible", report.admissible()},
           {"stationary", report.stationary},
           {"mode", mode == Mode::exact ? "exact" : "float"},
           {"max_residual", report.max_residual},
           {"crossings", pairs_json(report.crossings)},
           {"violations", violations},
           {"invariants", invariants}};
  if (!report.admissible()) {
    err << "network is not admissible\n" << doc.dump(2) << '\n';
    return kExitFailure;
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int run_enumerate(std::size_t n, bool allow_adjacent, bool max_only, std::ostream& out) {
  auto emit = [&](const ChordSet& s) {
    out << json{{"n", n}, {"chords", pairs_json(s.chords())}}.dump() << '\n';
  };
  if (max_only) {
    for (const auto& s : maximal_chord_sets(n, allow_adjacent)) emit(s);
  } else {
    for_each_chord_set(n, allow_adjacent, [&](const ChordSet& s) {
      emit(s);
      return true;
    });
  }
  return kExitOk;
}

int run_solve(const std::string& path, bool fix_exterior, long bound, std::ostream& out) {
  const Network net = read_network(path);
  std::vector<CirclePoint> positions;
  std::vector<Rational> exterior;
  for (const auto& v : net.vertices()) {
    positions.push_back(v.position);
    exterior.emplace_back(v.exterior_mult);
  }
  std::vector<EdgeIndexPair> edges;
  for (const auto& e : net.edges()) edges.emplace_back(e.i, e.j);
  const auto system =
      build_system(positions, edges, fix_exterior ? std::optional(exterior) : std::nullopt);
  const auto result = solve(system);
  json kernel = json::array();
  for (const auto& k : result.kernel_basis) kernel.push_back(integer_vector_json(k));
  json particular = nullptr;
  if (result.particular) {
    particular = json::array();
    for (const auto& q : *result.particular) particular.push_back(rational_to_json(q));
  }
  json solutions = json::array();
  for (const auto& s : positive_integer_solutions(result, bound)) {
    solutions.push_back(integer_vector_json(s));
  }
  out << json{{"unknowns", system.unknown_count()},
              {"rows", system.matrix.rows()},
              {"rank", result.rank},
              {"kernel", kernel},
              {"particular", particular},
              {"bound", bound},
              {"solutions", solutions}}
             .dump(2)
      << '\n';
  return kExitOk;
}

int run_replace(const std::string& path, std::size_t vertex, long bound, std::ostream& out) {
  const Network net = read_network(path);
  const auto problem = replacement_problem(net, vertex);
  const auto search = search_replacements(problem, bound, 1);
  json doc{{"problem", problem_json(problem)},
           {"bound", bound},
           {"outcome", outcome_name(search.outcome)},
           {"replacement", nullptr}};
  if (!search.replacements.empty()) doc["replacement"] = network_to_json(search.replacements.front());
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int run_audit(const std::string& path, int depth, long bound, std::ostream& out, std::ostream& err) {
  const Network net = read_network(path);
  const auto verdict = good_network_audit(net, depth, bound);
  json doc{{"status", to_string(verdict.status)},
           {"depth", verdict.depth},
           {"bound", bound},
           {"bound_qualified", verdict.bound_qualified},
           {"detail", verdict.detail}};
  if (verdict.witness) {
    doc["witness"] = problem_json(*verdict.witness);
    doc["failed_vertex"] = verdict.failed_vertex;
  }
  json chain = json::array();
  for (const auto& n : verdict.chain) chain.push_back(network_to_json(n));
  doc["chain"] = chain;
  if (verdict.status == AuditStatus::refuted) {
    err << "refuted within bound M = " << bound << ": " << verdict.detail << '\n';
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int run_counting(std::size_t n, std::ostream& out) {
  const auto audit = audit_counting_argument(n);
  json survivors = json::array();
  for (const auto& s : audit.survivors) survivors.push_back(pairs_json(s.chords()));
  json deferred = json::array();
  for (const auto& s : audit.deferred) deferred.push_back(pairs_json(s.chords()));
  out << json{{"n", n},
              {"bounds", {{"f", audit.bounds.f}, {"F", audit.bounds.F}, {"F1", audit.bounds.F1}}},
              {"structures", audit.structures},
              {"rejected_isolated", audit.rejected_isolated},
              {"rejected_degree_one", audit.rejected_degree_one},
              {"rejected_forbidden_degree", audit.rejected_forbidden_degree},
              {"all_within_F", audit.all_within_F},
              {"all_degree_one_within_F1", audit.all_degree_one_within_F1},
              {"survivors", survivors},
              {"deferred", deferred},
              {"witnesses", audit.witnesses}}
             .dump(2)
      << '\n';
  return kExitOk;
}

int run_certify(std::ostream& out) {
  const auto verdict = certify_no_good_n3();
  out << json{{"status", to_string(verdict.status)},
              {"depth", verdict.depth},
              {"expression", verdict.witness_expr ? verdict.witness_expr->str() : ""},
              {"witness", verdict.detail}}
             .dump(2)
      << '\n';
  return verdict.status == AuditStatus::refuted ? kExitOk : kExitFailure;
}

int run_sweep(double c, double radius, std::size_t samples, bool flow, std::size_t points,
              const std::string& csv_path, std::ostream& out) {
  const SphereConfig cfg{radius, c};
  cfg.validate();
  const auto sweep = latitude_sweepout(samples);
  const auto est = minmax_estimate(sweep, cfg);
  json doc{{"c", c},
           {"radius", radius},
           {"samples", samples},
           {"value", est.value},
           {"argmax_phi", est.argmax_phi},
           {"note", "latitude family: an upper bound for the min-max value"}};
  if (flow) {
    FlowOptions options;
    const auto result = flow_to_cmc(latitude_curve(kPi / 2, points), cfg, options);
    json pts = json::array();
    for (const auto& p : result.curve.points) pts.push_back({p.x(), p.y(), p.z()});
    doc["flow_curve"] = {{"iterations", result.iterations},
                         {"max_deviation", result.max_deviation},
                         {"length", radius * curve_length(result.curve)},
                         {"points", pts}};
  }
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw Error("cannot write " + csv_path);
    csv << sweep_profile_csv(sweep, cfg);
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stationary geodesic networks on the unit circle", "geonet"};
  app.require_subcommand(1, 1);

  std::string network, mode = "auto", csv_path;
  double tol = kDefaultTolerance, c = 0.0, radius = 1.0, stroke = 1.5;
  std::size_t n = 0, vertex = 0, samples = 1001, points = 256, counting = 0;
  long bound = 20;
  int depth = 4, canvas = 512;
  bool allow_adjacent = false, max_only = false, fix_exterior = false, flow = false,
       no_labels = false;

  auto* validate = app.add_subcommand("validate", "Check stationarity and admissibility");
  validate->add_option("--network", network, "Network JSON file")->required();
  validate->add_option("--mode", mode, "exact, float or auto")
      ->check(CLI::IsMember({"auto", "exact", "float"}));
  validate->add_option("--tol", tol, "Float tolerance per unit weight");

  auto* enumerate = app.add_subcommand("enumerate", "List non-crossing chord sets as JSON lines");
  enumerate->add_option("--n", n, "Number of points")->required()->check(CLI::Range(1, 12));
  enumerate->add_flag("--allow-adjacent", allow_adjacent, "Allow chords between neighbours");
  enumerate->add_flag("--max-only", max_only, "Only maximal sets");

  auto* solve_cmd = app.add_subcommand("solve", "Solve the stationarity system exactly");
  solve_cmd->add_option("--network", network, "Network JSON file")->required();
  solve_cmd->add_flag("--fix-exterior", fix_exterior, "Treat exterior weights as data");
  solve_cmd->add_option("--bound", bound, "Largest weight searched")->check(CLI::Range(1L, 1000L));

  auto* replace = app.add_subcommand("replace", "Search a replacement at one vertex");
  replace->add_option("--network", network, "Network JSON file")->required();
  replace->add_option("--vertex", vertex, "Vertex index")->required();
  replace->add_option("--bound", bound, "Largest weight searched")->check(CLI::Range(1L, 1000L));

  auto* audit = app.add_subcommand("audit", "Iterated replacement or counting audit");
  auto* audit_net = audit->add_option("--network", network, "Network JSON file");
  auto* audit_count = audit->add_option("--counting", counting, "Run the counting audit on N points")
                          ->check(CLI::Range(3, 12));
  audit_net->excludes(audit_count);
  audit->add_option("--depth", depth, "Replacement depth")->check(CLI::Range(0, 4));
  audit->add_option("--bound", bound, "Largest weight searched")->check(CLI::Range(1L, 50L));

  auto* certify = app.add_subcommand("certify-n3", "Symbolic refutation of good triangles");

  auto* sweep = app.add_subcommand("sweep", "Latitude min-max of the c-weighted length");
  sweep->add_option("--c", c, "Prescribed geodesic curvature")->required()->check(CLI::NonNegativeNumber);
  sweep->add_option("--radius", radius, "Sphere radius")->check(CLI::PositiveNumber);
  sweep->add_option("--samples", samples, "Sweepout samples")->check(CLI::Range(3, 10000000));
  sweep->add_flag("--flow", flow, "Also flow the equator to constant curvature");
  sweep->add_option("--points", points, "Curve points for --flow")->check(CLI::Range(32, 100000));
  sweep->add_option("--emit-csv", csv_path, "Write the (t, L^c) profile to this file");

  auto* render = app.add_subcommand("render", "Draw a network as SVG");
  render->add_option("--network", network, "Network JSON file")->required();
  render->add_option("--canvas", canvas, "Canvas size in px")->check(CLI::Range(64, 1 << 16));
  render->add_option("--stroke", stroke, "Stroke width per unit weight")->check(CLI::PositiveNumber);
  render->add_flag("--no-labels", no_labels, "Omit vertex labels");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (audit->parsed() && network.empty() && counting == 0) {
      throw CLI::RequiredError("audit needs --network or --counting");
    }
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (validate->parsed()) {
      code = run_validate(network, mode, tol, buffer, err);
    } else if (enumerate->parsed()) {
      code = run_enumerate(n, allow_adjacent, max_only, buffer);
    } else if (solve_cmd->parsed()) {
      code = run_solve(network, fix_exterior, bound, buffer);
    } else if (replace->parsed()) {
      code = run_replace(network, vertex, bound, buffer);
    } else if (audit->parsed()) {
      code = counting > 0 ? run_counting(counting, buffer) : run_audit(network, depth, bound, buffer, err);
    } else if (certify->parsed()) {
      code = run_certify(buffer);
    } else if (sweep->parsed()) {
      code = run_sweep(c, radius, samples, flow, points, csv_path, buffer);
    } else if (render->parsed()) {
      RenderStyle style;
      style.canvas = canvas;
      style.stroke_per_mult = stroke;
      style.labels = !no_labels;
      buffer << render_svg(read_network(network), style);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what();
    if (e.line() > 0) err << " at line " << e.line() << ", column " << e.column();
    err << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  if (code == kExitOk) out << buffer.str();
  return code;
}

}  // namespace geonet
