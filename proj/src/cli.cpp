#include "mcf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "mcf/arithmetic.hpp"
#include "mcf/combinatorics.hpp"
#include "mcf/conjugacy.hpp"
#include "mcf/ergodic.hpp"
#include "mcf/verify.hpp"

namespace mcf::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  int n = 0;
  std::string point;
  std::string word;
  double tol = kDefaultTolerance;
  std::size_t depth = 0;
  std::size_t steps = 64;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::string format;
  bool inverse = false;
  std::string map = "M";
  std::string side = "farey";
  std::string suite = "all";
};

json point_json(const RatPoint& p) { return to_string(p); }

json coords_json(const RatPoint& p) {
  json a = json::array();
  for (const auto& x : p.coords) a.push_back(to_string(x));
  return a;
}

json doubles(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(x);
  return a;
}

bool is_decimal(const std::string& s) { return s.find_first_of(".eE") != std::string::npos; }

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(ErrorKind::InvalidInput, "bad coordinate '" + item + "'");
    v.push_back(x);
  }
  if (v.empty()) throw Error(ErrorKind::InvalidInput, "empty point");
  return v;
}

void check_dim(const Options& o, std::size_t dim) {
  if (o.n != 0 && static_cast<std::size_t>(o.n) != dim)
    throw Error(ErrorKind::InvalidDimension, "--n " + std::to_string(o.n) + " does not match the point dimension " +
                                                 std::to_string(dim));
}

void require_n(const Options& o) {
  if (o.n < 1) throw Error(ErrorKind::InvalidInput, "--n must be at least 1");
}

json terminal_json(const Terminal& t) {
  json j;
  j["kind"] = to_string(t.kind);
  switch (t.kind) {
    case Terminal::Kind::ReachedV1: j["step"] = t.step; break;
    case Terminal::Kind::CycleDetected:
      j["start"] = t.start;
      j["period"] = t.period;
      break;
    case Terminal::Kind::BudgetExhausted: j["step"] = t.step; break;
  }
  return j;
}

json cmd_eval(const Options& o) {
  PhiResult r;
  std::string mode = "exact";
  if (is_decimal(o.point)) {
    const auto x = parse_doubles(o.point);
    check_dim(o, x.size());
    r = o.inverse ? phi_inv_float(x, o.tol) : phi_float(x, o.tol);
    mode = "float";
  } else {
    const RatPoint p = parse_point(o.point);
    check_dim(o, p.dim());
    r = o.inverse ? phi_inv(p, o.tol) : phi(p, o.tol);
  }
  json j;
  j["value"] = point_json(r.value);
  j["error_bound"] = r.error_bound;
  j["exact"] = r.exact;
  j["depth"] = r.depth;
  j["word"] = r.word.str();
  j["value_float"] = doubles(r.value.to_double());
  j["inverse"] = o.inverse;
  j["mode"] = mode;
  j["tol"] = o.tol;
  return j;
}

json cmd_expand(const Options& o, bool with_points) {
  const MapKind map = parse_map_kind(o.map);
  const RatPoint p = parse_point(o.point);
  check_dim(o, p.dim());
  const std::size_t budget = o.depth == 0 ? kDefaultOrbitBudget : o.depth;
  const OrbitRecord rec = itinerary(map, p, o.steps, budget);
  json j;
  j["map"] = to_string(map);
  j["point"] = point_json(p);
  j["digits"] = rec.digits.str();
  j["terminal"] = terminal_json(rec.terminal);
  if (with_points) {
    json pts = json::array();
    for (const auto& q : rec.points) pts.push_back(point_json(q));
    j["points"] = std::move(pts);
  }
  return j;
}

json cmd_partition(const Options& o) {
  require_n(o);
  if (o.depth > 16) throw Error(ErrorKind::InvalidInput, "--depth above 16 is not listed");
  if (o.side != "farey" && o.side != "tent") throw Error(ErrorKind::InvalidInput, "--side must be farey or tent");
  json cells = json::array();
  Rat total = 0;
  for (unsigned long long b = 0; b < (1ULL << o.depth); ++b) {
    const Word w = Word::from_bits(b, o.depth);
    const RatSimplex s = o.side == "farey" ? to_rat_simplex(farey_cylinder(o.n, w)) : tent_cylinder(o.n, w);
    const Rat mu = simplex_lebesgue(s);
    total += mu;
    json verts = json::array();
    for (const auto& v : s.vertices()) verts.push_back(coords_json(v));
    cells.push_back(json{{"word", w.str()}, {"side", o.side}, {"vertices", verts}, {"measure", to_string(mu)}, {"diameter", diameter(s)}});
  }
  json j;
  j["n"] = o.n;
  j["side"] = o.side;
  j["depth"] = o.depth;
  j["total_measure"] = to_string(total);
  j["cylinders"] = std::move(cells);
  return j;
}

json cmd_periodic(const Options& o) {
  require_n(o);
  const MapKind map = parse_map_kind(o.map);
  const Word w = Word::parse(o.word);
  const PeriodicPointInfo info = map == MapKind::Monkemeyer ? monkemeyer_periodic_point(w, o.n)
                                                             : tent_periodic_point(w, o.n);
  json j;
  j["map"] = to_string(map);
  j["word"] = info.word.str();
  j["eigenvalue_minpoly"] = to_string(info.minpoly);
  json coeffs = json::array();
  for (const auto& c : info.minpoly) coeffs.push_back(to_string(c));
  j["minpoly_coefficients"] = std::move(coeffs);
  j["degree"] = info.degree;
  j["eigenvalue"] = info.eigenvalue;
  j["point"] = doubles(info.point);
  if (info.exact_point) j["exact_point"] = point_json(*info.exact_point);
  j["residual"] = info.residual;
  return j;
}

json cmd_entropy(const Options& o) {
  const EntropyReport r = entropy(o.n);
  json j;
  j["n"] = r.n;
  j["G_n"] = r.G_n;
  j["G_n_minus_1"] = r.G_n_minus_1;
  j["h_mu"] = r.h_mu;
  j["log2_gap"] = r.log2_gap;
  j["quadrature_error_estimate"] = r.quadrature_error_estimate;
  return j;
}

void cmd_singularity(const Options& o, std::ostream& out) {
  require_n(o);
  const std::size_t depth = o.depth == 0 ? 200 : o.depth;
  const auto samples = singularity_samples(o.n, depth, o.samples, o.seed);
  double mean = 0;
  for (const auto& s : samples) mean += s.per_step;
  if (!samples.empty()) mean /= static_cast<double>(samples.size());
  const double target = o.n >= 2 ? -entropy(o.n).log2_gap : std::nan("");
  const std::string format = o.format.empty() ? "csv" : o.format;
  if (format == "json") {
    json rows = json::array();
    for (const auto& s : samples)
      rows.push_back(json{{"sample", s.index},
                          {"log_lambda_gamma", s.log_lambda_gamma},
                          {"log_lambda_delta", s.log_lambda_delta},
                          {"per_step", s.per_step}});
    json j;
    j["n"] = o.n;
    j["depth"] = depth;
    j["seed"] = o.seed;
    j["mean_per_step"] = mean;
    j["limit"] = o.n >= 2 ? json(target) : json(nullptr);
    j["samples"] = std::move(rows);
    out << j.dump(2) << '\n';
    return;
  }
  if (format != "csv") throw Error(ErrorKind::InvalidInput, "--format must be csv or json");
  out << "sample,depth,log_lambda_gamma,log_lambda_delta,per_step\n";
  out.precision(12);
  for (const auto& s : samples)
    out << s.index << ',' << depth << ',' << s.log_lambda_gamma << ',' << s.log_lambda_delta << ',' << s.per_step
        << '\n';
  out << "mean," << depth << ",,," << mean << '\n';
}

json cmd_scramble(const Options& o) {
  require_n(o);
  json j;
  j["n"] = o.n;
  if (!o.word.empty()) {
    const Word w = Word::parse(o.word);
    j["word"] = w.str();
    j["scrambling"] = is_scrambling(word_pattern(o.n, w));
    return j;
  }
  const std::size_t s = scrambling_bound(o.n);
  const auto witness = non_scrambling_word(o.n, s);
  j["length"] = s;
  j["all_products_scrambling"] = !witness.has_value();
  j["counterexample"] = witness ? json(witness->str()) : json(nullptr);
  j["min_scrambling_length"] = min_scrambling_length(o.n);
  return j;
}

json cmd_game(const Options& o) {
  require_n(o);
  json pairs = json::array();
  for (int p = 1; p <= o.n + 1; ++p)
    for (int q = p + 1; q <= o.n + 1; ++q) {
      const Chi c = chi(o.n, p, q);
      pairs.push_back(json{{"pair", {p, q}}, {"leading", leading_vertex(o.n, p, q)}, {"gap", c.gap}, {"defect", c.defect}});
    }
  json j;
  j["n"] = o.n;
  j["value"] = lovers_game_value(o.n);
  j["bound"] = scrambling_bound(o.n);
  j["strategy_descends"] = strategy_descends(o.n);
  j["chi"] = std::move(pairs);
  return j;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto results = run_suite(o.suite);
  bool ok = true;
  json checks = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    checks.push_back(json{{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  json j;
  j["suite"] = o.suite;
  j["passed"] = ok;
  j["checks"] = std::move(checks);
  out << j.dump(2) << '\n';
  return ok ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monkemeyer map, tent map and the n-dimensional Minkowski function"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--n", o.n, "dimension")->check(CLI::Range(1, 64));
    if (required) opt->required();
  };
  auto add_point = [&](CLI::App* c) { c->add_option("--point", o.point, "p/q,p/q,...")->required(); };

  auto* eval = app.add_subcommand("eval", "evaluate Phi (or Phi^-1 with --inverse)");
  add_n(eval, false);
  add_point(eval);
  eval->add_option("--tol", o.tol, "cylinder diameter tolerance");
  eval->add_flag("--inverse", o.inverse);

  auto* expand = app.add_subcommand("expand", "itinerary digits of a point");
  auto* orbit = app.add_subcommand("orbit", "itinerary with all orbit points");
  for (auto* c : {expand, orbit}) {
    add_n(c, false);
    add_point(c);
    c->add_option("--map", o.map, "M or T");
    c->add_option("--steps", o.steps, "number of steps");
    c->add_option("--depth", o.depth, "step budget");
  }

  auto* partition = app.add_subcommand("partition", "cylinders of the time-t partition");
  add_n(partition, true);
  partition->add_option("--depth", o.depth, "t")->required();
  partition->add_option("--side", o.side, "farey or tent");

  auto* periodic = app.add_subcommand("periodic", "periodic point with itinerary word^infinity");
  add_n(periodic, true);
  periodic->add_option("--word", o.word, "period word")->required();
  periodic->add_option("--map", o.map, "M or T");

  auto* ent = app.add_subcommand("entropy", "entropy of M");
  add_n(ent, true);

  auto* sing = app.add_subcommand("singularity", "cylinder measure contrast along random itineraries");
  add_n(sing, true);
  sing->add_option("--depth", o.depth, "itinerary length (default 200)");
  sing->add_option("--samples", o.samples, "number of random points");
  sing->add_option("--seed", o.seed, "64-bit seed");
  sing->add_option("--format", o.format, "csv or json");

  auto* scramble = app.add_subcommand("scramble", "scrambling check for B-products");
  add_n(scramble, true);
  scramble->add_option("--word", o.word, "check a single product");

  auto* game = app.add_subcommand("game", "pursuit game on the incidence graph");
  add_n(game, true);

  auto* verify = app.add_subcommand("verify", "run invariant self-checks");
  verify->add_option("--suite", o.suite, "suite name or all");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    json j;
    if (eval->parsed()) j = cmd_eval(o);
    else if (expand->parsed()) j = cmd_expand(o, false);
    else if (orbit->parsed()) j = cmd_expand(o, true);
    else if (partition->parsed()) j = cmd_partition(o);
    else if (periodic->parsed()) j = cmd_periodic(o);
    else if (ent->parsed()) j = cmd_entropy(o);
    else if (scramble->parsed()) j = cmd_scramble(o);
    else if (game->parsed()) j = cmd_game(o);
    else if (sing->parsed()) {
      cmd_singularity(o, out);
      return kExitOk;
    } else if (verify->parsed()) {
      return cmd_verify(o, out);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidInput ? kExitUsage : kExitDomain;
  }
}

}  // namespace mcf::cli
