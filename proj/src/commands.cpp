#include "commands.hpp"

#include <algorithm>
#include <sstream>

namespace arithlat {

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{"a",    "b",    "n",    "height", "max-iter",   "spec",      "suite",
                                             "seed", "kind", "r",    "s",      "m",          "l",         "unit",
                                             "word-length", "max-degree"};
  return keys;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  const auto& keys = config_keys();
  if (std::find(keys.begin(), keys.end(), key) == keys.end()) fail(ErrorCode::InvalidInput, "unknown key '" + key + "'");
  values[key] = value;
}

std::string RunConfig::text(const std::string& key, const std::string& fallback) const {
  const auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

long RunConfig::integer(const std::string& key, long fallback) const {
  const auto it = values.find(key);
  if (it == values.end()) return fallback;
  try {
    std::size_t used = 0;
    const long v = std::stol(it->second, &used);
    if (used == it->second.size()) return v;
  } catch (const std::logic_error&) {
  }
  fail(ErrorCode::InvalidInput, key + " must be an integer, got '" + it->second + "'");
}

Rational RunConfig::rational(const std::string& key, const Rational& fallback) const {
  const auto it = values.find(key);
  return it == values.end() ? fallback : parse_rational(it->second);
}

std::uint64_t RunConfig::seed() const {
  const auto it = values.find("seed");
  if (it == values.end()) return kDefaultSeed;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(it->second, &used);
    if (used == it->second.size() && it->second.find('-') == std::string::npos) return v;
  } catch (const std::logic_error&) {
  }
  fail(ErrorCode::InvalidInput, "seed must be a non-negative integer");
}

void load_config_text(RunConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++number;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorCode::InvalidInput, "config line " + std::to_string(number) + ": missing '='");
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

namespace {

QuaternionAlgebra algebra_of(const RunConfig& cfg) { return {cfg.rational("a", 2), cfg.rational("b", 3)}; }

int positive(const RunConfig& cfg, const std::string& key, long fallback, long lo = 0) {
  const long v = cfg.integer(key, fallback);
  if (v < lo || v > 1'000'000) fail(ErrorCode::InvalidInput, key + " out of range");
  return static_cast<int>(v);
}

BuildOptions build_options(const RunConfig& cfg) {
  BuildOptions opts;
  opts.height = positive(cfg, "height", 3);
  opts.word_length = positive(cfg, "word-length", 1, 1);
  opts.max_iter = positive(cfg, "max-iter", kDefaultMaxIter, 1);
  opts.seed = cfg.seed();
  return opts;
}

UnitSet units_of(const RunConfig& cfg) {
  const BuildOptions opts = build_options(cfg);
  UnitSet units = enumerate_norm_one(QuaternionOrder(algebra_of(cfg)), opts.height);
  if (opts.word_length > 1) units = sample_group(units, opts.word_length);
  return units;
}

QuaternionElem parse_unit(const QuaternionAlgebra& alg, const std::string& text) {
  std::array<Rational, 4> c;
  std::stringstream in(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(in, item, ',')) {
    if (k == 4) fail(ErrorCode::InvalidInput, "unit needs four coordinates");
    c[k++] = parse_rational(item);
  }
  if (k != 4) fail(ErrorCode::InvalidInput, "unit needs four coordinates");
  return {alg, c};
}

Json check_json(const std::string& name, bool pass, const std::string& detail) {
  return {{"name", name}, {"pass", pass}, {"detail", detail}};
}

// Runs f and reports whether it failed with exactly `expected`.
template <class F>
std::pair<bool, std::string> refuses(F&& f, ErrorCode expected) {
  try {
    f();
  } catch (const Error& e) {
    return {e.code() == expected, e.what()};
  }
  return {false, "no refusal"};
}

CommandResult finish_suite(const std::string& suite, Json checks, Json extra = Json::object()) {
  bool pass = !checks.empty();
  for (const auto& c : checks) pass = pass && c.at("pass").get<bool>();
  Json doc = {{"suite", suite}, {"pass", pass}, {"checks", std::move(checks)}};
  for (auto& [k, v] : extra.items()) doc[k] = v;
  return {std::move(doc), pass};
}

CommandResult cmd_algebra(const RunConfig& cfg) {
  const QuaternionAlgebra alg = algebra_of(cfg);
  Json doc = to_json(ramified_places(alg));
  doc["algebra"] = {{"a", to_string(cfg.rational("a", 2))}, {"b", to_string(cfg.rational("b", 3))}};
  doc["presented_as"] = to_json(alg);
  doc["swapped"] = alg.swapped();
  doc["splitting_field_d"] = alg.both_squares() ? Json(nullptr) : Json(alg.splitting_field().d());
  return {std::move(doc), true};
}

CommandResult cmd_units(const RunConfig& cfg) {
  Json doc = to_json(units_of(cfg));
  doc["word_length"] = positive(cfg, "word-length", 1, 1);
  return {std::move(doc), true};
}

CommandResult cmd_rep(const RunConfig& cfg) {
  const std::string kind = cfg.text("kind", "cg");
  if (kind == "cg") {
    const int r = positive(cfg, "r", 1), s = positive(cfg, "s", 1);
    CGReport found = decompose(tensor_builder(sym_builder(r), sym_builder(s)));
    found.r = r;
    found.s = s;
    const CGReport expected = cg_multiplicities(r, s);
    const bool match = found.multiplicities == expected.multiplicities;
    Json doc = to_json(found);
    doc["expected"] = to_json(expected)["multiplicities"];
    doc["match"] = match;
    return {std::move(doc), match};
  }
  const QuaternionAlgebra alg = algebra_of(cfg);
  if (!cfg.has("unit")) fail(ErrorCode::InvalidInput, "--unit x0,x1,x2,x3 is required for kind " + kind);
  const QuaternionElem u = parse_unit(alg, cfg.text("unit", ""));
  if (kind == "adjoint") {
    const auto img = adjoint_on_trace_zero(u);
    return {{{"kind", kind}, {"unit", unit_key(u)}, {"provenance", img.provenance.describe()},
             {"matrix", rational_matrix(img.matrix)}},
            true};
  }
  if (kind == "sym") {
    if (reduced_norm(u) != 1) fail(ErrorCode::NotNormOne, "unit " + unit_key(u) + " has Nrd != 1");
    const int m = positive(cfg, "m", 2);
    const auto img = sym_power(psi_matrix(u), m);
    const std::int64_t d = alg.both_squares() ? 0 : alg.splitting_field().d();
    return {{{"kind", kind}, {"unit", unit_key(u)}, {"m", m}, {"field_d", d},
             {"provenance", img.provenance.describe()}, {"matrix", quad_matrix(img.matrix, d)}},
            true};
  }
  fail(ErrorCode::InvalidInput, "unknown rep kind '" + kind + "' (cg, sym, adjoint)");
}

CommandResult cmd_descend(const RunConfig& cfg) {
  const UnitSet units = units_of(cfg);
  const std::string kind = cfg.text("kind", cfg.has("l") ? "pair" : "sym");
  if (kind == "certificate") {
    const NonrationalityCertificate cert = nonrationality_certificate(units);
    return {to_json(cert), cert.pass};
  }
  if (kind == "pair") {
    Json doc = to_json(build_odd_pair_structure(positive(cfg, "l", 1, 1), units, cfg.seed()));
    return {std::move(doc), true};
  }
  if (kind == "sym") {
    Json doc = to_json(rationalize_sym_even(positive(cfg, "m", 2), units, cfg.seed()));
    return {std::move(doc), true};
  }
  fail(ErrorCode::InvalidInput, "unknown descend kind '" + kind + "' (sym, pair, certificate)");
}

LatticeData build_from(const RunConfig& cfg) {
  const std::string kind = cfg.text("kind", cfg.has("spec") ? "multiplicity" : "cocompact");
  if (kind == "split") return build_split_lattice(positive(cfg, "n", 3, 1));
  const Rational a = cfg.rational("a", 2), b = cfg.rational("b", 3);
  if (kind == "cocompact") return build_cocompact_lattice(a, b, positive(cfg, "n", 3, 1), build_options(cfg));
  if (kind == "multiplicity") {
    if (!cfg.has("spec")) fail(ErrorCode::InvalidInput, "--spec d:m,... is required");
    return build_multiplicity_lattice(parse_blocks(cfg.text("spec", "")), a, b, build_options(cfg));
  }
  fail(ErrorCode::InvalidInput, "unknown build kind '" + kind + "' (cocompact, split, multiplicity)");
}

CommandResult cmd_build(const RunConfig& cfg) { return {to_json(build_from(cfg)), true}; }

CommandResult suite_cg(const RunConfig& cfg) {
  const int top = positive(cfg, "max-degree", 5);
  Json checks = Json::array();
  for (int r = 0; r <= top; ++r)
    for (int s = 0; s <= top; ++s) {
      const CGReport found = decompose(tensor_builder(sym_builder(r), sym_builder(s)));
      const CGReport expected = cg_multiplicities(r, s);
      CGReport shown = found;
      shown.r = r;
      shown.s = s;
      checks.push_back(check_json("cg(" + std::to_string(r) + "," + std::to_string(s) + ")",
                                  found.multiplicities == expected.multiplicities,
                                  to_json(shown)["multiplicities"].dump()));
    }
  return finish_suite("cg", std::move(checks));
}

Json lattice_checks(const LatticeData& data) {
  Json checks = to_json(verify_lattice(data))["checks"];
  checks.push_back(check_json("saturation", true,
                              "stable after " + std::to_string(data.saturation_iterations) + " rounds"));
  return checks;
}

CommandResult suite_odd(const RunConfig& cfg) {
  RunConfig c = cfg;
  if (!c.has("kind")) c.set("kind", "cocompact");
  const LatticeData data = build_from(c);
  return finish_suite("odd", lattice_checks(data), {{"lattice", to_json(data)}});
}

CommandResult suite_even(const RunConfig& cfg) {
  const int n = positive(cfg, "n", 4, 1);
  if (n % 2 != 0) fail(ErrorCode::InvalidInput, "the even suite needs even n");
  const Rational a = cfg.rational("a", 2), b = cfg.rational("b", 3);
  const UnitSet units = units_of(cfg);
  const NonrationalityCertificate cert = nonrationality_certificate(units);
  Json checks = Json::array();
  checks.push_back(check_json("nonrationality_certificate", cert.pass, cert.conclusion));
  const auto build = refuses([&] { build_cocompact_lattice(a, b, n, build_options(cfg)); }, ErrorCode::EvenDimension);
  checks.push_back(check_json("cocompact_construction_refused", build.first, build.second));
  const auto sym = refuses([&] { rationalize_sym_even(n - 1, units, cfg.seed()); }, ErrorCode::OddDegree);
  checks.push_back(check_json("odd_degree_refused", sym.first, sym.second));
  return finish_suite("even", std::move(checks), {{"certificate", to_json(cert)}});
}

CommandResult suite_multiplicity(const RunConfig& cfg) {
  if (!cfg.has("spec")) fail(ErrorCode::InvalidInput, "--spec d:m,... is required");
  const std::vector<Block> blocks = parse_blocks(cfg.text("spec", ""));
  bool parity = true;
  for (const auto& b : blocks) parity = parity && (b.dimension % 2 == 1 || b.multiplicity % 2 == 0);
  if (parity) {
    RunConfig c = cfg;
    c.set("kind", "multiplicity");
    const LatticeData data = build_from(c);
    return finish_suite("multiplicity", lattice_checks(data), {{"lattice", to_json(data)}});
  }
  const Rational a = cfg.rational("a", 2), b = cfg.rational("b", 3);
  const NonrationalityCertificate cert = nonrationality_certificate(units_of(cfg));
  Json checks = Json::array();
  const auto refused = refuses([&] { build_multiplicity_lattice(blocks, a, b, build_options(cfg)); },
                               ErrorCode::OddMultiplicityOfEven);
  checks.push_back(check_json("odd_multiplicity_refused", refused.first, refused.second));
  checks.push_back(check_json("nonrationality_certificate", cert.pass, cert.conclusion));
  return finish_suite("multiplicity", std::move(checks), {{"certificate", to_json(cert)}});
}

CommandResult suite_godement(const RunConfig& cfg) {
  const UnitSet units = units_of(cfg);
  const bool division = is_division(units.order.algebra());
  const GodementReport rep = godement_report(units);
  Json checks = Json::array();
  if (division) {
    checks.push_back(check_json("no_nontrivial_unipotent_units", !rep.nontrivial_unipotent,
                                std::to_string(rep.checked) + " units checked"));
  } else {
    checks.push_back(check_json("split_algebra_units", true,
                                rep.nontrivial_unipotent ? "nontrivial unipotent unit found"
                                                         : "none found at this height (inconclusive)"));
  }
  const LatticeData split = build_split_lattice(2);
  bool t_flagged = false;
  for (const auto& l : split.godement.unipotent_labels) t_flagged = t_flagged || l == "T";
  checks.push_back(check_json("split_generator_T_unipotent", t_flagged, "SL_2(Z) generator T"));
  return finish_suite("godement", std::move(checks), {{"division", division}, {"report", to_json(rep)}});
}

CommandResult cmd_verify(const RunConfig& cfg) {
  const std::string suite = cfg.text("suite", "");
  if (suite == "cg") return suite_cg(cfg);
  if (suite == "odd") return suite_odd(cfg);
  if (suite == "even") return suite_even(cfg);
  if (suite == "multiplicity") return suite_multiplicity(cfg);
  if (suite == "godement") return suite_godement(cfg);
  fail(ErrorCode::InvalidInput, "unknown suite '" + suite + "' (odd, even, multiplicity, godement, cg)");
}

}  // namespace

CommandResult run_command(const std::string& noun, const RunConfig& cfg) {
  if (noun == "algebra") return cmd_algebra(cfg);
  if (noun == "units") return cmd_units(cfg);
  if (noun == "rep") return cmd_rep(cfg);
  if (noun == "descend") return cmd_descend(cfg);
  if (noun == "build") return cmd_build(cfg);
  if (noun == "verify") return cmd_verify(cfg);
  fail(ErrorCode::InvalidInput, "unknown command '" + noun + "'");
}

}  // namespace arithlat
