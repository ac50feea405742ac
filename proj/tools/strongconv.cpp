// strongconv: command-line front end for the strongconv library.

#include "strongconv/channels.hpp"
#include "strongconv/codesim.hpp"
#include "strongconv/converse.hpp"
#include "strongconv/entropy.hpp"
#include "strongconv/errors.hpp"
#include "strongconv/optimize.hpp"
#include "strongconv/random.hpp"
#include "strongconv/serialize.hpp"
#include "strongconv/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace sc = strongconv;
using sc::Json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kInvalid = 3, kBudget = 4 };

struct Globals {
  std::uint64_t seed = 1;
  int budget_dim = 256;
  std::string out;
  std::string format = "json";
};

struct ChannelArgs {
  std::string id = "depolarizing";
  int d = 2;
  double r = 0.5;
  std::vector<double> weights{0.25, 0.25, 0.25, 0.25};
  std::string file;
  int restarts = 32;
};

void add_channel_options(CLI::App* cmd, ChannelArgs& c) {
  cmd->add_option("--channel", c.id, "depolarizing | pauli | werner-holevo | identity | custom")->capture_default_str();
  cmd->add_option("--d", c.d, "dimension")->capture_default_str();
  cmd->add_option("--r", c.r, "depolarizing parameter")->capture_default_str();
  cmd->add_option("--weights", c.weights, "pauli weights p_I,p_X,p_Y,p_Z")->delimiter(',')->expected(4);
  cmd->add_option("--file", c.file, "Kraus JSON for --channel custom");
  cmd->add_option("--restarts", c.restarts, "multistart count")->capture_default_str();
}

sc::QuantumChannel build_channel(const ChannelArgs& c) {
  if (c.id == "depolarizing") return sc::depolarizing(c.d, c.r);
  if (c.id == "identity") return sc::identity_channel(c.d);
  if (c.id == "werner-holevo") return sc::werner_holevo(c.d);
  if (c.id == "pauli") {
    if (c.weights.size() != 4) throw sc::DomainError("pauli channel needs 4 weights");
    return sc::pauli_diagonal({c.weights[0], c.weights[1], c.weights[2], c.weights[3]});
  }
  if (c.id == "custom") {
    if (c.file.empty()) throw sc::ParseError("--channel custom requires --file");
    return sc::channel_from_json(sc::read_json_file(c.file));
  }
  throw sc::ParseError("unknown channel id '" + c.id + "'");
}

Json channel_echo(const ChannelArgs& c, const sc::QuantumChannel& ch) {
  Json j{{"id", c.id}, {"dim_in", ch.dim_in()}, {"dim_out", ch.dim_out()}};
  if (c.id == "depolarizing") j["r"] = c.r;
  if (c.id == "pauli") j["weights"] = c.weights;
  if (c.id == "custom") j["file"] = c.file;
  return j;
}

sc::OptimizerConfig optimizer_config(const Globals& g, const ChannelArgs& c) {
  sc::OptimizerConfig cfg;
  cfg.seed = g.seed;
  cfg.restarts = c.restarts;
  cfg.budget.max_dim = g.budget_dim;
  return cfg;
}

Json config_echo(const sc::OptimizerConfig& cfg) {
  return Json{{"seed", cfg.seed},           {"restarts", cfg.restarts}, {"multi_copy_restarts", cfg.multi_copy_restarts},
              {"max_iters", cfg.max_iters}, {"tolerance", cfg.tolerance}, {"budget_dim", cfg.budget.max_dim}};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double parse_number(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw sc::ParseError("bad number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw sc::ParseError("bad number '" + s + "'");
  }
}

int parse_int(const std::string& s) {
  const double v = parse_number(s);
  if (v != std::floor(v)) throw sc::ParseError("expected an integer, got '" + s + "'");
  return static_cast<int>(v);
}

// maxmixed:d, pure:d:k, bloch:x,y,z, or a path to a state JSON file.
sc::DensityMatrix parse_state(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  if (colon != std::string::npos && (kind == "maxmixed" || kind == "pure" || kind == "bloch")) {
    const auto args = split(spec.substr(colon + 1), kind == "bloch" ? ',' : ':');
    if (kind == "maxmixed") {
      if (args.size() != 1) throw sc::ParseError("expected maxmixed:d");
      const int d = parse_int(args[0]);
      if (d < 1) throw sc::ParseError("maxmixed dimension must be positive");
      return sc::DensityMatrix::maximally_mixed(d);
    }
    if (kind == "pure") {
      if (args.size() != 2) throw sc::ParseError("expected pure:d:k");
      const int d = parse_int(args[0]);
      const int k = parse_int(args[1]);
      if (d < 1 || k < 0 || k >= d) throw sc::ParseError("pure:d:k needs 0 <= k < d");
      return sc::DensityMatrix::basis(d, k);
    }
    if (args.size() != 3) throw sc::ParseError("expected bloch:x,y,z");
    const auto paulis = sc::pauli_matrices();
    sc::Matrix m = 0.5 * paulis[0];
    for (int i = 0; i < 3; ++i) m += 0.5 * parse_number(args[static_cast<std::size_t>(i)]) * paulis[i + 1];
    return sc::DensityMatrix(m);
  }
  return sc::state_from_json(sc::read_json_file(spec));
}

sc::Ensemble parse_ensemble(const std::string& path) {
  const Json j = sc::read_json_file(path);
  if (!j.is_object() || !j.contains("probs") || !j.contains("states")) {
    throw sc::ParseError("ensemble JSON needs \"probs\" and \"states\"");
  }
  if (!j.at("probs").is_array() || !j.at("states").is_array()) throw sc::ParseError("ensemble fields must be arrays");
  std::vector<double> probs;
  for (const auto& p : j.at("probs")) {
    if (!p.is_number()) throw sc::ParseError("probabilities must be numbers");
    probs.push_back(p.get<double>());
  }
  std::vector<sc::DensityMatrix> states;
  for (const auto& s : j.at("states")) states.push_back(sc::state_from_json(s));
  if (probs.size() != states.size()) throw sc::ParseError("probs and states differ in length");
  return sc::Ensemble(std::move(probs), std::move(states));
}

// ------------------------------------------------------------------ output

std::string csv_scalar(const Json& v) {
  if (v.is_number_float()) {
    std::ostringstream os;
    os << std::setprecision(6) << v.get<double>();
    return os.str();
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

bool is_scalar(const Json& v) {
  return v.is_primitive();
}

// CSV of the "rows" array when present, else of the top-level scalars.
std::string to_csv(const Json& j) {
  std::ostringstream os;
  if (j.contains("rows") && j.at("rows").is_array() && !j.at("rows").empty()) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.at("rows").front().items()) {
      if (is_scalar(v)) keys.push_back(k);
    }
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
    os << '\n';
    for (const auto& row : j.at("rows")) {
      for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_scalar(row.value(keys[i], Json()));
      os << '\n';
    }
    return os.str();
  }
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) {
    if (is_scalar(v)) keys.push_back(k);
  }
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
  os << '\n';
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_scalar(j.at(keys[i]));
  os << '\n';
  return os.str();
}

void emit_text(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw sc::ParseError("cannot write " + g.out);
  f << text;
}

void emit(const Globals& g, const Json& j) {
  emit_text(g, g.format == "csv" ? to_csv(j) : j.dump(2) + "\n");
}

// ------------------------------------------------------------------ commands

struct EntropyArgs {
  std::string state;
  bool rel = false;
  std::string rho;
  std::string sigma;
  std::string ensemble;
  double alpha = 1.0;
};

int cmd_entropy(const Globals& g, const EntropyArgs& a) {
  const sc::AlphaParam alpha(a.alpha);
  Json j{{"alpha", a.alpha}};
  if (a.rel) {
    if (a.rho.empty() || a.sigma.empty()) throw sc::ParseError("--rel needs --rho and --sigma");
    const auto rho = parse_state(a.rho);
    const auto sigma = parse_state(a.sigma);
    if (rho.dim() != sigma.dim()) throw sc::DimensionMismatch("rho and sigma differ in dimension");
    j["quantity"] = "alpha_relative_entropy";
    const double v = sc::alpha_relative_entropy(rho, sigma, alpha);
    j["value"] = std::isinf(v) ? Json("inf") : Json(v);
  } else if (!a.ensemble.empty()) {
    j["quantity"] = "chi_alpha";
    j["value"] = sc::chi_alpha(parse_ensemble(a.ensemble), alpha);
  } else {
    if (a.state.empty()) throw sc::ParseError("entropy needs --state, --rel or --ensemble");
    j["quantity"] = "renyi_entropy";
    j["value"] = sc::renyi_entropy(parse_state(a.state), alpha);
  }
  emit(g, j);
  return kOk;
}

int cmd_channel_info(const Globals& g, const ChannelArgs& c, bool with_kraus) {
  const auto ch = build_channel(c);
  Json j{{"quantity", "channel_info"},
         {"channel", channel_echo(c, ch)},
         {"label", ch.label()},
         {"kraus_count", ch.kraus().size()},
         {"additivity_alpha_max", sc::additivity_alpha_max(ch)}};
  try {
    const auto cert = sc::certify_named_channel(ch, 20, g.seed);
    j["group"] = cert.group;
    j["covariance_residual"] = cert.covariance_residual;
    j["irreducibility_residual"] = cert.irreducibility_residual;
    j["certified"] = cert.valid();
  } catch (const sc::NotCertified&) {
    j["certified"] = false;
  }
  if (with_kraus) j["kraus"] = sc::channel_to_json(ch)["kraus"];
  emit(g, j);
  return kOk;
}

int cmd_min_output(const Globals& g, const ChannelArgs& c, double alpha) {
  const auto ch = build_channel(c);
  const auto cfg = optimizer_config(g, c);
  const auto r = sc::min_output_renyi(ch, sc::AlphaParam(alpha), cfg);
  emit(g, Json{{"quantity", "min_output_renyi"},
               {"alpha", alpha},
               {"value", r.value},
               {"restarts_agreeing", r.restarts_agreeing},
               {"witness", sc::state_to_json(r.argmin_state)},
               {"channel", channel_echo(c, ch)},
               {"config_echo", config_echo(cfg)}});
  return kOk;
}

int cmd_capacity(const Globals& g, const ChannelArgs& c) {
  const auto ch = build_channel(c);
  const auto cfg = optimizer_config(g, c);
  const double cap = sc::capacity_covariant(ch, cfg, sc::certify_named_channel(ch, 20, g.seed));
  emit(g, Json{{"quantity", "capacity"}, {"value", cap}, {"channel", channel_echo(c, ch)}, {"config_echo", config_echo(cfg)}});
  return kOk;
}

struct ExponentArgs {
  std::vector<double> rates{1.0};
  double alpha_max = 0.0;
  int grid_points = 64;
  std::vector<int> ns{1, 2, 4, 8};
};

double resolve_alpha_max(const sc::QuantumChannel& ch, double requested) {
  return requested > 0.0 ? requested : sc::additivity_alpha_max(ch);
}

int cmd_exponent(const Globals& g, const ChannelArgs& c, const ExponentArgs& e) {
  const auto ch = build_channel(c);
  const auto cfg = optimizer_config(g, c);
  const auto cert = sc::certify_named_channel(ch, 20, g.seed);
  const auto grid = sc::default_alpha_grid(resolve_alpha_max(ch, e.alpha_max), e.grid_points);
  const auto curve = sc::exponent_curve(ch, e.rates, grid, cfg, cert, e.ns);
  if (g.format == "csv") {
    emit_text(g, curve.to_csv());
    return kOk;
  }
  Json j = curve.to_json();
  if (e.rates.size() == 1) {
    j["value"] = curve.exponent.front();
    j["alpha_star"] = curve.alpha_argmax.front();
  }
  j["alpha_max"] = grid.back();
  j["channel"] = channel_echo(c, ch);
  j["config_echo"] = config_echo(cfg);
  emit(g, j);
  return kOk;
}

int cmd_additivity(const Globals& g, const ChannelArgs& c, double alpha, int copies, int multi_restarts) {
  const auto ch = build_channel(c);
  auto cfg = optimizer_config(g, c);
  cfg.multi_copy_restarts = multi_restarts;
  const auto r = sc::additivity_check(ch, sc::AlphaParam(alpha), copies, cfg);
  emit(g, Json{{"quantity", "additivity"},
               {"alpha", alpha},
               {"copies", copies},
               {"single_copy", r.single_copy},
               {"multi_copy", r.multi_copy},
               {"gap", r.gap},
               {"subadditive", r.subadditive},
               {"additive", r.additive},
               {"claim", r.claim_in_range ? "additivity claimed" : "computed, no additivity claim"},
               {"pass", r.subadditive && (r.additive || !r.claim_in_range)},
               {"channel", channel_echo(c, ch)},
               {"config_echo", config_echo(cfg)}});
  return r.subadditive && (r.additive || !r.claim_in_range) ? kOk : kFailed;
}

struct SimulateArgs {
  std::vector<int> ns{1, 2, 3, 4};
  double rate = 1.0;
  int codebooks = 50;
  std::string generation = "entangled-random";
  double alpha_max = 0.0;
  int grid_points = 64;
};

int cmd_simulate(const Globals& g, const ChannelArgs& c, const SimulateArgs& s) {
  const auto ch = build_channel(c);
  const auto cfg = optimizer_config(g, c);
  const auto cert = sc::certify_named_channel(ch, 20, g.seed);
  const auto grid = sc::default_alpha_grid(resolve_alpha_max(ch, s.alpha_max), s.grid_points);
  const auto exponent = sc::strong_converse_exponent(ch, s.rate, grid, cfg, cert);
  const auto gen = sc::generation_from_string(s.generation);
  sc::ResourceBudget budget;
  budget.max_dim = g.budget_dim;
  std::vector<sc::SimResult> results;
  Json rows = Json::array();
  bool pass = true;
  for (std::size_t i = 0; i < s.ns.size(); ++i) {
    results.push_back(sc::run_experiment(ch, s.ns[i], s.rate, s.codebooks, gen, sc::derive_seed(g.seed, i),
                                         exponent.exponent, budget));
    Json row = sc::to_json(results.back());
    row.erase("per_codebook");
    rows.push_back(row);
    pass = pass && results.back().pass;
  }
  if (g.format == "csv") {
    std::ostringstream os;
    os << sc::sim_csv_header() << '\n';
    for (const auto& r : results) os << sc::to_csv_row(r) << '\n';
    emit_text(g, os.str());
    return pass ? kOk : kFailed;
  }
  Json j{{"quantity", "simulation"},
         {"rate", s.rate},
         {"exponent", exponent.exponent},
         {"alpha_star", exponent.alpha_star},
         {"rows", rows},
         {"pass", pass},
         {"channel", channel_echo(c, ch)},
         {"config_echo", config_echo(cfg)}};
  std::vector<int> distinct(s.ns);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() >= 3) j["slope"] = sc::slope_estimate(results);
  emit(g, j);
  return pass ? kOk : kFailed;
}

int cmd_verify(const Globals& g, const std::string& suite, int samples) {
  const auto checks = sc::run_verify_suite(suite, samples, g.seed);
  Json rows = Json::array();
  bool pass = true;
  for (const auto& c : checks) {
    rows.push_back(sc::to_json(c));
    pass = pass && c.passed;
  }
  emit(g, Json{{"quantity", "verify"}, {"suite", suite}, {"samples", samples}, {"seed", g.seed}, {"pass", pass}, {"rows", rows}});
  return pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong-converse toolkit for covariant quantum channels"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--budget-dim", g.budget_dim, "largest n-fold dimension")->capture_default_str();
  app.add_option("--out", g.out, "write output to this path");
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  EntropyArgs ent;
  auto* entropy = app.add_subcommand("entropy", "Renyi entropy, alpha-relative entropy or chi_alpha");
  entropy->add_option("--state", ent.state, "maxmixed:d | pure:d:k | bloch:x,y,z | state.json");
  entropy->add_flag("--rel", ent.rel, "relative entropy of --rho and --sigma");
  entropy->add_option("--rho", ent.rho);
  entropy->add_option("--sigma", ent.sigma);
  entropy->add_option("--ensemble", ent.ensemble, "ensemble JSON {probs, states}");
  entropy->add_option("--alpha", ent.alpha)->capture_default_str();

  ChannelArgs ch;
  bool with_kraus = false;
  auto* info = app.add_subcommand("channel-info", "Channel summary and covariance certificate");
  add_channel_options(info, ch);
  info->add_flag("--kraus", with_kraus, "include the Kraus operators");

  double alpha = 2.0;
  auto* minout = app.add_subcommand("min-output", "Minimum output Renyi entropy");
  add_channel_options(minout, ch);
  minout->add_option("--alpha", alpha)->capture_default_str();

  auto* capacity = app.add_subcommand("capacity", "Classical capacity of a covariant channel");
  add_channel_options(capacity, ch);

  ExponentArgs ex;
  auto* exponent = app.add_subcommand("exponent", "Strong-converse exponent curve");
  add_channel_options(exponent, ch);
  exponent->add_option("--rate", ex.rates, "rate(s) in bits per use")->delimiter(',');
  exponent->add_option("--alpha-max", ex.alpha_max, "largest alpha (default: channel additivity range)");
  exponent->add_option("--grid-points", ex.grid_points)->capture_default_str();
  exponent->add_option("--ns", ex.ns, "block lengths for envelope columns")->delimiter(',');

  int copies = 2;
  int multi_restarts = 128;
  auto* additivity = app.add_subcommand("additivity", "Multi-copy additivity of the minimum output entropy");
  add_channel_options(additivity, ch);
  additivity->add_option("--alpha", alpha)->capture_default_str();
  additivity->add_option("--copies", copies)->capture_default_str();
  additivity->add_option("--multi-restarts", multi_restarts)->capture_default_str();

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Random codebooks with PGM decoding against the envelope");
  add_channel_options(simulate, ch);
  simulate->add_option("--n", sim.ns, "block lengths")->delimiter(',');
  simulate->add_option("--rate", sim.rate)->capture_default_str();
  simulate->add_option("--codebooks", sim.codebooks)->capture_default_str();
  simulate->add_option("--generation", sim.generation)
      ->check(CLI::IsMember({"product-random", "entangled-random", "orthogonal"}))
      ->capture_default_str();
  simulate->add_option("--alpha-max", sim.alpha_max);
  simulate->add_option("--grid-points", sim.grid_points)->capture_default_str();

  std::string suite = "all";
  int samples = 200;
  auto* verify = app.add_subcommand("verify", "Property suites");
  verify->add_option("--suite", suite, "qcore | entropy | channels | optimize | converse | codesim | all")
      ->capture_default_str();
  verify->add_option("--samples", samples)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*entropy) return cmd_entropy(g, ent);
    if (*info) return cmd_channel_info(g, ch, with_kraus);
    if (*minout) return cmd_min_output(g, ch, alpha);
    if (*capacity) return cmd_capacity(g, ch);
    if (*exponent) return cmd_exponent(g, ch, ex);
    if (*additivity) return cmd_additivity(g, ch, alpha, copies, multi_restarts);
    if (*simulate) return cmd_simulate(g, ch, sim);
    if (*verify) return cmd_verify(g, suite, samples);
  } catch (const sc::InvariantViolation& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const sc::ResourceExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const sc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
