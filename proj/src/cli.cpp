#include "tribell/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "tribell/classify.hpp"
#include "tribell/errors.hpp"
#include "tribell/optimize.hpp"
#include "tribell/pauli.hpp"

namespace tribell::cli {

using nlohmann::json;

namespace {

constexpr std::string_view kBuiltinPrefix = "builtin:";

constexpr std::string_view kScopeNote =
    "Exclusion is a necessary-condition test: a class not listed is not excluded, which does not "
    "certify membership. Each bi-separable class is the convex hull of products across one named "
    "partition; mixtures across different partitions fall outside all three classes.";

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ValidationError("could not parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

DensityMatrix builtin_state(std::string_view name) {
  if (name == "ghz") return to_density(ghz());
  if (name == "w") return to_density(w_state());
  if (name == "000") return to_density(product_000());
  if (name == "mixed-identity") return maximally_mixed();
  if (name == "phi-plus-otimes-0") return to_density(phi_plus_otimes_0());
  if (name == "plus-otimes-phi-plus") return to_density(plus_otimes_phi_plus());
  if (name.starts_with("generalized-ghz:")) {
    return to_density(generalized_ghz(parse_double(name.substr(16), "alpha")));
  }
  if (name.starts_with("acin:")) {
    const auto parts = split(name.substr(5), ',');
    if (parts.size() != 6) throw ValidationError("acin builtin needs 5 lambdas and phi");
    AcinParameters p;
    for (int k = 0; k < 5; ++k) p.lambda[k] = parse_double(parts[k], "lambda");
    p.phi = parse_double(parts[5], "phi");
    return to_density(acin_state(p));
  }
  if (name.starts_with("biseparable:")) {
    const auto parts = split(name.substr(12), ':');
    if (parts.size() != 2) throw ValidationError("biseparable builtin needs <partition>:<alpha>");
    const auto partition = parse_bipartition(parts[0]);
    if (!partition) throw ValidationError("unknown partition '" + std::string(parts[0]) + "'");
    return to_density(canonical_biseparable(*partition, parse_double(parts[1], "alpha")));
  }
  throw ValidationError("unknown builtin state '" + std::string(name) + "'");
}

json read_json(std::string_view path) {
  std::ifstream in{std::string(path)};
  if (!in) throw ValidationError("cannot open '" + std::string(path) + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError("malformed JSON in '" + std::string(path) + "': " + e.what());
  }
}

cplx complex_pair(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError("complex entries must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Eigen::Vector3d real_triple(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ValidationError("setting rows must have 3 entries");
  Eigen::Vector3d v;
  for (int k = 0; k < 3; ++k) {
    if (!j[k].is_number()) throw ValidationError("setting entries must be numbers");
    v(k) = j[k].get<double>();
  }
  return v;
}

json vec_json(const Eigen::Vector3d& v) { return json::array({sig9(v(0)), sig9(v(1)), sig9(v(2))}); }

json settings_json(const MeasurementSettings& m) {
  json a = json::array();
  json b = json::array();
  for (int j = 0; j < 3; ++j) {
    a.push_back(vec_json(m.a(j).vec()));
    b.push_back(vec_json(m.b(j).vec()));
  }
  return {{"a", a}, {"b", b}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string fmt9(double x) { return fmt::format("{:.9g}", x); }

// CLI11 tolerates only `const char* const*`; keep storage alive for the call.
struct Argv {
  explicit Argv(const std::vector<std::string>& args) {
    for (const auto& a : args) ptrs.push_back(a.c_str());
  }
  int argc() const { return static_cast<int>(ptrs.size()); }
  const char* const* argv() const { return ptrs.data(); }
  std::vector<const char*> ptrs;
};

int cmd_decompose(const std::string& state, std::ostream& out) {
  const auto d = decompose(load_state(state));
  const auto norms = invariant_norms(d);
  json j;
  json alpha = json::array(), beta = json::array(), gamma = json::array();
  json r = json::array(), s = json::array(), t = json::array(), q = json::object();
  for (int i = 0; i < 3; ++i) {
    alpha.push_back(sig9(d.alpha(i)));
    beta.push_back(sig9(d.beta(i)));
    gamma.push_back(sig9(d.gamma(i)));
    json rr = json::array(), sr = json::array(), tr = json::array();
    for (int k = 0; k < 3; ++k) {
      rr.push_back(sig9(d.R(i, k)));
      sr.push_back(sig9(d.S(i, k)));
      tr.push_back(sig9(d.T(i, k)));
    }
    r.push_back(rr);
    s.push_back(sr);
    t.push_back(tr);
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        q[fmt::format("Q{}{}{}", a + 1, b + 1, c + 1)] = sig9(d.q(a, b, c));
      }
    }
  }
  j["alpha"] = alpha;
  j["beta"] = beta;
  j["gamma"] = gamma;
  j["R"] = r;
  j["S"] = s;
  j["T"] = t;
  j["Q"] = q;
  j["invariant_norms"] = {{"two_body", sig9(norms.two_body)}, {"q_local", sig9(norms.q_local)}};
  j["q_norm"] = sig9(q_norm(d));
  emit(out, j);
  return kExitOk;
}

int cmd_evaluate(const std::string& state, const std::string& settings, int index, std::ostream& out,
                 std::ostream& err) {
  const auto rho = load_state(state);
  const auto m = load_settings(settings);
  const QubitIndex i(index);
  const double matrix_value = expectation_bell(rho, m, i);
  const double fast_value = expectation_bell_fast(decompose(rho), derive_st(m), i);
  const double gap = std::abs(matrix_value - fast_value);
  if (gap > 1e-10) {
    err << "error: matrix-trace and Pauli-path expectations disagree by " << fmt9(gap) << '\n';
    return kExitConsistency;
  }
  emit(out, {{"index", index}, {"value", sig9(matrix_value)}, {"pauli_path_value", sig9(fast_value)}});
  return kExitOk;
}

json telemetry_json(const OptimizationResult& r, const OptimizerConfig& cfg) {
  json per = json::array();
  for (double v : r.per_start_values) per.push_back(sig9(v));
  return {{"n_starts", cfg.n_starts},
          {"seed", cfg.seed},
          {"sweeps_used", r.sweeps_used},
          {"converged", r.converged},
          {"zero_gradient_events", r.zero_gradient_events},
          {"monotonicity_violations", r.monotonicity_violations},
          {"per_start_values", per}};
}

int cmd_optimize(const std::string& state, int index, bool use_omega, const OptimizerConfig& cfg,
                 std::ostream& out) {
  const auto rho = load_state(state);
  json j;
  OptimizationResult r;
  if (use_omega) {
    r = maximize_omega(rho, cfg);
    j["objective"] = "omega";
  } else {
    r = seesaw_max_abs_d(rho, QubitIndex(index), cfg);
    j["objective"] = "abs_d";
    j["index"] = index;
  }
  j["value"] = sig9(r.value);
  j["signed_value"] = sig9(r.signed_value);
  j["settings"] = settings_json(r.settings);
  j["telemetry"] = telemetry_json(r, cfg);
  emit(out, j);
  return kExitOk;
}

int cmd_classify(const std::string& state, double margin, const OptimizerConfig& cfg,
                 std::ostream& out) {
  const auto report = classify(load_state(state), cfg, margin);
  json excluded = json::array();
  for (auto c : report.excluded) excluded.push_back(std::string(to_string(c)));
  std::string verdict;
  if (report.genuine_tripartite_indicated) {
    verdict = "genuine tripartite entanglement indicated (pure-partition convex classes)";
  } else if (report.excluded.empty()) {
    verdict = "no class excluded";
  } else {
    verdict = "listed classes excluded; others not excluded";
  }
  json j;
  j["m"] = json::array({sig9(report.m[0]), sig9(report.m[1]), sig9(report.m[2])});
  j["omega_max"] = sig9(report.omega_max);
  j["margin"] = sig9(report.margin);
  j["excluded"] = excluded;
  j["genuine_tripartite_indicated"] = report.genuine_tripartite_indicated;
  j["verdict"] = verdict;
  j["note"] = std::string(kScopeNote);
  j["telemetry"] = {{"converged", report.optimizer_converged},
                    {"sweeps_used", report.sweeps_used},
                    {"n_starts", cfg.n_starts},
                    {"seed", cfg.seed}};
  emit(out, j);
  return kExitOk;
}

int cmd_sample(const std::string& cls, int n, std::uint64_t seed, const std::string& mode_label,
               const OptimizerConfig& cfg, std::ostream& out) {
  const auto source = parse_source_class(cls);
  if (!source) throw ValidationError("unknown class '" + cls + "'");
  const auto mode = parse_sample_mode(mode_label);
  if (!mode) throw ValidationError("unknown mode '" + mode_label + "'");
  const auto points = sample_region(*source, n, seed, *mode, cfg);
  out << "d1,d2,d3,class\n";
  for (const auto& p : points) {
    out << fmt9(p.d1) << ',' << fmt9(p.d2) << ',' << fmt9(p.d3) << ',' << to_string(p.source) << '\n';
  }
  return kExitOk;
}

std::vector<RegionPoint> read_points(std::istream& in) {
  std::vector<RegionPoint> points;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "d1,d2,d3,class") {
        throw ValidationError("line " + std::to_string(line_no) + ": expected header d1,d2,d3,class");
      }
      header_seen = true;
      continue;
    }
    const auto fields = split(line, ',');
    try {
      if (fields.size() != 4) throw ValidationError("expected 4 fields");
      RegionPoint p;
      p.d1 = parse_double(fields[0], "d1");
      p.d2 = parse_double(fields[1], "d2");
      p.d3 = parse_double(fields[2], "d3");
      const auto source = parse_source_class(fields[3]);
      if (!source) throw ValidationError("unknown class '" + std::string(fields[3]) + "'");
      p.source = *source;
      points.push_back(p);
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!header_seen) throw ValidationError("line 1: missing header d1,d2,d3,class");
  return points;
}

int cmd_figure(const std::string& plane_label, const std::string& input, std::ostream& out) {
  const auto plane = parse_plane(plane_label);
  if (!plane) throw ValidationError("plane must be 12, 13 or 23");
  std::vector<RegionPoint> points;
  if (input.empty() || input == "-") {
    points = read_points(std::cin);
  } else {
    std::ifstream in(input);
    if (!in) throw ValidationError("cannot open '" + input + "'");
    points = read_points(in);
  }
  out << "u,v,region,class\n";
  for (const auto& row : figure_projection(points, *plane)) {
    out << fmt9(row.u) << ',' << fmt9(row.v) << ',' << to_string(row.region) << ','
        << to_string(row.source) << '\n';
  }
  return kExitOk;
}

}  // namespace

double sig9(double x) {
  if (!std::isfinite(x)) return x;
  if (x == 0.0) return 0.0;  // drops the sign of -0
  return std::stod(fmt::format("{:.9g}", x));
}

DensityMatrix load_state(std::string_view spec) {
  if (spec.starts_with(kBuiltinPrefix)) return builtin_state(spec.substr(kBuiltinPrefix.size()));
  const json j = read_json(spec);
  if (!j.is_object() || !j.contains("kind") || !j.contains("data")) {
    throw ValidationError("state file needs 'kind' and 'data'");
  }
  const auto kind = j["kind"].get<std::string>();
  const json& data = j["data"];
  if (kind == "pure") {
    if (!data.is_array() || data.size() != 8) throw ValidationError("pure state needs 8 amplitudes");
    Vector8c amps;
    for (int k = 0; k < 8; ++k) amps(k) = complex_pair(data[k]);
    return to_density(PureState(amps, kFileTol));
  }
  if (kind == "density") {
    if (!data.is_array() || data.size() != 8) throw ValidationError("density matrix needs 8 rows");
    Matrix8c m;
    for (int r = 0; r < 8; ++r) {
      if (!data[r].is_array() || data[r].size() != 8) {
        throw ValidationError("density matrix rows need 8 entries");
      }
      for (int c = 0; c < 8; ++c) m(r, c) = complex_pair(data[r][c]);
    }
    return DensityMatrix(m, kFileTol);
  }
  throw ValidationError("state kind must be 'pure' or 'density'");
}

MeasurementSettings load_settings(std::string_view spec) {
  if (spec.starts_with(kBuiltinPrefix)) {
    const auto name = spec.substr(kBuiltinPrefix.size());
    if (name == "all-x") return MeasurementSettings::uniform(UnitVector3(1, 0, 0));
    if (name == "all-y") return MeasurementSettings::uniform(UnitVector3(0, 1, 0));
    if (name == "all-z") return MeasurementSettings::uniform(UnitVector3(0, 0, 1));
    throw ValidationError("unknown builtin settings '" + std::string(name) + "'");
  }
  const json j = read_json(spec);
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j["a"].is_array() ||
      !j["b"].is_array() || j["a"].size() != 3 || j["b"].size() != 3) {
    throw ValidationError("settings file needs 3x3 arrays 'a' and 'b'");
  }
  SettingVectors raw;
  for (int k = 0; k < 3; ++k) {
    raw.a[k] = real_triple(j["a"][k]);
    raw.b[k] = real_triple(j["b"][k]);
    for (const auto* v : {&raw.a[k], &raw.b[k]}) {
      if (std::abs(v->norm() - 1.0) > kFileTol) {
        throw ValidationError("setting vector for qubit " + std::to_string(k + 1) +
                              " violates the unit norm invariant");
      }
    }
    // Within file tolerance; bring to the library's tighter unit tolerance.
    raw.a[k].normalize();
    raw.b[k].normalize();
  }
  return MeasurementSettings(raw);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tripartite Bell operators: evaluation, optimization and separability classification"};
  app.require_subcommand(1);

  OptimizerConfig cfg;
  auto add_optimizer_flags = [&](CLI::App* sub) {
    sub->add_option("--starts", cfg.n_starts, "Number of random starts")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Seed for start points")->capture_default_str();
    sub->add_option("--max-sweeps", cfg.max_sweeps, "Sweep limit per start")->capture_default_str();
  };

  std::string state;
  std::string settings;
  int index = 1;

  auto* decompose_cmd = app.add_subcommand("decompose", "Pauli coefficients and invariant norms");
  decompose_cmd->add_option("state", state, "State JSON file or builtin:<name>")->required();

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Expectation of D^(i) at given settings");
  evaluate_cmd->add_option("state", state)->required();
  evaluate_cmd->add_option("settings", settings, "Settings JSON file or builtin:all-x|all-y|all-z")
      ->required();
  evaluate_cmd->add_option("index", index, "Operator index 1..3")->required()->check(CLI::Range(1, 3));

  bool use_omega = false;
  auto* optimize_cmd = app.add_subcommand("optimize", "Maximize |<D^(i)>| or omega over settings");
  optimize_cmd->add_option("state", state)->required();
  auto* index_opt = optimize_cmd->add_option("index", index, "Operator index 1..3")->check(CLI::Range(1, 3));
  auto* omega_flag = optimize_cmd->add_flag("--omega", use_omega, "Maximize the sum of squares");
  index_opt->excludes(omega_flag);
  add_optimizer_flags(optimize_cmd);

  double margin = kDefaultMargin;
  auto* classify_cmd = app.add_subcommand("classify", "Separability classes excluded by the maxima");
  classify_cmd->add_option("state", state)->required();
  classify_cmd->add_option("--margin", margin, "Threshold slack above 1")->capture_default_str();
  add_optimizer_flags(classify_cmd);

  std::string cls;
  int count = 100;
  std::uint64_t sample_seed = 1;
  std::string mode = "fixed-settings";
  auto* sample_cmd = app.add_subcommand("sample", "Sample (<D1>,<D2>,<D3>) points as CSV");
  sample_cmd->add_option("--class", cls,
                         "fully-separable | 1-23 | 2-13 | 12-3 | haar-pure | ghz-family")
      ->required();
  sample_cmd->add_option("-n,--count", count, "Number of states")->capture_default_str();
  sample_cmd->add_option("--seed", sample_seed, "Sampling seed")->capture_default_str();
  sample_cmd->add_option("--mode", mode, "fixed-settings | optimized")->capture_default_str();
  sample_cmd->add_option("--starts", cfg.n_starts, "Optimizer starts (optimized mode)")
      ->capture_default_str();

  std::string plane = "12";
  std::string input;
  auto* figure_cmd = app.add_subcommand("figure", "Project sampled points onto a plane with region labels");
  figure_cmd->add_option("--plane", plane, "12 | 13 | 23")->capture_default_str();
  figure_cmd->add_option("input", input, "CSV from `sample` (default stdin)");

  const Argv argv(args);
  try {
    app.parse(argv.argc(), argv.argv());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*decompose_cmd) return cmd_decompose(state, out);
    if (*evaluate_cmd) return cmd_evaluate(state, settings, index, out, err);
    if (*optimize_cmd) {
      if (!use_omega && index_opt->count() == 0) {
        throw ValidationError("optimize needs an operator index or --omega");
      }
      return cmd_optimize(state, index, use_omega, cfg, out);
    }
    if (*classify_cmd) return cmd_classify(state, margin, cfg, out);
    if (*sample_cmd) return cmd_sample(cls, count, sample_seed, mode, cfg, out);
    if (*figure_cmd) return cmd_figure(plane, input, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace tribell::cli
