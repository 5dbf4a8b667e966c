#include "tribell/classify.hpp"

#include <cmath>
#include <numbers>

#include "tribell/errors.hpp"
#include "tribell/random.hpp"

namespace tribell {

std::vector<SeparabilityClass> excluded_classes(const std::array<double, 3>& m, double margin) {
  // Bit per class in enum order.
  unsigned mask = 0;
  constexpr unsigned fs = 1u << 0;
  constexpr unsigned s1 = 1u << 1;
  constexpr unsigned s2 = 1u << 2;
  constexpr unsigned s3 = 1u << 3;
  const double threshold = 1.0 + margin;
  if (m[0] > threshold) mask |= fs | s2 | s3;
  if (m[1] > threshold) mask |= fs | s1 | s3;
  if (m[2] > threshold) mask |= fs | s1 | s2;

  std::vector<SeparabilityClass> out;
  for (auto c : {SeparabilityClass::FullySeparable, SeparabilityClass::Sep1_23,
                 SeparabilityClass::Sep2_13, SeparabilityClass::Sep12_3}) {
    if (mask & (1u << static_cast<unsigned>(c))) out.push_back(c);
  }
  return out;
}

ClassificationReport classify(const DensityMatrix& rho, const OptimizerConfig& cfg, double margin) {
  if (!(margin > 0.0)) throw ValidationError("margin must be > 0");
  const auto d = decompose(rho);
  ClassificationReport report;
  report.margin = margin;
  for (int i = 1; i <= 3; ++i) {
    const auto r = seesaw_max_abs_d(d, QubitIndex(i), cfg);
    report.m[i - 1] = r.value;
    report.sweeps_used[i - 1] = r.sweeps_used;
    report.optimizer_converged = report.optimizer_converged && r.converged;
  }
  const auto w = maximize_omega(d, cfg);
  report.omega_max = w.value;
  report.optimizer_converged = report.optimizer_converged && w.converged;
  report.excluded = excluded_classes(report.m, margin);
  report.genuine_tripartite_indicated = report.excluded.size() == 4;
  return report;
}

std::string_view to_string(SourceClass c) {
  switch (c) {
    case SourceClass::FullySeparable: return "fully-separable";
    case SourceClass::Sep1_23: return "1-23";
    case SourceClass::Sep2_13: return "2-13";
    case SourceClass::Sep12_3: return "12-3";
    case SourceClass::HaarPure: return "haar-pure";
    default: return "ghz-family";
  }
}

std::optional<SourceClass> parse_source_class(std::string_view label) {
  for (auto c : {SourceClass::FullySeparable, SourceClass::Sep1_23, SourceClass::Sep2_13,
                 SourceClass::Sep12_3, SourceClass::HaarPure, SourceClass::GhzFamily}) {
    if (label == to_string(c)) return c;
  }
  return std::nullopt;
}

std::string_view to_string(SampleMode m) {
  return m == SampleMode::FixedSettings ? "fixed-settings" : "optimized";
}

std::optional<SampleMode> parse_sample_mode(std::string_view label) {
  if (label == "fixed-settings") return SampleMode::FixedSettings;
  if (label == "optimized") return SampleMode::Optimized;
  return std::nullopt;
}

DensityMatrix draw_source_state(SourceClass source, std::uint64_t seed, int k) {
  Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(k));
  const std::uint64_t state_seed = rng.next_u64();
  switch (source) {
    case SourceClass::HaarPure: return to_density(random_pure(state_seed));
    case SourceClass::GhzFamily:
      return to_density(generalized_ghz(0.5 * std::numbers::pi * rng.uniform()));
    default: break;
  }
  const auto cls = source == SourceClass::FullySeparable ? SeparabilityClass::FullySeparable
                   : source == SourceClass::Sep1_23     ? SeparabilityClass::Sep1_23
                   : source == SourceClass::Sep2_13     ? SeparabilityClass::Sep2_13
                                                        : SeparabilityClass::Sep12_3;
  const int n_mix = 1 + static_cast<int>(3.0 * rng.uniform());
  const auto rank = rng.uniform() < 0.5 ? FactorRank::Pure : FactorRank::Full;
  return random_in_class(cls, n_mix, state_seed, rank);
}

namespace {

RegionPoint sample_point(SourceClass source, std::uint64_t seed, int k, SampleMode mode,
                         const OptimizerConfig& cfg) {
  const auto rho = draw_source_state(source, seed, k);
  const auto d = decompose(rho);
  RegionPoint p;
  p.source = source;
  std::array<double, 3> coords{};
  if (mode == SampleMode::FixedSettings) {
    // Separate stream from the state draw so settings do not depend on the generator.
    Rng rng = Rng::stream(seed ^ 0x5e771e5ull, static_cast<std::uint64_t>(k));
    SettingVectors v;
    for (int j = 0; j < 3; ++j) {
      v.a[j] = rng.unit_vector();
      v.b[j] = rng.unit_vector();
    }
    const auto st = derive_st(MeasurementSettings(v));
    for (int i = 0; i < 3; ++i) coords[i] = expectation_bell_fast(d, st, QubitIndex(i + 1));
  } else {
    OptimizerConfig local = cfg;
    local.seed = Rng::stream(cfg.seed, static_cast<std::uint64_t>(k)).next_u64();
    for (int i = 0; i < 3; ++i) {
      coords[i] = serial::seesaw_max_abs_d(d, QubitIndex(i + 1), local).signed_value;
    }
  }
  p.d1 = coords[0];
  p.d2 = coords[1];
  p.d3 = coords[2];
  return p;
}

void check_sample_args(int n, const OptimizerConfig& cfg) {
  if (n < 1) throw ValidationError("sample count must be >= 1");
  cfg.validate();
}

}  // namespace

std::vector<RegionPoint> sample_region(SourceClass source, int n, std::uint64_t seed,
                                       SampleMode mode, const OptimizerConfig& cfg) {
  check_sample_args(n, cfg);
  std::vector<RegionPoint> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = sample_point(source, seed, k, mode, cfg);
  return out;
}

namespace serial {

std::vector<RegionPoint> sample_region(SourceClass source, int n, std::uint64_t seed,
                                       SampleMode mode, const OptimizerConfig& cfg) {
  check_sample_args(n, cfg);
  std::vector<RegionPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.push_back(sample_point(source, seed, k, mode, cfg));
  return out;
}

}  // namespace serial

std::string_view to_string(Region r) {
  switch (r) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    default: return "corner";
  }
}

std::string_view to_string(Plane p) {
  switch (p) {
    case Plane::P12: return "12";
    case Plane::P13: return "13";
    default: return "23";
  }
}

std::optional<Plane> parse_plane(std::string_view label) {
  if (label == "12") return Plane::P12;
  if (label == "13") return Plane::P13;
  if (label == "23") return Plane::P23;
  return std::nullopt;
}

Region region_of(double u, double v) {
  const bool u_in = std::abs(u) <= 1.0 + kRegionTol;
  const bool v_in = std::abs(v) <= 1.0 + kRegionTol;
  if (u_in && v_in) return Region::I;
  if (!u_in && v_in) return Region::II;
  if (u_in && !v_in) return Region::III;
  return Region::Corner;
}

std::vector<FigureRow> figure_projection(const std::vector<RegionPoint>& points, Plane plane) {
  std::vector<FigureRow> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    FigureRow r;
    switch (plane) {
      case Plane::P12: r.u = p.d1; r.v = p.d2; break;
      case Plane::P13: r.u = p.d1; r.v = p.d3; break;
      case Plane::P23: r.u = p.d2; r.v = p.d3; break;
    }
    r.region = region_of(r.u, r.v);
    r.source = p.source;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace tribell
