#pragma once

// Separability-class exclusion from the optimized maxima m_i = max |<D^(i)>|.
//
// Fully separable states satisfy |<D^(i)>| <= 1 for every i; states in the
// bi-separable class whose separated qubit is k satisfy |<D^(k)>| <= sqrt2 and
// |<D^(i)>| <= 1 for i != k. Hence m_k > 1 rules out every class except the
// one separating qubit k. Exclusion is a necessary-condition test only: a class
// that is not excluded is not certified.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tribell/optimize.hpp"
#include "tribell/states.hpp"

namespace tribell {

inline constexpr double kDefaultMargin = 1e-6;
// Slack on region boundaries of the projected figure.
inline constexpr double kRegionTol = 1e-9;

struct ClassificationReport {
  std::array<double, 3> m{};
  double omega_max = 0.0;
  std::vector<SeparabilityClass> excluded;  // in enum order
  double margin = kDefaultMargin;
  bool genuine_tripartite_indicated = false;
  bool optimizer_converged = true;
  std::array<int, 3> sweeps_used{};
};

/// Classes ruled out by maxima `m` at threshold 1 + margin.
std::vector<SeparabilityClass> excluded_classes(const std::array<double, 3>& m, double margin);

ClassificationReport classify(const DensityMatrix& rho, const OptimizerConfig& cfg = {},
                              double margin = kDefaultMargin);

enum class SourceClass { FullySeparable, Sep1_23, Sep2_13, Sep12_3, HaarPure, GhzFamily };

std::string_view to_string(SourceClass c);
std::optional<SourceClass> parse_source_class(std::string_view label);

enum class SampleMode { FixedSettings, Optimized };

std::string_view to_string(SampleMode m);
std::optional<SampleMode> parse_sample_mode(std::string_view label);

struct RegionPoint {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  SourceClass source = SourceClass::FullySeparable;
};

/// Draws state k from the generator for `source` with a seed derived from
/// (seed, k). Separable classes mix 1..3 products with pure or full-rank
/// factors, chosen per sample.
DensityMatrix draw_source_state(SourceClass source, std::uint64_t seed, int k);

/// n points (<D1>, <D2>, <D3>): at one random setting shared by the three
/// coordinates (FixedSettings), or the signed optimum of each index found
/// separately (Optimized). Deterministic in seed; samples run in parallel.
std::vector<RegionPoint> sample_region(SourceClass source, int n, std::uint64_t seed,
                                       SampleMode mode, const OptimizerConfig& cfg = {});

namespace serial {
std::vector<RegionPoint> sample_region(SourceClass source, int n, std::uint64_t seed,
                                       SampleMode mode, const OptimizerConfig& cfg = {});
}  // namespace serial

enum class Plane { P12, P13, P23 };
enum class Region { I, II, III, Corner };

std::string_view to_string(Region r);
std::string_view to_string(Plane p);
std::optional<Plane> parse_plane(std::string_view label);

/// I: max(|u|,|v|) <= 1; II: |u| > 1, |v| <= 1; III: |v| > 1, |u| <= 1; else corner.
Region region_of(double u, double v);

struct FigureRow {
  double u = 0.0;
  double v = 0.0;
  Region region = Region::I;
  SourceClass source = SourceClass::FullySeparable;
};

std::vector<FigureRow> figure_projection(const std::vector<RegionPoint>& points, Plane plane);

}  // namespace tribell
