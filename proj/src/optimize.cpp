#include "tribell/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "tribell/errors.hpp"
#include "tribell/random.hpp"

namespace tribell {

void OptimizerConfig::validate() const {
  if (n_starts < 1) throw ValidationError("n_starts must be >= 1");
  if (max_sweeps < 1) throw ValidationError("max_sweeps must be >= 1");
  if (!(abs_tol > 0.0)) throw ValidationError("abs_tol must be > 0");
}

namespace {

struct StartOutcome {
  double value = 0.0;
  double signed_value = 0.0;
  SettingVectors vectors;
  int sweeps = 0;
  bool converged = false;
  int zero_gradient_events = 0;
  int monotonicity_violations = 0;
  double worst_decrease = 0.0;
};

// Vector k of the see-saw cycle: a_1, b_1, a_2, b_2, a_3, b_3.
Eigen::Vector3d& active(SettingVectors& v, int k) { return k % 2 == 0 ? v.a[k / 2] : v.b[k / 2]; }

SettingVectors random_start(Rng& rng) {
  SettingVectors v;
  for (int j = 0; j < 3; ++j) {
    v.a[j] = rng.unit_vector();
    v.b[j] = rng.unit_vector();
  }
  return v;
}

std::array<double, 3> all_expectations(const PauliDecomposition& d, const SettingVectors& v) {
  const auto st = derive_st_raw(v);
  return {expectation_bell_fast(d, st, QubitIndex(1)), expectation_bell_fast(d, st, QubitIndex(2)),
          expectation_bell_fast(d, st, QubitIndex(3))};
}

double sum_squares(const std::array<double, 3>& e) { return e[0] * e[0] + e[1] * e[1] + e[2] * e[2]; }

void record_step(StartOutcome& out, double before, double after) {
  const double drop = before - after;
  if (drop > kMonotoneSlack) ++out.monotonicity_violations;
  out.worst_decrease = std::max(out.worst_decrease, drop);
}

StartOutcome seesaw_start(const PauliDecomposition& d, QubitIndex i, const OptimizerConfig& cfg,
                          int start) {
  Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(start));
  StartOutcome out;
  SettingVectors v = random_start(rng);
  auto eval = [&] { return expectation_bell_fast(d, derive_st_raw(v), i); };

  double current = eval();
  double objective = std::abs(current);
  for (int sweep = 1; sweep <= cfg.max_sweeps; ++sweep) {
    const double sweep_start = objective;
    for (int k = 0; k < 6; ++k) {
      Eigen::Vector3d& x = active(v, k);
      const Eigen::Vector3d previous = x;
      x.setZero();
      const double c = eval();
      Eigen::Vector3d g;
      for (int axis = 0; axis < 3; ++axis) {
        x = Eigen::Vector3d::Unit(axis);
        g(axis) = eval() - c;
      }
      const double gnorm = g.norm();
      if (gnorm < kZeroGradient) {
        x = previous;
        ++out.zero_gradient_events;
        continue;
      }
      x = (c >= 0.0 ? 1.0 : -1.0) * g / gnorm;
      current = eval();
      const double next = std::abs(current);
      record_step(out, objective, next);
      objective = next;
    }
    out.sweeps = sweep;
    if (objective - sweep_start < cfg.abs_tol) {
      out.converged = true;
      break;
    }
  }
  out.value = objective;
  out.signed_value = current;
  out.vectors = v;
  return out;
}

// Maximizes sum_i (g_i.x + c_i)^2 over |x| = 1 from x, never decreasing it.
struct SphereQuadratic {
  std::array<Eigen::Vector3d, 3> g;
  std::array<double, 3> c{};

  double value(const Eigen::Vector3d& x) const {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double r = g[i].dot(x) + c[i];
      acc += r * r;
    }
    return acc;
  }

  Eigen::Vector3d gradient(const Eigen::Vector3d& x) const {
    Eigen::Vector3d acc = Eigen::Vector3d::Zero();
    for (int i = 0; i < 3; ++i) acc += 2.0 * (g[i].dot(x) + c[i]) * g[i];
    return acc;
  }
};

constexpr int kInnerIterations = 200;
constexpr int kMaxHalvings = 60;

// Returns false when the gradient vanishes at the starting point.
bool ascend_on_sphere(const SphereQuadratic& quad, Eigen::Vector3d& x, double tol) {
  double val = quad.value(x);
  for (int it = 0; it < kInnerIterations; ++it) {
    const Eigen::Vector3d grad = quad.gradient(x);
    const Eigen::Vector3d tangent = grad - grad.dot(x) * x;
    if (tangent.norm() < kZeroGradient) return it > 0 || grad.norm() >= kZeroGradient;
    double step = 1.0 / std::max(1.0, tangent.norm());
    bool accepted = false;
    double gain = 0.0;
    for (int h = 0; h < kMaxHalvings; ++h, step *= 0.5) {
      const Eigen::Vector3d y = (x + step * tangent).normalized();
      const double vy = quad.value(y);
      if (vy > val) {
        gain = vy - val;
        x = y;
        val = vy;
        accepted = true;
        break;
      }
    }
    if (!accepted || gain < 0.01 * tol) break;
  }
  return true;
}

StartOutcome omega_start(const PauliDecomposition& d, const OptimizerConfig& cfg, int start) {
  Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(start));
  StartOutcome out;
  SettingVectors v = random_start(rng);

  double objective = sum_squares(all_expectations(d, v));
  for (int sweep = 1; sweep <= cfg.max_sweeps; ++sweep) {
    const double sweep_start = objective;
    for (int k = 0; k < 6; ++k) {
      Eigen::Vector3d& x = active(v, k);
      const Eigen::Vector3d previous = x;
      SphereQuadratic quad;
      x.setZero();
      const auto base = all_expectations(d, v);
      for (int i = 0; i < 3; ++i) quad.c[i] = base[i];
      for (int axis = 0; axis < 3; ++axis) {
        x = Eigen::Vector3d::Unit(axis);
        const auto e = all_expectations(d, v);
        for (int i = 0; i < 3; ++i) quad.g[i](axis) = e[i] - base[i];
      }
      x = previous;
      if (!ascend_on_sphere(quad, x, cfg.abs_tol)) ++out.zero_gradient_events;
      const double next = sum_squares(all_expectations(d, v));
      record_step(out, objective, next);
      objective = next;
    }
    out.sweeps = sweep;
    if (objective - sweep_start < cfg.abs_tol) {
      out.converged = true;
      break;
    }
  }
  out.value = objective;
  out.signed_value = objective;
  out.vectors = v;
  return out;
}

OptimizationResult merge(std::vector<StartOutcome> starts) {
  OptimizationResult r;
  r.converged = true;
  std::size_t best = 0;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    const auto& s = starts[k];
    r.per_start_values.push_back(s.value);
    r.converged = r.converged && s.converged;
    r.zero_gradient_events += s.zero_gradient_events;
    r.monotonicity_violations += s.monotonicity_violations;
    r.worst_decrease = std::max(r.worst_decrease, s.worst_decrease);
    if (s.value > starts[best].value) best = k;
  }
  const auto& b = starts[best];
  r.value = b.value;
  r.signed_value = b.signed_value;
  r.sweeps_used = b.sweeps;
  // The see-saw only writes +-g/|g| and the omega ascent only normalized
  // vectors, so the best vectors are unit to rounding.
  SettingVectors unit = b.vectors;
  for (int j = 0; j < 3; ++j) {
    unit.a[j].normalize();
    unit.b[j].normalize();
  }
  r.settings = MeasurementSettings(unit);
  return r;
}

template <typename Kernel>
OptimizationResult run_parallel(const OptimizerConfig& cfg, Kernel kernel) {
  cfg.validate();
  std::vector<StartOutcome> starts(static_cast<std::size_t>(cfg.n_starts));
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < cfg.n_starts; ++s) starts[static_cast<std::size_t>(s)] = kernel(s);
  return merge(std::move(starts));
}

template <typename Kernel>
OptimizationResult run_serial(const OptimizerConfig& cfg, Kernel kernel) {
  cfg.validate();
  std::vector<StartOutcome> starts;
  starts.reserve(static_cast<std::size_t>(cfg.n_starts));
  for (int s = 0; s < cfg.n_starts; ++s) starts.push_back(kernel(s));
  return merge(std::move(starts));
}

}  // namespace

OptimizationResult seesaw_max_abs_d(const DensityMatrix& rho, QubitIndex i,
                                    const OptimizerConfig& cfg) {
  return seesaw_max_abs_d(decompose(rho), i, cfg);
}

OptimizationResult seesaw_max_abs_d(const PauliDecomposition& d, QubitIndex i,
                                    const OptimizerConfig& cfg) {
  return run_parallel(cfg, [&](int s) { return seesaw_start(d, i, cfg, s); });
}

OptimizationResult maximize_omega(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  return maximize_omega(decompose(rho), cfg);
}

OptimizationResult maximize_omega(const PauliDecomposition& d, const OptimizerConfig& cfg) {
  return run_parallel(cfg, [&](int s) { return omega_start(d, cfg, s); });
}

namespace serial {

OptimizationResult seesaw_max_abs_d(const PauliDecomposition& d, QubitIndex i,
                                    const OptimizerConfig& cfg) {
  return run_serial(cfg, [&](int s) { return seesaw_start(d, i, cfg, s); });
}

OptimizationResult maximize_omega(const PauliDecomposition& d, const OptimizerConfig& cfg) {
  return run_serial(cfg, [&](int s) { return omega_start(d, cfg, s); });
}

}  // namespace serial

MeasurementSettings planar_settings(double theta1, double theta2, double theta3) {
  const std::array<double, 3> theta{theta1, theta2, theta3};
  SettingVectors v;
  for (int j = 0; j < 3; ++j) {
    const double c = std::cos(theta[j]);
    const double s = std::sin(theta[j]);
    const Eigen::Vector3d sv = Eigen::Vector3d(c, s, 0.0) / std::numbers::sqrt2;
    const Eigen::Vector3d tv = Eigen::Vector3d(-s, c, 0.0) / std::numbers::sqrt2;
    v.a[j] = sv + tv;
    v.b[j] = sv - tv;
  }
  return MeasurementSettings(v);
}

double omega_planar_oracle(double theta1, double theta2, double theta3) {
  const double total = theta1 + theta2 + theta3;
  const double diff = std::cos(total) - std::sin(total);
  const double closed = 1.5 * diff * diff;
  const double direct = omega(to_density(ghz()), planar_settings(theta1, theta2, theta3));
  if (std::abs(direct - closed) > 1e-10) {
    throw ConsistencyError("planar omega closed form disagrees with direct evaluation by " +
                           std::to_string(std::abs(direct - closed)));
  }
  return closed;
}

}  // namespace tribell
