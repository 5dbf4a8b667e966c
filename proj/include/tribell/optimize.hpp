#pragma once

// Maximization of |<D^(i)>| and of omega = sum_i <D^(i)>^2 over measurement
// settings for a fixed state.
//
// Every expectation is affine in each single setting vector, v -> g.v + c.
// The see-saw cycles over a_1, b_1, ..., a_3, b_3, reads (g, c) off four
// evaluations (v = 0, e_x, e_y, e_z) and jumps to the exact maximizer
// v = +-g/|g|. For omega the per-vector subproblem is a quadratic on the unit
// sphere, handled by projected gradient ascent with step halving.
//
// Starts are independent; the default entry points run them under OpenMP and
// the serial:: versions run the same kernel in a plain loop. Both return
// identical results for identical inputs.

#include <cstdint>
#include <vector>

#include "tribell/bell.hpp"
#include "tribell/pauli.hpp"
#include "tribell/states.hpp"

namespace tribell {

struct OptimizerConfig {
  int n_starts = 32;
  int max_sweeps = 500;
  double abs_tol = 1e-12;
  std::uint64_t seed = 1;

  void validate() const;
};

// Objective decreases below this slack are counted as monotonicity violations.
inline constexpr double kMonotoneSlack = 1e-12;
inline constexpr double kZeroGradient = 1e-14;

struct OptimizationResult {
  double value = 0.0;         // best |<D^(i)>| or best omega
  double signed_value = 0.0;  // <D^(i)> at `settings` (equals value for omega)
  MeasurementSettings settings;
  int sweeps_used = 0;        // sweeps of the best start
  bool converged = false;     // every start met abs_tol before max_sweeps
  std::vector<double> per_start_values;
  int zero_gradient_events = 0;
  int monotonicity_violations = 0;
  double worst_decrease = 0.0;
};

OptimizationResult seesaw_max_abs_d(const DensityMatrix& rho, QubitIndex i,
                                    const OptimizerConfig& cfg = {});
OptimizationResult seesaw_max_abs_d(const PauliDecomposition& d, QubitIndex i,
                                    const OptimizerConfig& cfg = {});

OptimizationResult maximize_omega(const DensityMatrix& rho, const OptimizerConfig& cfg = {});
OptimizationResult maximize_omega(const PauliDecomposition& d, const OptimizerConfig& cfg = {});

namespace serial {
OptimizationResult seesaw_max_abs_d(const PauliDecomposition& d, QubitIndex i,
                                    const OptimizerConfig& cfg = {});
OptimizationResult maximize_omega(const PauliDecomposition& d, const OptimizerConfig& cfg = {});
}  // namespace serial

/// Settings with s_i = (cos th_i, sin th_i, 0)/sqrt2, t_i = (-sin th_i, cos th_i, 0)/sqrt2,
/// i.e. a_i = s_i + t_i, b_i = s_i - t_i.
MeasurementSettings planar_settings(double theta1, double theta2, double theta3);

/// 3/2 (cos S - sin S)^2 with S = theta1 + theta2 + theta3, the value of omega
/// for GHZ at planar_settings(theta1, theta2, theta3). Cross-checks the closed
/// form against omega(GHZ, settings) and throws ConsistencyError on a gap
/// above 1e-10.
double omega_planar_oracle(double theta1, double theta2, double theta3);

}  // namespace tribell
