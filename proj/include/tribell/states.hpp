#pragma once

// Three-qubit pure and mixed states and the generators used throughout the
// library: GHZ-type states, the five-amplitude canonical form, the canonical
// bi-separable pair state, and seeded random samplers for each separability
// class.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tribell/quantum_core.hpp"

namespace tribell {

inline constexpr double kPureNormTol = 1e-9;
inline constexpr double kDensityTol = 1e-10;

class PureState {
 public:
  /// Throws ValidationError if | sum |amp|^2 - 1 | > tol.
  explicit PureState(const Vector8c& amplitudes, double tol = kPureNormTol);

  const Vector8c& amplitudes() const { return amplitudes_; }
  cplx amplitude(int basis_index) const { return amplitudes_(basis_index); }
  double norm() const { return amplitudes_.norm(); }

 private:
  Vector8c amplitudes_;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and eigenvalues >= -tol.
  explicit DensityMatrix(const Matrix8c& matrix, double tol = kDensityTol);

  const Matrix8c& matrix() const { return matrix_; }
  double purity() const;

 private:
  Matrix8c matrix_;
};

/// Parameters of lambda0|000> + lambda1 e^{i phi}|100> + lambda2|101>
/// + lambda3|110> + lambda4|111>.
struct AcinParameters {
  std::array<double, 5> lambda{};
  double phi = 0.0;

  // Throws ValidationError on negative lambdas, sum lambda^2 != 1, or phi outside [0, pi].
  void validate() const;
};

enum class Bipartition { Sep1_23, Sep2_13, Sep12_3 };

// Bi-separable classes plus the fully separable set.
enum class SeparabilityClass { FullySeparable, Sep1_23, Sep2_13, Sep12_3 };

std::string_view to_string(Bipartition p);
std::string_view to_string(SeparabilityClass c);
std::optional<Bipartition> parse_bipartition(std::string_view label);
std::optional<SeparabilityClass> parse_separability_class(std::string_view label);
SeparabilityClass as_class(Bipartition p);

// The qubit that is split off from the other two.
QubitIndex separated_qubit(Bipartition p);

PureState ghz();
PureState generalized_ghz(double alpha);
PureState acin_state(const AcinParameters& p);
PureState canonical_biseparable(Bipartition partition, double alpha);
PureState w_state();
PureState product_000();
// (|000> + |110>)/sqrt2, Bell pair on qubits 1,2 with qubit 3 in |0>.
PureState phi_plus_otimes_0();
// |+> on qubit 1 with a Bell pair on qubits 2,3.
PureState plus_otimes_phi_plus();
PureState random_pure(std::uint64_t seed);

DensityMatrix to_density(const PureState& psi);
DensityMatrix maximally_mixed();
DensityMatrix mix(std::span<const DensityMatrix> states, std::span<const double> weights);

/// Rank of each random factor: Pure draws rank-1 Ginibre factors (pure
/// states), Full draws square Ginibre factors (generic full-rank states).
enum class FactorRank { Pure, Full };

/// Convex mixture of `n_mix` random product states across the class's cut,
/// weights uniform on the simplex.
DensityMatrix random_in_class(SeparabilityClass cls, int n_mix, std::uint64_t seed,
                              FactorRank rank = FactorRank::Full);

/// Full-rank Ginibre three-qubit state.
DensityMatrix random_mixed(std::uint64_t seed);

/// (U1 x U2 x U3) psi for 2x2 unitaries.
PureState apply_local(const PureState& psi, const Eigen::Matrix2cd& u1, const Eigen::Matrix2cd& u2,
                      const Eigen::Matrix2cd& u3);

/// Reduced state of one qubit.
Eigen::Matrix2cd reduced_single(const DensityMatrix& rho, QubitIndex qubit);

double expectation_matrix(const ComplexMatrix& obs, const DensityMatrix& rho);

}  // namespace tribell
