#pragma once

// Measurement settings and the three-qubit Bell operators
//
//   D^(i) = B^(i) (x) C_i + D_i,   C_i = (A_i + B_i)/2,  D_i = (A_i - B_i)/2,
//
// where B^(i) = 1/2 (A_p A_q + A_p B_q + B_p A_q - B_p B_q) is the two-qubit
// WWZB (CHSH/2) operator on the qubits p < q other than i. Tensor factors are
// interleaved by slot, so A_i always acts on qubit i.
//
// Expectations are available on two independent paths: an 8x8 matrix trace,
// and a contraction of the Pauli coefficients with s_i = (a_i + b_i)/2 and
// t_i = (a_i - b_i)/2.

#include <array>

#include <Eigen/Dense>

#include "tribell/pauli.hpp"
#include "tribell/quantum_core.hpp"
#include "tribell/states.hpp"

namespace tribell {

inline constexpr double kUnitTol = 1e-9;

class UnitVector3 {
 public:
  UnitVector3() : v_(0.0, 0.0, 1.0) {}
  UnitVector3(double x, double y, double z);
  explicit UnitVector3(const Eigen::Vector3d& v);

  const Eigen::Vector3d& vec() const { return v_; }
  double operator()(int k) const { return v_(k); }

 private:
  Eigen::Vector3d v_;
};

/// Raw setting vectors. Not required to be unit length: every expectation is
/// affine in each vector separately, which the optimizer exploits.
struct SettingVectors {
  std::array<Eigen::Vector3d, 3> a;
  std::array<Eigen::Vector3d, 3> b;
};

/// Six unit Bloch vectors a_1..a_3, b_1..b_3, indexed by qubit slot (0-based).
class MeasurementSettings {
 public:
  // All vectors along z.
  MeasurementSettings() = default;
  MeasurementSettings(std::array<UnitVector3, 3> a, std::array<UnitVector3, 3> b);
  // Validates every vector.
  explicit MeasurementSettings(const SettingVectors& raw);

  // All a_j = b_j = v.
  static MeasurementSettings uniform(const UnitVector3& v);

  const UnitVector3& a(int slot) const { return a_[slot]; }
  const UnitVector3& b(int slot) const { return b_[slot]; }
  SettingVectors raw() const;

 private:
  std::array<UnitVector3, 3> a_;
  std::array<UnitVector3, 3> b_;
};

struct DerivedSettingVectors {
  std::array<Eigen::Vector3d, 3> s;
  std::array<Eigen::Vector3d, 3> t;

  // Throws ValidationError unless |s|^2 + |t|^2 = 1 and s.t = 0 per qubit.
  void validate(double tol = kUnitTol) const;
};

/// v . sigma
ComplexMatrix observable(const UnitVector3& v);
ComplexMatrix observable_raw(const Eigen::Vector3d& v);

DerivedSettingVectors derive_st(const MeasurementSettings& m);
DerivedSettingVectors derive_st_raw(const SettingVectors& raw);

/// Two-qubit WWZB operator on the qubits other than `excluded`, lower slot first.
ComplexMatrix wwzb_pair(const MeasurementSettings& m, QubitIndex excluded);
ComplexMatrix wwzb_pair_raw(const SettingVectors& raw, QubitIndex excluded);

/// D^(i) as an 8x8 Hermitian matrix.
ComplexMatrix bell_operator(const MeasurementSettings& m, QubitIndex i);
ComplexMatrix bell_operator_raw(const SettingVectors& raw, QubitIndex i);

/// Re tr(rho D^(i)) via the full matrix.
double expectation_bell(const DensityMatrix& rho, const MeasurementSettings& m, QubitIndex i);

/// The same value from Pauli coefficients. For i = 1:
///   s1 s2 s3.Q + s1 s2 t3.Q + s1 t2 s3.Q - s1 t2 t3.Q + t1.alpha
/// and analogously with beta / gamma for i = 2 / 3.
double expectation_bell_fast(const PauliDecomposition& d, const DerivedSettingVectors& st,
                             QubitIndex i);

/// Sum of the squared expectations of D^(1..3) at a single setting.
double omega(const DensityMatrix& rho, const MeasurementSettings& m);
double omega_fast(const PauliDecomposition& d, const DerivedSettingVectors& st);

}  // namespace tribell
