#pragma once

#include <array>

#include <Eigen/Dense>

#include "tribell/states.hpp"

namespace tribell {

/// Coefficients of rho = 1/8 (I + alpha_i s_i^1 + beta_i s_i^2 + gamma_i s_i^3
///   + R_ij s_i^1 s_j^2 + S_ij s_i^1 s_j^3 + T_ij s_i^2 s_j^3 + Q_ijk s_i^1 s_j^2 s_k^3).
///
/// Axes are stored 0-based (0 = x, 1 = y, 2 = z); Q[i](j, k) is Q_{i+1,j+1,k+1}.
struct PauliDecomposition {
  Eigen::Vector3d alpha = Eigen::Vector3d::Zero();
  Eigen::Vector3d beta = Eigen::Vector3d::Zero();
  Eigen::Vector3d gamma = Eigen::Vector3d::Zero();
  Eigen::Matrix3d R = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d S = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d T = Eigen::Matrix3d::Zero();
  std::array<Eigen::Matrix3d, 3> Q{Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero(),
                                   Eigen::Matrix3d::Zero()};

  double q(int i, int j, int k) const { return Q[i](j, k); }

  // Largest coefficient-wise difference.
  double distance(const PauliDecomposition& other) const;
};

struct InvariantNorms {
  double two_body = 0.0;  // |R|^2 + |S|^2 + |T|^2
  double q_local = 0.0;   // |Q|^2 + |alpha|^2 + |beta|^2 + |gamma|^2
};

PauliDecomposition decompose(const DensityMatrix& rho);

// Unvalidated 1/8 (I + ...) matrix; any coefficient set is allowed.
Matrix8c reconstruct(const PauliDecomposition& d);
// Same, but throws ValidationError if the result is not a valid state.
DensityMatrix reconstruct_state(const PauliDecomposition& d);

InvariantNorms invariant_norms(const PauliDecomposition& d);

/// |Q|. Bounded by [1, 2] for pure states; informational for mixed ones.
double q_norm(const PauliDecomposition& d);

/// sum_ijk Q_ijk u_i v_j w_k
double contract_q(const PauliDecomposition& d, const Eigen::Vector3d& u, const Eigen::Vector3d& v,
                  const Eigen::Vector3d& w);

}  // namespace tribell
