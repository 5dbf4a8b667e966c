#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "tribell/quantum_core.hpp"

namespace tribell {

/// Seedable generator with platform-independent output.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// derives uniform and Gaussian variates with explicit transforms instead of
/// the implementation-defined std distributions, so equal seeds give
/// bit-identical samples across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent stream for (seed, index), e.g. one per optimizer start.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }
  double uniform();  // [0, 1)
  double normal();   // standard Gaussian, Box-Muller
  cplx complex_normal();  // real and imaginary parts N(0, 1/2)

  Eigen::Vector3d unit_vector();
  // Haar-distributed 2x2 unitary.
  Eigen::Matrix2cd unitary2();
  // Square complex Ginibre matrix with `rank` columns (rows = dim).
  Eigen::MatrixXcd ginibre(int dim, int rank);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace tribell
