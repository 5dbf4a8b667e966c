#include "tribell/random.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace tribell {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x7b3e11u};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return Rng((static_cast<std::uint64_t>(words[0]) << 32) | words[1]);
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - uniform() lies in (0, 1], keeping the log finite.
  const double radius = std::sqrt(-2.0 * std::log(1.0 - uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

cplx Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

Eigen::Vector3d Rng::unit_vector() {
  for (;;) {
    Eigen::Vector3d v(normal(), normal(), normal());
    const double n = v.norm();
    if (n > 1e-12) return v / n;
  }
}

Eigen::Matrix2cd Rng::unitary2() {
  Eigen::Matrix2cd g;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) g(r, c) = complex_normal();
  }
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
  Eigen::Matrix2cd q = qr.householderQ();
  const Eigen::Matrix2cd rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  // Absorb the phases of diag(R) so Q is Haar rather than QR-convention biased.
  for (int c = 0; c < 2; ++c) {
    const cplx d = rmat(c, c);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(c) *= d / mag;
  }
  return q;
}

Eigen::MatrixXcd Rng::ginibre(int dim, int rank) {
  Eigen::MatrixXcd g(dim, rank);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < rank; ++c) g(r, c) = complex_normal();
  }
  return g;
}

}  // namespace tribell
