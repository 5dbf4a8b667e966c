#include "tribell/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tribell/errors.hpp"
#include "tribell/random.hpp"

namespace tribell {

PureState::PureState(const Vector8c& amplitudes, double tol) : amplitudes_(amplitudes) {
  if (!amplitudes_.allFinite()) throw ValidationError("pure state has non-finite amplitudes");
  const double n2 = amplitudes_.squaredNorm();
  if (std::abs(n2 - 1.0) > tol) {
    throw ValidationError("pure state norm invariant violated: sum |amplitude|^2 = " +
                          std::to_string(n2));
  }
}

DensityMatrix::DensityMatrix(const Matrix8c& matrix, double tol) : matrix_(matrix) {
  if (!matrix_.allFinite()) throw ValidationError("density matrix has non-finite entries");
  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol) {
    throw ValidationError("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
  }
  const cplx tr = matrix_.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw ValidationError("density matrix trace invariant violated: trace = " +
                          std::to_string(tr.real()));
  }
  const Matrix8c sym = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix8c> eig(sym, Eigen::EigenvaluesOnly);
  const double min_ev = eig.eigenvalues().minCoeff();
  if (min_ev < -tol) {
    throw ValidationError("density matrix is not positive semidefinite (eigenvalue " +
                          std::to_string(min_ev) + ")");
  }
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

void AcinParameters::validate() const {
  double total = 0.0;
  for (double l : lambda) {
    if (!std::isfinite(l) || l < 0.0) throw ValidationError("Acin lambda must be finite and >= 0");
    total += l * l;
  }
  if (std::abs(total - 1.0) > kPureNormTol) {
    throw ValidationError("Acin norm invariant violated: sum lambda^2 = " + std::to_string(total));
  }
  if (!(phi >= 0.0 && phi <= std::numbers::pi)) {
    throw ValidationError("Acin phase must lie in [0, pi]");
  }
}

std::string_view to_string(Bipartition p) {
  switch (p) {
    case Bipartition::Sep1_23: return "1-23";
    case Bipartition::Sep2_13: return "2-13";
    default: return "12-3";
  }
}

std::string_view to_string(SeparabilityClass c) {
  switch (c) {
    case SeparabilityClass::FullySeparable: return "fully-separable";
    case SeparabilityClass::Sep1_23: return "1-23";
    case SeparabilityClass::Sep2_13: return "2-13";
    default: return "12-3";
  }
}

std::optional<Bipartition> parse_bipartition(std::string_view label) {
  if (label == "1-23") return Bipartition::Sep1_23;
  if (label == "2-13") return Bipartition::Sep2_13;
  if (label == "12-3") return Bipartition::Sep12_3;
  return std::nullopt;
}

std::optional<SeparabilityClass> parse_separability_class(std::string_view label) {
  if (label == "fully-separable") return SeparabilityClass::FullySeparable;
  if (auto p = parse_bipartition(label)) return as_class(*p);
  return std::nullopt;
}

SeparabilityClass as_class(Bipartition p) {
  switch (p) {
    case Bipartition::Sep1_23: return SeparabilityClass::Sep1_23;
    case Bipartition::Sep2_13: return SeparabilityClass::Sep2_13;
    default: return SeparabilityClass::Sep12_3;
  }
}

QubitIndex separated_qubit(Bipartition p) {
  switch (p) {
    case Bipartition::Sep1_23: return QubitIndex(1);
    case Bipartition::Sep2_13: return QubitIndex(2);
    default: return QubitIndex(3);
  }
}

namespace {

Vector8c basis_ket(int index) {
  Vector8c v = Vector8c::Zero();
  v(index) = 1.0;
  return v;
}

}  // namespace

PureState ghz() { return generalized_ghz(std::numbers::pi / 4.0); }

PureState generalized_ghz(double alpha) {
  Vector8c v = Vector8c::Zero();
  v(0) = std::cos(alpha);
  v(7) = std::sin(alpha);
  return PureState(v);
}

PureState acin_state(const AcinParameters& p) {
  p.validate();
  Vector8c v = Vector8c::Zero();
  v(0b000) = p.lambda[0];
  v(0b100) = p.lambda[1] * std::polar(1.0, p.phi);
  v(0b101) = p.lambda[2];
  v(0b110) = p.lambda[3];
  v(0b111) = p.lambda[4];
  return PureState(v);
}

PureState canonical_biseparable(Bipartition partition, double alpha) {
  // Pair state cos(a)|01> - sin(a)|10> on the joined qubits (ascending
  // order), |0> on the separated one.
  const int sep = separated_qubit(partition).slot();
  int lo = -1;
  int hi = -1;
  for (int s = 0; s < 3; ++s) {
    if (s == sep) continue;
    (lo < 0 ? lo : hi) = s;
  }
  const int bit_lo = 1 << (2 - lo);
  const int bit_hi = 1 << (2 - hi);
  Vector8c v = Vector8c::Zero();
  v(bit_hi) = std::cos(alpha);   // |0>_lo |1>_hi
  v(bit_lo) = -std::sin(alpha);  // |1>_lo |0>_hi
  return PureState(v);
}

PureState w_state() {
  Vector8c v = Vector8c::Zero();
  const double amp = 1.0 / std::sqrt(3.0);
  v(0b001) = amp;
  v(0b010) = amp;
  v(0b100) = amp;
  return PureState(v);
}

PureState product_000() { return PureState(basis_ket(0)); }

PureState phi_plus_otimes_0() {
  Vector8c v = Vector8c::Zero();
  v(0b000) = std::numbers::sqrt2 / 2.0;
  v(0b110) = std::numbers::sqrt2 / 2.0;
  return PureState(v);
}

PureState plus_otimes_phi_plus() {
  // (|0>+|1>)/sqrt2 x (|00>+|11>)/sqrt2
  Vector8c v = Vector8c::Zero();
  for (int idx : {0b000, 0b011, 0b100, 0b111}) v(idx) = 0.5;
  return PureState(v);
}

PureState random_pure(std::uint64_t seed) {
  Rng rng(seed);
  Vector8c v;
  for (int k = 0; k < 8; ++k) v(k) = rng.complex_normal();
  v /= v.norm();
  return PureState(v, 1e-12);
}

DensityMatrix to_density(const PureState& psi) {
  const Vector8c& a = psi.amplitudes();
  Matrix8c rho = a * a.adjoint();
  // Normalize away the (<= 1e-9) norm slack of the input.
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

DensityMatrix maximally_mixed() { return DensityMatrix(Matrix8c::Identity() / 8.0); }

DensityMatrix mix(std::span<const DensityMatrix> states, std::span<const double> weights) {
  if (states.size() != weights.size() || states.empty()) {
    throw ValidationError("mix requires equally many states and weights (at least one)");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ValidationError("mix weights must be non-negative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("mix weights must sum to 1, got " + std::to_string(total));
  }
  Matrix8c acc = Matrix8c::Zero();
  for (std::size_t k = 0; k < states.size(); ++k) acc += weights[k] * states[k].matrix();
  return DensityMatrix(acc);
}

namespace {

ComplexMatrix ginibre_state(Rng& rng, int dim, FactorRank rank) {
  const Eigen::MatrixXcd g = rng.ginibre(dim, rank == FactorRank::Pure ? 1 : dim);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return ComplexMatrix(std::move(rho));
}

Matrix8c random_product(Rng& rng, SeparabilityClass cls, FactorRank rank) {
  if (cls == SeparabilityClass::FullySeparable) {
    const auto r1 = ginibre_state(rng, 2, rank);
    const auto r2 = ginibre_state(rng, 2, rank);
    const auto r3 = ginibre_state(rng, 2, rank);
    return kron(kron(r1, r2), r3).as8();
  }
  const QubitIndex sep = cls == SeparabilityClass::Sep1_23   ? QubitIndex(1)
                         : cls == SeparabilityClass::Sep2_13 ? QubitIndex(2)
                                                             : QubitIndex(3);
  const auto single = ginibre_state(rng, 2, rank);
  const auto pair = ginibre_state(rng, 4, rank);
  // Disjoint supports: the product of the two embeddings is the tensor product.
  return (embed_single(single, sep) * embed_pair(pair, sep)).as8();
}

}  // namespace

DensityMatrix random_in_class(SeparabilityClass cls, int n_mix, std::uint64_t seed,
                              FactorRank rank) {
  if (n_mix < 1) throw ValidationError("n_mix must be >= 1");
  Rng rng(seed);
  std::vector<double> weights(static_cast<std::size_t>(n_mix));
  double total = 0.0;
  for (double& w : weights) {
    w = -std::log(1.0 - rng.uniform());
    total += w;
  }
  Matrix8c acc = Matrix8c::Zero();
  for (double w : weights) acc += (w / total) * random_product(rng, cls, rank);
  acc = 0.5 * (acc + acc.adjoint());
  acc /= acc.trace().real();
  return DensityMatrix(acc);
}

DensityMatrix random_mixed(std::uint64_t seed) {
  Rng rng(seed);
  const Eigen::MatrixXcd g = rng.ginibre(8, 8);
  Matrix8c rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

PureState apply_local(const PureState& psi, const Eigen::Matrix2cd& u1, const Eigen::Matrix2cd& u2,
                      const Eigen::Matrix2cd& u3) {
  const auto u = kron(kron(ComplexMatrix(u1), ComplexMatrix(u2)), ComplexMatrix(u3));
  Vector8c out = u.as8() * psi.amplitudes();
  return PureState(out);
}

Eigen::Matrix2cd reduced_single(const DensityMatrix& rho, QubitIndex qubit) {
  const int s = qubit.slot();
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      // Trace over the other two qubits: their bits must agree.
      const int mask = 0b111 & ~(1 << (2 - s));
      if ((r & mask) != (c & mask)) continue;
      out((r >> (2 - s)) & 1, (c >> (2 - s)) & 1) += rho.matrix()(r, c);
    }
  }
  return out;
}

double expectation_matrix(const ComplexMatrix& obs, const DensityMatrix& rho) {
  return expectation_matrix(obs, rho.matrix());
}

}  // namespace tribell
