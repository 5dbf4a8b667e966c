#include "tribell/quantum_core.hpp"

#include <array>
#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "tribell/errors.hpp"

namespace tribell {

QubitIndex::QubitIndex(int value) : value_(value) {
  if (value < 1 || value > 3) {
    throw ValidationError("qubit index must be 1, 2 or 3, got " + std::to_string(value));
  }
}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  const auto rows = entries_.rows();
  if (rows != entries_.cols() || (rows != 2 && rows != 4 && rows != 8)) {
    throw ValidationError("complex matrix must be square with dimension 2, 4 or 8");
  }
  if (!entries_.allFinite()) {
    throw ValidationError("complex matrix has non-finite entries");
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  return ComplexMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (dim() != rhs.dim()) throw ValidationError("matrix product dimension mismatch");
  return ComplexMatrix(entries_ * rhs.entries_);
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (dim() != rhs.dim()) throw ValidationError("matrix sum dimension mismatch");
  return ComplexMatrix(entries_ + rhs.entries_);
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (dim() != rhs.dim()) throw ValidationError("matrix difference dimension mismatch");
  return ComplexMatrix(entries_ - rhs.entries_);
}

ComplexMatrix ComplexMatrix::operator*(cplx scale) const {
  return ComplexMatrix(entries_ * scale);
}

double ComplexMatrix::hermitian_defect() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

double ComplexMatrix::distance(const ComplexMatrix& other) const {
  if (dim() != other.dim()) throw ValidationError("distance between matrices of different size");
  return (entries_ - other.entries_).cwiseAbs().maxCoeff();
}

Matrix8c ComplexMatrix::as8() const {
  if (dim() != 8) throw ValidationError("expected an 8x8 operator");
  return entries_;
}

namespace pauli_matrices {

namespace {
ComplexMatrix make2(cplx a, cplx b, cplx c, cplx d) {
  Eigen::MatrixXcd m(2, 2);
  m << a, b, c, d;
  return ComplexMatrix(std::move(m));
}
}  // namespace

ComplexMatrix identity() { return make2(1.0, 0.0, 0.0, 1.0); }
ComplexMatrix x() { return make2(0.0, 1.0, 1.0, 0.0); }
ComplexMatrix y() { return make2(0.0, cplx(0, -1), cplx(0, 1), 0.0); }
ComplexMatrix z() { return make2(1.0, 0.0, 0.0, -1.0); }

ComplexMatrix sigma(int k) {
  switch (k) {
    case 0: return identity();
    case 1: return x();
    case 2: return y();
    case 3: return z();
    default: throw ValidationError("Pauli index must be 0..3");
  }
}

}  // namespace pauli_matrices

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() * b.dim() > 8) {
    throw ValidationError("kron result would exceed 8x8 (" + std::to_string(a.dim()) + "x" +
                          std::to_string(b.dim()) + ")");
  }
  Eigen::MatrixXcd out = Eigen::kroneckerProduct(a.entries(), b.entries());
  return ComplexMatrix(std::move(out));
}

ComplexMatrix embed_single(const ComplexMatrix& op, QubitIndex slot) {
  if (op.dim() != 2) throw ValidationError("embed_single expects a 2x2 operator");
  const auto id = ComplexMatrix::identity(2);
  switch (slot.value()) {
    case 1: return kron(kron(op, id), id);
    case 2: return kron(kron(id, op), id);
    default: return kron(kron(id, id), op);
  }
}

namespace {

int bit(int index, int slot) { return (index >> (2 - slot)) & 1; }

}  // namespace

ComplexMatrix embed_pair(const ComplexMatrix& op, QubitIndex excluded) {
  if (op.dim() != 4) throw ValidationError("embed_pair expects a 4x4 operator");
  const int ex = excluded.slot();
  std::array<int, 2> kept{};
  for (int s = 0, n = 0; s < 3; ++s) {
    if (s != ex) kept[n++] = s;
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(8, 8);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      if (bit(r, ex) != bit(c, ex)) continue;
      const int pr = 2 * bit(r, kept[0]) + bit(r, kept[1]);
      const int pc = 2 * bit(c, kept[0]) + bit(c, kept[1]);
      out(r, c) = op(pr, pc);
    }
  }
  return ComplexMatrix(std::move(out));
}

double expectation_matrix(const ComplexMatrix& obs, const Matrix8c& rho) {
  if (obs.dim() != 8) throw ValidationError("expectation_matrix expects an 8x8 observable");
  if (!obs.is_hermitian()) {
    throw ValidationError("observable is not Hermitian (defect " +
                          std::to_string(obs.hermitian_defect()) + ")");
  }
  const cplx tr = (rho * obs.as8()).trace();
  if (std::abs(tr.imag()) >= kImagResidueTol) {
    throw ConsistencyError("expectation has imaginary residue " + std::to_string(tr.imag()));
  }
  return tr.real();
}

}  // namespace tribell
