#pragma once

// Dense complex operators on one, two and three qubits.
//
// Basis convention: |q1 q2 q3> with qubit 1 the leftmost (most significant)
// tensor factor, so |000>,|001>,...,|111> map to indices 0..7 and qubit 3 is
// the least significant bit.

#include <complex>

#include <Eigen/Dense>

namespace tribell {

using cplx = std::complex<double>;
using Matrix8c = Eigen::Matrix<cplx, 8, 8>;
using Vector8c = Eigen::Matrix<cplx, 8, 1>;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kImagResidueTol = 1e-10;

/// A qubit position 1, 2 or 3.
class QubitIndex {
 public:
  explicit QubitIndex(int value);

  int value() const { return value_; }
  // 0-based tensor slot.
  int slot() const { return value_ - 1; }

  friend bool operator==(QubitIndex, QubitIndex) = default;

 private:
  int value_;
};

/// Square complex matrix of dimension 2, 4 or 8 with finite entries.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(Eigen::MatrixXcd entries);

  static ComplexMatrix identity(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  cplx operator()(int r, int c) const { return entries_(r, c); }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(cplx scale) const;

  // Largest entrywise deviation from the conjugate transpose.
  double hermitian_defect() const;
  bool is_hermitian(double tol = kHermitianTol) const { return hermitian_defect() <= tol; }

  // Max-norm distance.
  double distance(const ComplexMatrix& other) const;

  Matrix8c as8() const;

 private:
  Eigen::MatrixXcd entries_;
};

namespace pauli_matrices {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
// sigma(0) = I, sigma(1..3) = X, Y, Z.
ComplexMatrix sigma(int k);
}  // namespace pauli_matrices

/// Kronecker product; rejects results larger than 8x8.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Places a 2x2 operator at `slot`, identity on the other two qubits.
ComplexMatrix embed_single(const ComplexMatrix& op, QubitIndex slot);

/// Places a 4x4 operator on the two qubits other than `excluded`, in ascending
/// slot order: the first tensor factor of `op` goes to the lower slot.
ComplexMatrix embed_pair(const ComplexMatrix& op, QubitIndex excluded);

/// Re tr(rho * obs) for a Hermitian 8x8 observable.
///
/// Throws ValidationError when `obs` is not Hermitian within 1e-10 and
/// ConsistencyError when the trace carries an imaginary part above 1e-10.
double expectation_matrix(const ComplexMatrix& obs, const Matrix8c& rho);

}  // namespace tribell
