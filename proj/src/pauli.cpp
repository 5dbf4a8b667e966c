#include "tribell/pauli.hpp"

#include <algorithm>
#include <cmath>

namespace tribell {

namespace {

// Pauli strings sigma_a x sigma_b x sigma_c are monomial: each row has one
// non-zero entry. Storing (column, value) per row makes tr(rho P) an 8-term sum.
struct PauliString {
  std::array<int, 8> col{};
  std::array<cplx, 8> val{};
};

const std::array<PauliString, 64>& pauli_strings() {
  static const std::array<PauliString, 64> table = [] {
    std::array<PauliString, 64> out{};
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        for (int c = 0; c < 4; ++c) {
          const auto m = kron(kron(pauli_matrices::sigma(a), pauli_matrices::sigma(b)),
                              pauli_matrices::sigma(c));
          auto& ps = out[16 * a + 4 * b + c];
          for (int r = 0; r < 8; ++r) {
            for (int col = 0; col < 8; ++col) {
              if (m(r, col) != cplx(0.0)) {
                ps.col[r] = col;
                ps.val[r] = m(r, col);
              }
            }
          }
        }
      }
    }
    return out;
  }();
  return table;
}

double trace_with(const Matrix8c& rho, const PauliString& p) {
  // tr(rho P) = sum_r (P rho)_rr = sum_r val[r] * rho(col[r], r)
  cplx acc = 0.0;
  for (int r = 0; r < 8; ++r) acc += p.val[r] * rho(p.col[r], r);
  return acc.real();
}

void add_string(Matrix8c& m, const PauliString& p, double coeff) {
  if (coeff == 0.0) return;
  for (int r = 0; r < 8; ++r) m(r, p.col[r]) += coeff * p.val[r];
}

}  // namespace

double PauliDecomposition::distance(const PauliDecomposition& o) const {
  double d = 0.0;
  d = std::max(d, (alpha - o.alpha).cwiseAbs().maxCoeff());
  d = std::max(d, (beta - o.beta).cwiseAbs().maxCoeff());
  d = std::max(d, (gamma - o.gamma).cwiseAbs().maxCoeff());
  d = std::max(d, (R - o.R).cwiseAbs().maxCoeff());
  d = std::max(d, (S - o.S).cwiseAbs().maxCoeff());
  d = std::max(d, (T - o.T).cwiseAbs().maxCoeff());
  for (int i = 0; i < 3; ++i) d = std::max(d, (Q[i] - o.Q[i]).cwiseAbs().maxCoeff());
  return d;
}

PauliDecomposition decompose(const DensityMatrix& rho) {
  const auto& table = pauli_strings();
  const Matrix8c& m = rho.matrix();
  auto coeff = [&](int a, int b, int c) { return trace_with(m, table[16 * a + 4 * b + c]); };

  PauliDecomposition d;
  for (int i = 0; i < 3; ++i) {
    d.alpha(i) = coeff(i + 1, 0, 0);
    d.beta(i) = coeff(0, i + 1, 0);
    d.gamma(i) = coeff(0, 0, i + 1);
    for (int j = 0; j < 3; ++j) {
      d.R(i, j) = coeff(i + 1, j + 1, 0);
      d.S(i, j) = coeff(i + 1, 0, j + 1);
      d.T(i, j) = coeff(0, i + 1, j + 1);
      for (int k = 0; k < 3; ++k) d.Q[i](j, k) = coeff(i + 1, j + 1, k + 1);
    }
  }
  return d;
}

Matrix8c reconstruct(const PauliDecomposition& d) {
  const auto& table = pauli_strings();
  auto at = [&](int a, int b, int c) -> const PauliString& { return table[16 * a + 4 * b + c]; };

  Matrix8c m = Matrix8c::Zero();
  add_string(m, at(0, 0, 0), 1.0);
  for (int i = 0; i < 3; ++i) {
    add_string(m, at(i + 1, 0, 0), d.alpha(i));
    add_string(m, at(0, i + 1, 0), d.beta(i));
    add_string(m, at(0, 0, i + 1), d.gamma(i));
    for (int j = 0; j < 3; ++j) {
      add_string(m, at(i + 1, j + 1, 0), d.R(i, j));
      add_string(m, at(i + 1, 0, j + 1), d.S(i, j));
      add_string(m, at(0, i + 1, j + 1), d.T(i, j));
      for (int k = 0; k < 3; ++k) add_string(m, at(i + 1, j + 1, k + 1), d.Q[i](j, k));
    }
  }
  return m / 8.0;
}

DensityMatrix reconstruct_state(const PauliDecomposition& d) { return DensityMatrix(reconstruct(d)); }

InvariantNorms invariant_norms(const PauliDecomposition& d) {
  InvariantNorms n;
  n.two_body = d.R.squaredNorm() + d.S.squaredNorm() + d.T.squaredNorm();
  double q2 = 0.0;
  for (const auto& slab : d.Q) q2 += slab.squaredNorm();
  n.q_local = q2 + d.alpha.squaredNorm() + d.beta.squaredNorm() + d.gamma.squaredNorm();
  return n;
}

double q_norm(const PauliDecomposition& d) {
  double q2 = 0.0;
  for (const auto& slab : d.Q) q2 += slab.squaredNorm();
  return std::sqrt(q2);
}

double contract_q(const PauliDecomposition& d, const Eigen::Vector3d& u, const Eigen::Vector3d& v,
                  const Eigen::Vector3d& w) {
  return u(0) * v.dot(d.Q[0] * w) + u(1) * v.dot(d.Q[1] * w) + u(2) * v.dot(d.Q[2] * w);
}

}  // namespace tribell
