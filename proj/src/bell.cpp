#include "tribell/bell.hpp"

#include <cmath>
#include <string>

#include "tribell/errors.hpp"

namespace tribell {

UnitVector3::UnitVector3(double x, double y, double z) : UnitVector3(Eigen::Vector3d(x, y, z)) {}

UnitVector3::UnitVector3(const Eigen::Vector3d& v) : v_(v) {
  if (!v_.allFinite() || std::abs(v_.squaredNorm() - 1.0) > kUnitTol) {
    throw ValidationError("setting vector is not unit length (|v|^2 = " +
                          std::to_string(v_.squaredNorm()) + ")");
  }
}

MeasurementSettings::MeasurementSettings(std::array<UnitVector3, 3> a, std::array<UnitVector3, 3> b)
    : a_(std::move(a)), b_(std::move(b)) {}

MeasurementSettings::MeasurementSettings(const SettingVectors& raw)
    : a_{UnitVector3(raw.a[0]), UnitVector3(raw.a[1]), UnitVector3(raw.a[2])},
      b_{UnitVector3(raw.b[0]), UnitVector3(raw.b[1]), UnitVector3(raw.b[2])} {}

MeasurementSettings MeasurementSettings::uniform(const UnitVector3& v) {
  return MeasurementSettings({v, v, v}, {v, v, v});
}

SettingVectors MeasurementSettings::raw() const {
  SettingVectors out;
  for (int j = 0; j < 3; ++j) {
    out.a[j] = a_[j].vec();
    out.b[j] = b_[j].vec();
  }
  return out;
}

void DerivedSettingVectors::validate(double tol) const {
  for (int j = 0; j < 3; ++j) {
    if (std::abs(s[j].squaredNorm() + t[j].squaredNorm() - 1.0) > tol ||
        std::abs(s[j].dot(t[j])) > tol) {
      throw ValidationError("derived setting vectors violate |s|^2+|t|^2=1, s.t=0 at qubit " +
                            std::to_string(j + 1));
    }
  }
}

ComplexMatrix observable(const UnitVector3& v) { return observable_raw(v.vec()); }

ComplexMatrix observable_raw(const Eigen::Vector3d& v) {
  return pauli_matrices::x() * v(0) + pauli_matrices::y() * v(1) + pauli_matrices::z() * v(2);
}

DerivedSettingVectors derive_st(const MeasurementSettings& m) {
  auto st = derive_st_raw(m.raw());
  st.validate();
  return st;
}

DerivedSettingVectors derive_st_raw(const SettingVectors& raw) {
  DerivedSettingVectors st;
  for (int j = 0; j < 3; ++j) {
    st.s[j] = 0.5 * (raw.a[j] + raw.b[j]);
    st.t[j] = 0.5 * (raw.a[j] - raw.b[j]);
  }
  return st;
}

namespace {

// The two slots other than `excluded`, ascending.
std::array<int, 2> other_slots(int excluded) {
  std::array<int, 2> out{};
  for (int s = 0, n = 0; s < 3; ++s) {
    if (s != excluded) out[n++] = s;
  }
  return out;
}

}  // namespace

ComplexMatrix wwzb_pair(const MeasurementSettings& m, QubitIndex excluded) {
  return wwzb_pair_raw(m.raw(), excluded);
}

ComplexMatrix wwzb_pair_raw(const SettingVectors& raw, QubitIndex excluded) {
  const auto [p, q] = other_slots(excluded.slot());
  const auto ap = observable_raw(raw.a[p]);
  const auto bp = observable_raw(raw.b[p]);
  const auto aq = observable_raw(raw.a[q]);
  const auto bq = observable_raw(raw.b[q]);
  return (kron(ap, aq) + kron(ap, bq) + kron(bp, aq) - kron(bp, bq)) * 0.5;
}

ComplexMatrix bell_operator(const MeasurementSettings& m, QubitIndex i) {
  return bell_operator_raw(m.raw(), i);
}

ComplexMatrix bell_operator_raw(const SettingVectors& raw, QubitIndex i) {
  const int k = i.slot();
  const auto ai = observable_raw(raw.a[k]);
  const auto bi = observable_raw(raw.b[k]);
  const auto c = (ai + bi) * 0.5;
  const auto d = (ai - bi) * 0.5;
  return embed_pair(wwzb_pair_raw(raw, i), i) * embed_single(c, i) + embed_single(d, i);
}

double expectation_bell(const DensityMatrix& rho, const MeasurementSettings& m, QubitIndex i) {
  return expectation_matrix(bell_operator(m, i), rho);
}

double expectation_bell_fast(const PauliDecomposition& d, const DerivedSettingVectors& st,
                             QubitIndex i) {
  const int k = i.slot();
  const auto [p, q] = other_slots(k);
  // Contract Q with s_k in slot k and the given vectors in slots p, q.
  auto triple = [&](const Eigen::Vector3d& up, const Eigen::Vector3d& uq) {
    std::array<const Eigen::Vector3d*, 3> v{};
    v[k] = &st.s[k];
    v[p] = &up;
    v[q] = &uq;
    return contract_q(d, *v[0], *v[1], *v[2]);
  };
  const Eigen::Vector3d& local = k == 0 ? d.alpha : (k == 1 ? d.beta : d.gamma);
  return triple(st.s[p], st.s[q]) + triple(st.s[p], st.t[q]) + triple(st.t[p], st.s[q]) -
         triple(st.t[p], st.t[q]) + st.t[k].dot(local);
}

double omega(const DensityMatrix& rho, const MeasurementSettings& m) {
  double acc = 0.0;
  for (int i = 1; i <= 3; ++i) {
    const double e = expectation_bell(rho, m, QubitIndex(i));
    acc += e * e;
  }
  return acc;
}

double omega_fast(const PauliDecomposition& d, const DerivedSettingVectors& st) {
  double acc = 0.0;
  for (int i = 1; i <= 3; ++i) {
    const double e = expectation_bell_fast(d, st, QubitIndex(i));
    acc += e * e;
  }
  return acc;
}

}  // namespace tribell
