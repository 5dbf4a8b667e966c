#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tribell/bell.hpp"
#include "tribell/errors.hpp"
#include "tribell/random.hpp"

using namespace tribell;
namespace pm = tribell::pauli_matrices;
using std::numbers::sqrt2;

namespace {

double op_norm(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m.entries());
  return eig.eigenvalues().cwiseAbs().maxCoeff();
}

const UnitVector3 kX{1, 0, 0};
const UnitVector3 kY{0, 1, 0};
const UnitVector3 kZ{0, 0, 1};

}  // namespace

TEST_CASE("observable examples") {
  CHECK(observable(kZ).distance(pm::z()) == 0.0);
  CHECK(observable(kX).distance(pm::x()) == 0.0);
  const auto diag = observable(UnitVector3(1 / sqrt2, 1 / sqrt2, 0));
  CHECK(diag.distance((pm::x() + pm::y()) * (1 / sqrt2)) < 1e-15);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(diag.entries());
  CHECK(std::abs(eig.eigenvalues()(0) + 1.0) < 1e-14);
  CHECK(std::abs(eig.eigenvalues()(1) - 1.0) < 1e-14);
  CHECK_THROWS_AS(UnitVector3(1, 1, 0), ValidationError);
}

TEST_CASE("derive_st examples") {
  auto st = derive_st(MeasurementSettings::uniform(kZ));
  CHECK(st.s[0] == Eigen::Vector3d(0, 0, 1));
  CHECK(st.t[0] == Eigen::Vector3d::Zero());

  st = derive_st(MeasurementSettings({kX, kX, kX}, {kY, kY, kY}));
  CHECK(std::abs(st.s[1].norm() - 1 / sqrt2) < 1e-15);
  CHECK(std::abs(st.t[1].norm() - 1 / sqrt2) < 1e-15);

  const UnitVector3 minus_x(-1, 0, 0);
  st = derive_st(MeasurementSettings({kX, kX, kX}, {minus_x, minus_x, minus_x}));
  CHECK(st.s[2] == Eigen::Vector3d::Zero());
  CHECK(st.t[2] == Eigen::Vector3d(1, 0, 0));

  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) CHECK_NOTHROW(derive_st(oracle::random_settings(rng)).validate());
}

TEST_CASE("wwzb_pair examples") {
  const UnitVector3 a3(1 / sqrt2, -1 / sqrt2, 0);
  const UnitVector3 b3(1 / sqrt2, 1 / sqrt2, 0);
  const MeasurementSettings m({kX, kZ, a3}, {kY, kZ, b3});
  const auto expect = (kron(pm::x(), pm::x()) - kron(pm::y(), pm::y())) * (1 / sqrt2);
  CHECK(wwzb_pair(m, QubitIndex(2)).distance(expect) < 1e-15);

  CHECK(wwzb_pair(MeasurementSettings::uniform(kZ), QubitIndex(1)).distance(kron(pm::z(), pm::z())) == 0.0);

  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = oracle::random_settings(rng);
    for (int i = 1; i <= 3; ++i) CHECK(op_norm(wwzb_pair(s, QubitIndex(i))) <= sqrt2 + 1e-9);
  }
}

TEST_CASE("bell_operator collapses to ZZZ and XXX for equal settings") {
  const auto zzz = kron(kron(pm::z(), pm::z()), pm::z());
  const auto xxx = kron(kron(pm::x(), pm::x()), pm::x());
  for (int i = 1; i <= 3; ++i) {
    CHECK(bell_operator(MeasurementSettings::uniform(kZ), QubitIndex(i)).distance(zzz) == 0.0);
    CHECK(bell_operator(MeasurementSettings::uniform(kX), QubitIndex(i)).distance(xxx) == 0.0);
  }
}

TEST_CASE("bell_operator for i=2 matches the explicit expansion") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = oracle::random_settings(rng);
    const Matrix8c lib = bell_operator(s, QubitIndex(2)).as8();
    CHECK((lib - oracle::explicit_d3_2(s)).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("bell_operator matches the C/D rewriting for every index and is Hermitian") {
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = oracle::random_settings(rng);
    for (int i = 1; i <= 3; ++i) {
      const auto op = bell_operator(s, QubitIndex(i));
      CHECK((op.as8() - oracle::cd_form(s, i)).cwiseAbs().maxCoeff() < 1e-14);
      CHECK(op.hermitian_defect() <= 1e-12);
    }
  }
}

TEST_CASE("expectation_bell examples") {
  const auto g = to_density(ghz());
  CHECK(std::abs(expectation_bell(g, MeasurementSettings::uniform(kX), QubitIndex(1)) - 1.0) < 1e-14);

  // <X (XX - YY)/sqrt2>_GHZ = (<XXX> - <XYY>)/sqrt2 = 2/sqrt2.
  const MeasurementSettings m({kX, kX, UnitVector3(1 / sqrt2, -1 / sqrt2, 0)},
                              {kX, kY, UnitVector3(1 / sqrt2, 1 / sqrt2, 0)});
  CHECK(std::abs(expectation_bell(g, m, QubitIndex(1)) - sqrt2) < 1e-14);

  for (int i = 1; i <= 3; ++i) {
    CHECK(std::abs(expectation_bell(to_density(product_000()), MeasurementSettings::uniform(kZ),
                                    QubitIndex(i)) - 1.0) < 1e-14);
  }
}

TEST_CASE("fast path examples") {
  Rng rng(4);
  const auto mixed = decompose(maximally_mixed());
  for (int trial = 0; trial < 10; ++trial) {
    const auto st = derive_st(oracle::random_settings(rng));
    for (int i = 1; i <= 3; ++i) CHECK(expectation_bell_fast(mixed, st, QubitIndex(i)) == 0.0);
  }
  const auto dg = decompose(to_density(ghz()));
  CHECK(std::abs(expectation_bell_fast(dg, derive_st(MeasurementSettings::uniform(kX)), QubitIndex(1)) - 1.0) <
        1e-12);
}

TEST_CASE("matrix and Pauli paths agree") {
  Rng rng(99);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rho = oracle::random_state(5000 + static_cast<std::uint64_t>(trial));
    const auto s = oracle::random_settings(rng);
    const QubitIndex i(1 + trial % 3);
    const double a = expectation_bell(rho, s, i);
    const double b = expectation_bell_fast(decompose(rho), derive_st(s), i);
    worst = std::max(worst, std::abs(a - b));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("universal sqrt2 and sphere bounds over random samples") {
  Rng rng(1234);
  double worst_d = 0.0;
  double worst_omega = 0.0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto d = decompose(oracle::random_state(90'000 + static_cast<std::uint64_t>(trial)));
    const auto st = derive_st(oracle::random_settings(rng));
    worst_d = std::max(worst_d, std::abs(expectation_bell_fast(d, st, QubitIndex(1 + trial % 3))));
    worst_omega = std::max(worst_omega, omega_fast(d, st));
  }
  CHECK(worst_d <= sqrt2 + 1e-9);
  CHECK(worst_omega <= 3.0 + 1e-9);
}

TEST_CASE("omega examples") {
  CHECK(std::abs(omega(to_density(ghz()), MeasurementSettings::uniform(kX)) - 3.0) < 1e-13);
  CHECK(std::abs(omega(to_density(product_000()), MeasurementSettings::uniform(kZ)) - 3.0) < 1e-13);
  Rng rng(6);
  CHECK(std::abs(omega(maximally_mixed(), oracle::random_settings(rng))) < 1e-15);
}

TEST_CASE("swapping a_i and b_i flips only the local term of D^(i)") {
  Rng rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = decompose(oracle::random_state(300 + static_cast<std::uint64_t>(trial)));
    auto raw = oracle::random_settings(rng).raw();
    const int k = trial % 3;
    const auto st = derive_st_raw(raw);
    std::swap(raw.a[k], raw.b[k]);
    const auto swapped = derive_st_raw(raw);
    CHECK((swapped.s[k] - st.s[k]).norm() == 0.0);
    CHECK((swapped.t[k] + st.t[k]).norm() == 0.0);
    const Eigen::Vector3d& local = k == 0 ? d.alpha : (k == 1 ? d.beta : d.gamma);
    const QubitIndex i(k + 1);
    const double before = expectation_bell_fast(d, st, i);
    const double after = expectation_bell_fast(d, swapped, i);
    CHECK(std::abs(after - (before - 2.0 * st.t[k].dot(local))) < 1e-12);
  }
}
