#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tribell/errors.hpp"
#include "tribell/optimize.hpp"
#include "tribell/random.hpp"

using namespace tribell;
using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

void check_result_contract(const OptimizationResult& r, const DensityMatrix& rho, QubitIndex i) {
  CHECK(r.value == *std::max_element(r.per_start_values.begin(), r.per_start_values.end()));
  CHECK(std::abs(std::abs(expectation_bell(rho, r.settings, i)) - r.value) < 1e-10);
  CHECK(std::abs(expectation_bell(rho, r.settings, i) - r.signed_value) < 1e-10);
  CHECK(r.monotonicity_violations == 0);
  CHECK(r.value <= sqrt2 + 1e-9);
}

bool same(const OptimizationResult& a, const OptimizationResult& b) {
  bool eq = a.value == b.value && a.signed_value == b.signed_value && a.sweeps_used == b.sweeps_used &&
            a.per_start_values == b.per_start_values && a.converged == b.converged;
  for (int j = 0; j < 3; ++j) {
    eq = eq && a.settings.a(j).vec() == b.settings.a(j).vec() && a.settings.b(j).vec() == b.settings.b(j).vec();
  }
  return eq;
}

}  // namespace

TEST_CASE("OptimizerConfig validation") {
  OptimizerConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.n_starts = 0;
  CHECK_THROWS_AS(seesaw_max_abs_d(maximally_mixed(), QubitIndex(1), cfg), ValidationError);
  cfg = {};
  cfg.max_sweeps = 0;
  CHECK_THROWS_AS(maximize_omega(maximally_mixed(), cfg), ValidationError);
  cfg = {};
  cfg.abs_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
}

TEST_CASE("see-saw reaches sqrt2 on GHZ for every index") {
  const auto rho = to_density(ghz());
  for (int i = 1; i <= 3; ++i) {
    const auto r = seesaw_max_abs_d(rho, QubitIndex(i));
    CHECK(std::abs(r.value - sqrt2) < 1e-6);
    check_result_contract(r, rho, QubitIndex(i));
  }
}

TEST_CASE("see-saw saturates the fully separable bound on |000>") {
  const auto rho = to_density(product_000());
  for (int i = 1; i <= 3; ++i) {
    const auto r = seesaw_max_abs_d(rho, QubitIndex(i));
    CHECK(std::abs(r.value - 1.0) < 1e-6);
    check_result_contract(r, rho, QubitIndex(i));
  }
}

TEST_CASE("see-saw on |+> x Phi+ reaches sqrt2 only on index 1") {
  const auto rho = to_density(plus_otimes_phi_plus());
  const auto r1 = seesaw_max_abs_d(rho, QubitIndex(1));
  CHECK(std::abs(r1.value - sqrt2) < 1e-6);
  for (int i = 2; i <= 3; ++i) {
    const auto r = seesaw_max_abs_d(rho, QubitIndex(i));
    CHECK(r.value <= 1.0 + 1e-6);
    check_result_contract(r, rho, QubitIndex(i));
  }
}

TEST_CASE("maximize_omega examples") {
  CHECK(std::abs(maximize_omega(to_density(product_000())).value - 3.0) < 1e-6);
  const auto mixed = maximize_omega(maximally_mixed());
  CHECK(std::abs(mixed.value) < 1e-9);
  CHECK(mixed.zero_gradient_events > 0);
}

TEST_CASE("maximize_omega result reproduces omega at its settings") {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const auto rho = oracle::random_state(40 + s);
    const auto r = maximize_omega(rho);
    CHECK(std::abs(omega(rho, r.settings) - r.value) < 1e-10);
    CHECK(r.monotonicity_violations == 0);
  }
}

// Registered as a separate ctest entry; see README.
TEST_CASE("sphere bound: maximize_omega on GHZ saturates 3") {
  CHECK(std::abs(maximize_omega(to_density(ghz())).value - 3.0) < 1e-6);
}

TEST_CASE("sphere bound: maximize_omega never exceeds 3") {
  for (std::uint64_t s = 0; s < 6; ++s) CHECK(maximize_omega(oracle::random_state(40 + s)).value <= 3.0 + 1e-9);
}

TEST_CASE("GHZ exceeds omega = 3 at an in-plane setting") {
  // Unequal |s_j| and |t_j|, all vectors in the x-y plane.
  const std::array<double, 6> angle{-1.892628, -2.791760, -2.387621, -0.902502, -1.801633, -1.397494};
  SettingVectors v;
  for (int j = 0; j < 3; ++j) {
    v.a[j] = Eigen::Vector3d(std::cos(angle[j]), std::sin(angle[j]), 0.0);
    v.b[j] = Eigen::Vector3d(std::cos(angle[3 + j]), std::sin(angle[3 + j]), 0.0);
  }
  const MeasurementSettings m(v);
  const auto rho = to_density(ghz());
  double w = 0.0;
  for (int i = 1; i <= 3; ++i) {
    const double e = oracle::expectation(rho.matrix(), oracle::cd_form(m, i));
    CHECK(e > 1.14);
    w += e * e;
  }
  CHECK(w > 3.94);
  CHECK(std::abs(omega(rho, m) - w) < 1e-12);
  CHECK(maximize_omega(rho).value >= w - 1e-9);
}

TEST_CASE("zero gradient keeps the previous vector") {
  const auto r = seesaw_max_abs_d(maximally_mixed(), QubitIndex(2));
  CHECK(r.value == 0.0);
  CHECK(r.zero_gradient_events > 0);
}

TEST_CASE("planar omega oracle") {
  CHECK(std::abs(omega_planar_oracle(-pi / 4, 0, 0) - 3.0) < 1e-12);
  CHECK(std::abs(omega_planar_oracle(pi / 12, pi / 12, pi / 12)) < 1e-12);
  CHECK(std::abs(omega_planar_oracle(0.4, -0.1, -0.3) - 1.5) < 1e-12);
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    CHECK_NOTHROW(omega_planar_oracle(2 * pi * rng.uniform(), 2 * pi * rng.uniform(), 2 * pi * rng.uniform()));
  }
}

TEST_CASE("parallel and serial drivers agree bit for bit and are reproducible") {
  OptimizerConfig cfg;
  cfg.n_starts = 8;
  cfg.seed = 77;
  for (std::uint64_t s = 0; s < 4; ++s) {
    const auto d = decompose(oracle::random_state(s));
    const auto par = seesaw_max_abs_d(d, QubitIndex(2), cfg);
    CHECK(same(par, serial::seesaw_max_abs_d(d, QubitIndex(2), cfg)));
    CHECK(same(par, seesaw_max_abs_d(d, QubitIndex(2), cfg)));
    CHECK(same(maximize_omega(d, cfg), serial::maximize_omega(d, cfg)));
  }
}

TEST_CASE("optimal value is local-unitary invariant") {
  Rng rng(404);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto psi = random_pure(8000 + s);
    const auto moved = apply_local(psi, rng.unitary2(), rng.unitary2(), rng.unitary2());
    const QubitIndex i(1 + static_cast<int>(s % 3));
    const double before = seesaw_max_abs_d(to_density(psi), i).value;
    const double after = seesaw_max_abs_d(to_density(moved), i).value;
    CHECK(std::abs(before - after) < 1e-5);
  }
}

TEST_CASE("planar grid never beats the see-saw") {
  std::vector<DensityMatrix> states{to_density(ghz())};
  for (auto p : {Bipartition::Sep1_23, Bipartition::Sep2_13, Bipartition::Sep12_3}) {
    states.push_back(to_density(canonical_biseparable(p, pi / 4)));
    states.push_back(to_density(canonical_biseparable(p, pi / 7)));
  }
  for (const auto& rho : states) {
    for (int i = 1; i <= 3; ++i) {
      const double best = seesaw_max_abs_d(rho, QubitIndex(i)).value;
      CHECK(oracle::planar_grid_max(rho, i) <= best + 1e-6);
    }
  }
}
