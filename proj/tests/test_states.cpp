#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tribell/errors.hpp"
#include "tribell/quantum_core.hpp"
#include "tribell/states.hpp"

using namespace tribell;
using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

double amp_distance(const PureState& a, const PureState& b) {
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

Vector8c ket(std::initializer_list<std::pair<int, cplx>> entries) {
  Vector8c v = Vector8c::Zero();
  for (const auto& [idx, val] : entries) v(idx) = val;
  return v;
}

}  // namespace

TEST_CASE("ghz amplitudes") {
  const auto g = ghz();
  CHECK(std::abs(g.amplitude(0) - 1.0 / sqrt2) < 1e-15);
  CHECK(std::abs(g.amplitude(7) - 1.0 / sqrt2) < 1e-15);
  CHECK(g.norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("generalized_ghz family") {
  CHECK(amp_distance(generalized_ghz(pi / 4), ghz()) < 1e-15);
  CHECK(amp_distance(generalized_ghz(0.0), product_000()) == 0.0);
  CHECK(generalized_ghz(pi / 6).norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("acin_state construction and validation") {
  AcinParameters p;
  p.lambda = {1 / sqrt2, 0, 0, 0, 1 / sqrt2};
  CHECK(amp_distance(acin_state(p), ghz()) < 1e-15);

  p.lambda = {1, 0, 0, 0, 0};
  CHECK(amp_distance(acin_state(p), product_000()) == 0.0);

  const double l = 1.0 / std::sqrt(5.0);
  p.lambda = {l, l, l, l, l};
  p.phi = pi / 2;
  const auto psi = acin_state(p);
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(psi.amplitude(0b100) - cplx(0, l)) < 1e-15);
  CHECK(std::abs(psi.amplitude(0b001)) == 0.0);

  AcinParameters bad;
  bad.lambda = {0.5, 0.5, 0, 0, 0};
  CHECK_THROWS_AS(acin_state(bad), ValidationError);
  bad.lambda = {1, 0, 0, 0, 0};
  bad.phi = 4.0;
  CHECK_THROWS_AS(acin_state(bad), ValidationError);
  bad.phi = -0.1;
  CHECK_THROWS_AS(acin_state(bad), ValidationError);
  bad.phi = 0.0;
  bad.lambda = {-1, 0, 0, 0, 0};
  CHECK_THROWS_AS(acin_state(bad), ValidationError);
}

TEST_CASE("canonical_biseparable examples") {
  const double h = 1 / sqrt2;
  CHECK(amp_distance(canonical_biseparable(Bipartition::Sep12_3, pi / 4),
                     PureState(ket({{0b010, h}, {0b100, -h}}))) < 1e-15);
  CHECK(amp_distance(canonical_biseparable(Bipartition::Sep12_3, 0.0),
                     PureState(ket({{0b010, 1.0}}))) == 0.0);
  // Qubit 1 in |0>, pair state on qubits 2,3.
  CHECK(amp_distance(canonical_biseparable(Bipartition::Sep1_23, pi / 4),
                     PureState(ket({{0b001, h}, {0b010, -h}}))) < 1e-15);
  CHECK(amp_distance(canonical_biseparable(Bipartition::Sep2_13, pi / 4),
                     PureState(ket({{0b001, h}, {0b100, -h}}))) < 1e-15);
}

TEST_CASE("canonical_biseparable leaves the separated qubit pure") {
  for (auto p : {Bipartition::Sep1_23, Bipartition::Sep2_13, Bipartition::Sep12_3}) {
    for (double alpha : {0.0, 0.3, pi / 4, 1.2, 2.9}) {
      const auto rho = to_density(canonical_biseparable(p, alpha));
      const Eigen::Matrix2cd red = reduced_single(rho, separated_qubit(p));
      CHECK(std::abs((red * red).trace().real() - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("w_state") {
  const auto w = w_state();
  CHECK(w.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(w.amplitude(7)) == 0.0);
}

TEST_CASE("random_pure is normalized and deterministic in the seed") {
  for (std::uint64_t seed : {0ull, 1ull, 42ull, 123456789ull}) {
    const auto a = random_pure(seed);
    CHECK(std::abs(a.norm() - 1.0) < 1e-12);
    const auto b = random_pure(seed);
    CHECK(a.amplitudes() == b.amplitudes());
  }
  CHECK(amp_distance(random_pure(1), random_pure(2)) > 1e-3);
}

TEST_CASE("to_density examples") {
  const auto rho = to_density(product_000());
  Matrix8c expect = Matrix8c::Zero();
  expect(0, 0) = 1.0;
  CHECK(rho.matrix() == expect);

  const auto g = to_density(ghz()).matrix();
  for (auto [r, c] : {std::pair{0, 0}, {0, 7}, {7, 0}, {7, 7}}) {
    CHECK(std::abs(g(r, c) - 0.5) < 1e-15);
  }
  CHECK(std::abs(g(3, 3)) == 0.0);

  for (std::uint64_t s = 0; s < 10; ++s) {
    CHECK(std::abs(to_density(random_pure(s)).purity() - 1.0) < 1e-10);
  }
}

TEST_CASE("DensityMatrix validation") {
  Matrix8c m = Matrix8c::Identity() / 8.0;
  m(0, 0) += 0.01;
  CHECK_THROWS_AS(DensityMatrix{m}, ValidationError);  // trace
  m = Matrix8c::Identity() / 8.0;
  m(0, 1) = 0.01;
  CHECK_THROWS_AS(DensityMatrix{m}, ValidationError);  // Hermiticity
  m = Matrix8c::Zero();
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{m}, ValidationError);  // PSD
}

TEST_CASE("mix examples and errors") {
  const auto g = to_density(ghz());
  {
    const std::array<DensityMatrix, 1> s{g};
    const std::array<double, 1> w{1.0};
    CHECK((mix(s, w).matrix() - g.matrix()).cwiseAbs().maxCoeff() == 0.0);
  }
  {
    Vector8c one = Vector8c::Zero();
    one(7) = 1.0;
    const std::array<DensityMatrix, 2> s{to_density(product_000()), to_density(PureState(one))};
    const std::array<double, 2> w{0.5, 0.5};
    Matrix8c expect = Matrix8c::Zero();
    expect(0, 0) = 0.5;
    expect(7, 7) = 0.5;
    CHECK(mix(s, w).matrix() == expect);
  }
  const std::array<DensityMatrix, 2> s{g, maximally_mixed()};
  const std::array<double, 2> bad_sum{0.5, 0.6};
  const std::array<double, 2> negative{1.5, -0.5};
  const std::array<double, 1> short_w{1.0};
  CHECK_THROWS_AS(mix(s, bad_sum), ValidationError);
  CHECK_THROWS_AS(mix(s, negative), ValidationError);
  CHECK_THROWS_AS(mix(s, short_w), ValidationError);
}

TEST_CASE("random_in_class produces valid states with the right product structure") {
  for (auto cls : {SeparabilityClass::FullySeparable, SeparabilityClass::Sep1_23,
                   SeparabilityClass::Sep2_13, SeparabilityClass::Sep12_3}) {
    for (int n_mix : {1, 3}) {
      for (auto rank : {FactorRank::Pure, FactorRank::Full}) {
        CHECK_NOTHROW(random_in_class(cls, n_mix, 77, rank));
      }
    }
  }
  // A single pure product: the separated qubit's reduced state is pure.
  for (auto p : {Bipartition::Sep1_23, Bipartition::Sep2_13, Bipartition::Sep12_3}) {
    const auto rho = random_in_class(as_class(p), 1, 9, FactorRank::Pure);
    const Eigen::Matrix2cd red = reduced_single(rho, separated_qubit(p));
    CHECK(std::abs((red * red).trace().real() - 1.0) < 1e-10);
    CHECK(std::abs(rho.purity() - 1.0) < 1e-10);
  }
  CHECK_THROWS_AS(random_in_class(SeparabilityClass::Sep1_23, 0, 1), ValidationError);
  CHECK(random_in_class(SeparabilityClass::Sep12_3, 2, 5).matrix() ==
        random_in_class(SeparabilityClass::Sep12_3, 2, 5).matrix());
}

TEST_CASE("label round trips") {
  for (auto c : {SeparabilityClass::FullySeparable, SeparabilityClass::Sep1_23,
                 SeparabilityClass::Sep2_13, SeparabilityClass::Sep12_3}) {
    CHECK(parse_separability_class(to_string(c)) == c);
  }
  CHECK_FALSE(parse_bipartition("3-12").has_value());
}
