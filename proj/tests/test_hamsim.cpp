// Copyright 2026 The qubitkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "hamsim_oracle.hpp"
#include "qubitkit/hamsim.hpp"
#include "test_util.hpp"

using namespace qubitkit;
using namespace qubitkit::hamsim;
using qubitkit::testing::DensePropagator;
using qubitkit::testing::l2_distance;
using qubitkit::testing::loglog_slope;

TEST_CASE("grid geometry and momentum ordering") {
  const Grid1D g(3, 8.0, 0.1);
  CHECK(g.points() == 8);
  CHECK(g.dx() == 1.0);
  CHECK(g.position(5) == 5.0);
  const double unit = 2.0 * std::numbers::pi / 8.0;
  CHECK(g.momentum(0) == 0.0);
  CHECK(g.momentum(3) == doctest::Approx(3 * unit));
  CHECK(g.momentum(4) == doctest::Approx(-4 * unit));
  CHECK(g.momentum(7) == doctest::Approx(-unit));

  CHECK_THROWS(Grid1D(2, 1.0, 0.1));
  CHECK_THROWS(Grid1D(4, 0.0, 0.1));
  CHECK_THROWS(Grid1D(4, 1.0, 0.0));
  CHECK_THROWS(Grid1D(4, std::numeric_limits<double>::infinity(), 0.1));
}

TEST_CASE("plane waves map to single momentum indices") {
  for (std::size_t m = 3; m <= 8; ++m) {
    const Grid1D g(m, 7.5, 0.01);
    for (std::size_t k = 0; k < g.points(); ++k) {
      std::vector<Complex> wave(g.points());
      for (std::size_t j = 0; j < g.points(); ++j) {
        wave[j] = std::polar(1.0, g.momentum(k) * g.position(j));
      }
      StateVector s = init_wavefunction(g, wave);
      to_momentum(s);
      CHECK(std::norm(s[k]) == doctest::Approx(1.0).epsilon(1e-10));
      to_position(s);
      for (std::size_t j = 0; j < g.points(); ++j) {
        CHECK(std::abs(s[j] - wave[j] / std::sqrt(double(g.points()))) < 1e-10);
      }
    }
  }
}

TEST_CASE("apply_phase_function changes only phases") {
  Rng rng(4);
  const StateVector s = qubitkit::testing::random_state(6, rng);
  auto t = s;
  apply_phase_function(t, [](std::size_t j) { return 0.37 * double(j * j) - 1.1; });
  for (std::size_t j = 0; j < s.size(); ++j) {
    CHECK(std::abs(std::abs(t[j]) - std::abs(s[j])) < 1e-15);
    const Complex expected = s[j] * std::polar(1.0, 0.37 * double(j * j) - 1.1);
    CHECK(std::abs(t[j] - expected) < 1e-14);
  }
  std::vector<double> bad(s.size(), 0.0);
  bad[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(apply_phase_function(t, bad), std::invalid_argument);
  CHECK_THROWS_AS(apply_phase_function(t, std::vector<double>(5, 0.0)), std::invalid_argument);
}

TEST_CASE("free evolution is exact in momentum space") {
  const Grid1D g(6, 20.0, 0.05);
  const auto h = SplitHamiltonian::free(g);
  const StateVector psi0 = init_wavefunction(g, gaussian_samples(g, 10.0, 1.5, 1.2));
  auto split = psi0;
  evolve(split, h, g, 40, SplitOrder::Lie);
  const DensePropagator exact(h);
  CHECK(l2_distance(split.amplitudes(), exact.evolve(psi0, 40 * g.dt)) < 1e-10);
}

TEST_CASE("split-operator evolution agrees with dense exp(-iHt)") {
  const Grid1D g(5, 10.0, 0.001);
  const auto h = SplitHamiltonian::harmonic(g);
  const DensePropagator exact(h);
  const StateVector psi0 = init_wavefunction(g, gaussian_samples(g, 4.0, 1.0, 0.5));
  auto s = psi0;
  evolve(s, h, g, 1000, SplitOrder::Strang);
  CHECK(l2_distance(s.amplitudes(), exact.evolve(psi0, 1.0)) < 1e-6);
}

TEST_CASE("convergence order: Lie is first order, Strang is second order") {
  const std::vector<double> dts{0.02, 0.01, 0.005};
  const double total = 1.0;
  std::vector<double> lie, strang;
  for (double dt : dts) {
    const Grid1D g(5, 10.0, dt);
    const auto h = SplitHamiltonian::harmonic(g);
    const DensePropagator exact(h);
    const StateVector psi0 = init_wavefunction(g, gaussian_samples(g, 4.0, 1.0, 0.5));
    const auto reference = exact.evolve(psi0, total);
    const auto steps = std::size_t(std::llround(total / dt));
    auto a = psi0;
    evolve(a, h, g, steps, SplitOrder::Lie);
    lie.push_back(l2_distance(a.amplitudes(), reference));
    auto b = psi0;
    evolve(b, h, g, steps, SplitOrder::Strang);
    strang.push_back(l2_distance(b.amplitudes(), reference));
  }
  CHECK(loglog_slope(dts, lie) == doctest::Approx(1.0).epsilon(0.2));
  CHECK(loglog_slope(dts, strang) == doctest::Approx(2.0).epsilon(0.1));
  for (std::size_t i = 0; i < dts.size(); ++i) CHECK(strang[i] < lie[i]);
}

TEST_CASE("norm is conserved over many steps") {
  const Grid1D g(6, 16.0, 0.01);
  const auto h = SplitHamiltonian::harmonic(g, 0.8);
  StateVector s = init_wavefunction(g, gaussian_samples(g, 6.0, 1.0, 1.0));
  for (int chunk = 0; chunk < 10; ++chunk) {
    evolve(s, h, g, 1000, SplitOrder::Strang);
    CHECK(std::abs(s.norm_squared() - 1.0) < 1e-9);
  }
}

TEST_CASE("backward evolution undoes forward evolution") {
  const Grid1D g(6, 12.0, 0.02);
  std::vector<double> v(g.points());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = 3.0 * std::cos(g.position(j));
  const auto h = SplitHamiltonian::with_quadratic_kinetic(g, v, 0.7);
  const StateVector psi0 = init_wavefunction(g, gaussian_samples(g, 5.0, 0.8, -2.0));
  for (SplitOrder order : {SplitOrder::Lie, SplitOrder::Strang}) {
    auto s = psi0;
    evolve(s, h, g, 300, order);
    CHECK(fidelity(s, psi0) < 0.99);
    evolve(s, h, g, 300, order, TimeDirection::Backward);
    CHECK(qubitkit::testing::max_deviation(s.amplitudes(), psi0.amplitudes()) < 1e-10);
  }
}

TEST_CASE("trotter_step is one Lie step") {
  const Grid1D g(4, 6.0, 0.03);
  const auto h = SplitHamiltonian::harmonic(g);
  const StateVector psi0 = init_wavefunction(g, gaussian_samples(g, 2.0, 0.7, 0.0));
  auto a = psi0;
  trotter_step(a, h, g);
  auto b = psi0;
  evolve(b, h, g, 1, SplitOrder::Lie);
  CHECK(qubitkit::testing::max_deviation(a.amplitudes(), b.amplitudes()) == 0.0);
}

TEST_CASE("observables") {
  SUBCASE("gaussian wave packet moments") {
    const Grid1D g(8, 40.0, 0.01);
    const double p0 = g.momentum(6);
    const auto h = SplitHamiltonian::free(g);
    const StateVector s = init_wavefunction(g, gaussian_samples(g, 15.0, 2.0, p0));
    const Observables o = observables(s, h, g);
    CHECK(o.norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(o.mean_x == doctest::Approx(15.0).epsilon(1e-6));
    CHECK(o.mean_p == doctest::Approx(p0).epsilon(1e-6));
    // <p^2>/2 = (p0^2 + 1/(2 sigma^2)) / 2 for a free gaussian
    CHECK(o.energy == doctest::Approx(0.5 * (p0 * p0 + 1.0 / 8.0)).epsilon(1e-6));
    CHECK(o.position_density.size() == g.points());
    CHECK(o.momentum_density.size() == g.points());
  }
  SUBCASE("harmonic ground state energy and stationarity") {
    const Grid1D g(7, 16.0, 0.01);
    const auto h = SplitHamiltonian::harmonic(g);
    const StateVector ground = init_wavefunction(g, gaussian_samples(g, 8.0, 1.0, 0.0));
    const Observables o = observables(ground, h, g);
    CHECK(o.energy == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(o.mean_p == doctest::Approx(0.0).epsilon(1e-12));
    auto s = ground;
    evolve(s, h, g, 200, SplitOrder::Strang);
    CHECK(fidelity(s, ground) > 1.0 - 1e-6);
  }
  SUBCASE("energy drift under Strang stays small") {
    const Grid1D g(6, 16.0, 0.005);
    const auto h = SplitHamiltonian::harmonic(g);
    StateVector s = init_wavefunction(g, gaussian_samples(g, 6.0, 1.0, 0.5));
    const double e0 = observables(s, h, g).energy;
    evolve(s, h, g, 1000, SplitOrder::Strang);
    CHECK(std::abs(observables(s, h, g).energy - e0) < 1e-3);
  }
}

TEST_CASE("validation") {
  const Grid1D g(4, 6.0, 0.03);
  const auto h = SplitHamiltonian::free(g);
  StateVector s = StateVector::basis(4, 0);
  CHECK_THROWS_AS(evolve(s, h, g, 0), std::invalid_argument);
  StateVector wrong = StateVector::basis(5, 0);
  CHECK_THROWS_AS(evolve(wrong, h, g, 1), std::invalid_argument);
  CHECK_THROWS(SplitHamiltonian::with_quadratic_kinetic(g, std::vector<double>(8, 0.0)));
  CHECK_THROWS(SplitHamiltonian::with_quadratic_kinetic(g, std::vector<double>(16, 0.0), 0.0));
  std::vector<double> nan_v(16, 0.0);
  nan_v[2] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS(SplitHamiltonian::with_quadratic_kinetic(g, nan_v));
  CHECK_THROWS(gaussian_samples(g, 1.0, 0.0, 0.0));
  CHECK_THROWS(init_wavefunction(g, std::vector<Complex>(16, 0.0)));
}
