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

#include "qubitkit/hamsim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qubitkit/qft.hpp"

namespace qubitkit::hamsim {
namespace {

void check_size(std::size_t got, const Grid1D& grid, const char* what) {
  if (got != grid.points()) {
    throw std::invalid_argument(std::string(what) + " has " + std::to_string(got) +
                                " samples, grid has " + std::to_string(grid.points()));
  }
}

void check_on_grid(const StateVector& state, const Grid1D& grid) {
  if (state.num_qubits() != grid.num_qubits) {
    throw std::invalid_argument("state has " + std::to_string(state.num_qubits()) +
                                " qubits, grid has " + std::to_string(grid.num_qubits));
  }
}

void scaled_phase(StateVector& state, std::span<const double> energy, double tau) {
  auto amps = state.mutable_amplitudes();
  for (std::size_t j = 0; j < amps.size(); ++j) amps[j] *= std::polar(1.0, -energy[j] * tau);
}

void potential_factor(StateVector& s, const SplitHamiltonian& h, double tau) {
  scaled_phase(s, h.potential, tau);
}

void kinetic_factor(StateVector& s, const SplitHamiltonian& h, double tau) {
  to_momentum(s);
  scaled_phase(s, h.kinetic, tau);
  to_position(s);
}

}  // namespace

Grid1D::Grid1D(std::size_t num_qubits_, double length_, double dt_)
    : num_qubits(num_qubits_), length(length_), dt(dt_) {
  if (num_qubits < 3 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("grid needs between 3 and " + std::to_string(kMaxQubits) +
                                " qubits");
  }
  if (!(length > 0.0) || !std::isfinite(length)) throw std::invalid_argument("grid length must be positive");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("time step must be positive");
}

double Grid1D::momentum(std::size_t k) const noexcept {
  const double n = double(points());
  const double kk = k < points() / 2 ? double(k) : double(k) - n;
  return 2.0 * std::numbers::pi * kk / length;
}

SplitHamiltonian SplitHamiltonian::with_quadratic_kinetic(const Grid1D& grid,
                                                          std::vector<double> potential,
                                                          double mass) {
  check_size(potential.size(), grid, "potential");
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  for (std::size_t j = 0; j < potential.size(); ++j) {
    if (!std::isfinite(potential[j])) {
      throw std::invalid_argument("potential is not finite at grid point " + std::to_string(j));
    }
  }
  SplitHamiltonian h;
  h.potential = std::move(potential);
  h.kinetic.resize(grid.points());
  for (std::size_t k = 0; k < grid.points(); ++k) {
    const double p = grid.momentum(k);
    h.kinetic[k] = p * p / (2.0 * mass);
  }
  return h;
}

SplitHamiltonian SplitHamiltonian::harmonic(const Grid1D& grid, double omega) {
  std::vector<double> v(grid.points());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double x = grid.position(j) - grid.length / 2.0;
    v[j] = 0.5 * omega * omega * x * x;
  }
  return with_quadratic_kinetic(grid, std::move(v));
}

SplitHamiltonian SplitHamiltonian::free(const Grid1D& grid) {
  return with_quadratic_kinetic(grid, std::vector<double>(grid.points(), 0.0));
}

StateVector init_wavefunction(const Grid1D& grid, std::vector<Complex> samples) {
  check_size(samples.size(), grid, "wavefunction");
  return StateVector::normalized(std::move(samples));
}

std::vector<Complex> gaussian_samples(const Grid1D& grid, double x0, double sigma, double p0) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian width must be positive");
  std::vector<Complex> psi(grid.points());
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const double x = grid.position(j);
    psi[j] = std::polar(std::exp(-(x - x0) * (x - x0) / (2.0 * sigma * sigma)), p0 * x);
  }
  return psi;
}

void apply_phase_function(StateVector& state, std::span<const double> phase) {
  if (phase.size() != state.size()) {
    throw std::invalid_argument("phase function has " + std::to_string(phase.size()) +
                                " values for " + std::to_string(state.size()) + " amplitudes");
  }
  for (std::size_t j = 0; j < phase.size(); ++j) {
    if (!std::isfinite(phase[j])) {
      throw std::invalid_argument("phase is not finite at index " + std::to_string(j));
    }
  }
  auto amps = state.mutable_amplitudes();
  for (std::size_t j = 0; j < amps.size(); ++j) amps[j] *= std::polar(1.0, phase[j]);
}

void apply_phase_function(StateVector& state, const std::function<double(std::size_t)>& phase) {
  std::vector<double> values(state.size());
  for (std::size_t j = 0; j < values.size(); ++j) values[j] = phase(j);
  apply_phase_function(state, values);
}

void to_momentum(StateVector& state) {
  apply_qft(state, QftSpec{QubitSpan{0, state.num_qubits()}, QftDirection::Inverse});
}

void to_position(StateVector& state) {
  apply_qft(state, QftSpec{QubitSpan{0, state.num_qubits()}, QftDirection::Forward});
}

void trotter_step(StateVector& state, const SplitHamiltonian& h, const Grid1D& grid) {
  evolve(state, h, grid, 1, SplitOrder::Lie, TimeDirection::Forward);
}

void evolve(StateVector& state, const SplitHamiltonian& h, const Grid1D& grid, std::size_t steps,
            SplitOrder order, TimeDirection direction) {
  check_on_grid(state, grid);
  check_size(h.potential.size(), grid, "potential");
  check_size(h.kinetic.size(), grid, "kinetic term");
  if (steps == 0) throw std::invalid_argument("evolution needs at least one step");

  const double dt = grid.dt;
  if (direction == TimeDirection::Forward) {
    for (std::size_t i = 0; i < steps; ++i) {
      if (order == SplitOrder::Lie) {
        potential_factor(state, h, dt);
        kinetic_factor(state, h, dt);
      } else {
        potential_factor(state, h, dt / 2);
        kinetic_factor(state, h, dt);
        potential_factor(state, h, dt / 2);
      }
    }
  } else {
    for (std::size_t i = 0; i < steps; ++i) {
      if (order == SplitOrder::Lie) {
        kinetic_factor(state, h, -dt);
        potential_factor(state, h, -dt);
      } else {
        potential_factor(state, h, -dt / 2);
        kinetic_factor(state, h, -dt);
        potential_factor(state, h, -dt / 2);
      }
    }
  }
}

Observables observables(const StateVector& state, const SplitHamiltonian& h, const Grid1D& grid) {
  check_on_grid(state, grid);
  Observables o;
  o.position_density = state.probabilities();
  StateVector momentum = state;
  to_momentum(momentum);
  o.momentum_density = momentum.probabilities();
  for (std::size_t j = 0; j < grid.points(); ++j) {
    o.norm += o.position_density[j];
    o.mean_x += grid.position(j) * o.position_density[j];
    o.mean_p += grid.momentum(j) * o.momentum_density[j];
    o.energy += h.potential[j] * o.position_density[j] + h.kinetic[j] * o.momentum_density[j];
  }
  return o;
}

}  // namespace qubitkit::hamsim
