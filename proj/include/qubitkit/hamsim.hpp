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

/**
 * @file
 * Split-operator evolution of a discretized 1-D wavefunction stored in the
 * register amplitudes.
 *
 * Units: hbar = 1. Grid point j sits at x_j = j * dx with periodic
 * boundaries. After the position-to-momentum transform, index k holds
 * momentum p_k = 2 pi k / L for k < 2^{m-1} and 2 pi (k - 2^m) / L otherwise.
 */
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qubitkit/statevec.hpp"

namespace qubitkit::hamsim {

struct Grid1D {
  std::size_t num_qubits = 0;
  double length = 0.0;
  double dt = 0.0;

  Grid1D(std::size_t num_qubits, double length, double dt);

  std::size_t points() const noexcept { return std::size_t{1} << num_qubits; }
  double dx() const noexcept { return length / double(points()); }
  double position(std::size_t j) const noexcept { return double(j) * dx(); }
  double momentum(std::size_t k) const noexcept;
};

/// H = T(p) + V(x), both sampled on the grid.
struct SplitHamiltonian {
  std::vector<double> potential;  ///< V(x_j), one per grid point
  std::vector<double> kinetic;    ///< T(p_k), one per momentum index

  /// V from samples and T(p) = p^2 / (2 mass).
  static SplitHamiltonian with_quadratic_kinetic(const Grid1D& grid, std::vector<double> potential,
                                                 double mass = 1.0);
  /// V(x) = omega^2 (x - L/2)^2 / 2, T(p) = p^2 / 2.
  static SplitHamiltonian harmonic(const Grid1D& grid, double omega = 1.0);
  static SplitHamiltonian free(const Grid1D& grid);
};

enum class SplitOrder { Lie, Strang };
enum class TimeDirection { Forward, Backward };

/// Normalized register with c_j proportional to samples[j].
StateVector init_wavefunction(const Grid1D& grid, std::vector<Complex> samples);

/// exp(-(x - x0)^2 / (2 sigma^2) + i p0 x) sampled on the grid.
std::vector<Complex> gaussian_samples(const Grid1D& grid, double x0, double sigma, double p0);

/// c_j <- exp(i phase[j]) c_j.
void apply_phase_function(StateVector& state, std::span<const double> phase);
void apply_phase_function(StateVector& state, const std::function<double(std::size_t)>& phase);

/// Position basis to momentum basis and back; both are QFT circuits on the
/// whole register.
void to_momentum(StateVector& state);
void to_position(StateVector& state);

/// exp(-i V dt), to momentum space, exp(-i T dt), back to position space.
void trotter_step(StateVector& state, const SplitHamiltonian& h, const Grid1D& grid);

/// `steps` slices of length grid.dt. Strang splits the potential into half
/// steps around each kinetic step. Backward evolution applies the exact
/// adjoint of the forward sequence.
void evolve(StateVector& state, const SplitHamiltonian& h, const Grid1D& grid, std::size_t steps,
            SplitOrder order = SplitOrder::Lie, TimeDirection direction = TimeDirection::Forward);

struct Observables {
  std::vector<double> position_density;
  std::vector<double> momentum_density;
  double mean_x = 0.0;
  double mean_p = 0.0;
  double energy = 0.0;
  double norm = 0.0;
};

/// Simulator-side diagnostics (no collapse).
Observables observables(const StateVector& state, const SplitHamiltonian& h, const Grid1D& grid);

}  // namespace qubitkit::hamsim
