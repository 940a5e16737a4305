// Copyright 2026 The chargeq Authors
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

#ifndef CHARGEQ_PROPAGATE_HPP
#define CHARGEQ_PROPAGATE_HPP

#include <span>
#include <unordered_map>
#include <vector>

#include "chargeq/density.hpp"
#include "chargeq/params.hpp"
#include "chargeq/timeline.hpp"

namespace chargeq {

enum class Qubit { kLeft, kRight };

// Memoized Hermitian eigendecompositions. Not thread safe; use one per
// thread. Results are identical with or without a cache.
class EigCache {
   public:
    struct Eig2 {
        Eigen::Matrix2cd vectors;
        Eigen::Vector2d values;
    };
    struct Eig4 {
        Eigen::Matrix4cd vectors;
        Eigen::Vector4d values;
    };

    const Eig2& get2(double eps_ghz, double tc_ghz);
    const Eig4& get4(double eps_l_ghz, double eps_r_ghz, double tc_l_ghz, double tc_r_ghz,
                     double g_ghz);

   private:
    std::unordered_map<std::uint64_t, Eig2> map2_;
    std::unordered_map<std::uint64_t, Eig4> map4_;
};

/// Exact piecewise-constant evolution of the von Neumann equation: per
/// maximal interval where every channel is constant, rho -> U rho U+ with
/// U = exp(-i 2 pi H dt) from the eigendecomposition of the Hamiltonian at
/// that interval's detunings. Two-channel ("L", "R") timelines evolve under
/// the coupled 4x4 Hamiltonian, single-channel ones under the 2x2.
Rho4 propagate_piecewise(const Rho4& rho0, const Timeline& tl, const CoupledParams& params,
                         EigCache* cache = nullptr);
Rho2 propagate_piecewise(const Rho2& rho0, const Timeline& tl, const QubitParams& qubit,
                         EigCache* cache = nullptr);

/// As propagate_piecewise, but returns the state at each requested time
/// (ascending, within the timeline span). From `latch_switch_ps` onward the
/// coupling constant switches from g to g_latch, modelling a partner that
/// has been projected into its latched charge state.
std::vector<Rho4> propagate_snapshots(const Rho4& rho0, const Timeline& tl,
                                      const CoupledParams& params,
                                      std::span<const double> times_ps,
                                      double latch_switch_ps, EigCache* cache = nullptr);
std::vector<Rho2> propagate_snapshots(const Rho2& rho0, const Timeline& tl,
                                      const QubitParams& qubit, std::span<const double> times_ps,
                                      EigCache* cache = nullptr);

/// Population of the latch-triggering (inner-dot) state of the chosen
/// qubit, traced over the other qubit.
double excited_population(const Rho4& rho, Qubit which, const CoupledParams& params);
double excited_population(const Rho2& rho, const QubitParams& qubit);

}  // namespace chargeq

#endif
