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

#ifndef CHARGEQ_HAMILTONIAN_HPP
#define CHARGEQ_HAMILTONIAN_HPP

#include <Eigen/Dense>

#include "chargeq/params.hpp"

namespace chargeq {

/// Single-qubit Hamiltonian (eps/2)*sigma_z + tc*sigma_x in the {L,R}
/// basis, entries in GHz: [[eps/2, tc], [tc, -eps/2]].
Eigen::Matrix2cd build_h1q(double eps_ghz, double tc_ghz);

/// Coupled Hamiltonian in the ordered basis {LL, LR, RL, RR}:
///   (epsL/2) sz(x)I + tcL sx(x)I + (epsR/2) I(x)sz + tcR I(x)sx
///   + (g/4)(I - sz)(x)(I - sz)
/// The coupling term adds +g to |RR> only.
Eigen::Matrix4cd build_h2q(double eps_l_ghz, double eps_r_ghz, const CoupledParams& p);
Eigen::Matrix4cd build_h2q(double eps_l_ghz, double eps_r_ghz, double tc_l_ghz, double tc_r_ghz,
                           double g_ghz);

/// Energy gap sqrt(eps^2 + 4 tc^2); equals 2 tc at the anti-crossing.
double splitting(double eps_ghz, double tc_ghz);

/// Applied detuning that realizes an effective detuning `eps` on the driven
/// qubit given the partner state: the capacitive term shifts the operating
/// point by +g when the partner occupies its sigma_z = -1 (|R>-side) state.
double conditional_detuning(double eps_ghz, bool control_in_latch_side, double g_ghz);

bool is_hermitian(const Eigen::MatrixXcd& m, double rel_tol = 1e-12);

}  // namespace chargeq

#endif
