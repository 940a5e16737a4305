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

#ifndef CHARGEQ_DENSITY_HPP
#define CHARGEQ_DENSITY_HPP

#include <Eigen/Dense>

namespace chargeq {

using Rho2 = Eigen::Matrix2cd;
using Rho4 = Eigen::Matrix4cd;

/// |b><b| for a position basis state b in {0 = L, 1 = R}.
Rho2 pure_state2(int basis_index);

/// |lr><lr| in the {LL, LR, RL, RR} basis; l and r in {0 = L, 1 = R}.
Rho4 pure_state4(int left_index, int right_index);

/// Hermitian, unit trace, eigenvalues >= eig_floor.
bool is_valid_density(const Eigen::MatrixXcd& rho, double trace_tol = 1e-12,
                      double herm_tol = 1e-12, double eig_floor = -1e-10);

}  // namespace chargeq

#endif
