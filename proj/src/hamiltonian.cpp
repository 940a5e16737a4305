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

#include "chargeq/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "chargeq/density.hpp"
#include "chargeq/errors.hpp"

namespace chargeq {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw InvalidParameterError(std::string(name) + " must be finite");
    }
}

}  // namespace

void validate(const QubitParams& q, double localization_factor) {
    require_finite(q.tc_ghz, "tc_ghz");
    require_finite(q.eps_init_ghz, "eps_init_ghz");
    if (q.tc_ghz <= 0) {
        throw InvalidParameterError("tc_ghz must be > 0");
    }
    if (std::abs(q.eps_init_ghz) < localization_factor * q.tc_ghz) {
        throw InvalidParameterError("eps_init_ghz too small to localize: |eps_init| >= " +
                                    std::to_string(localization_factor) + "*tc required");
    }
    if (q.latch_state_index != 0 && q.latch_state_index != 1) {
        throw InvalidParameterError("latch_state_index must be 0 or 1");
    }
    // The ground state at eps_init must be the outer (non-latching) dot:
    // eps > 0 localizes into |R>, eps < 0 into |L>.
    const int ground = q.eps_init_ghz > 0 ? 1 : 0;
    if (ground == q.latch_state_index) {
        throw InvalidParameterError(
            "eps_init_ghz sign localizes the electron into the latching state; flip the sign or "
            "latch_state_index");
    }
    if (q.eps_idle_ghz && !std::isfinite(*q.eps_idle_ghz)) {
        throw InvalidParameterError("eps_idle_ghz must be finite");
    }
}

void validate(const CoupledParams& p, double localization_factor) {
    validate(p.left, localization_factor);
    validate(p.right, localization_factor);
    require_finite(p.g_ghz, "g_ghz");
    require_finite(p.g_latch_ghz, "g_latch_ghz");
    if (p.g_ghz < 0) {
        throw InvalidParameterError("g_ghz must be >= 0");
    }
    if (p.g_latch_ghz < 0) {
        throw InvalidParameterError("g_latch_ghz must be >= 0");
    }
}

Eigen::Matrix2cd build_h1q(double eps_ghz, double tc_ghz) {
    require_finite(eps_ghz, "eps_ghz");
    require_finite(tc_ghz, "tc_ghz");
    Eigen::Matrix2cd h;
    h << 0.5 * eps_ghz, tc_ghz,  //
        tc_ghz, -0.5 * eps_ghz;
    return h;
}

Eigen::Matrix4cd build_h2q(double eps_l_ghz, double eps_r_ghz, double tc_l_ghz, double tc_r_ghz,
                           double g_ghz) {
    require_finite(eps_l_ghz, "eps_l_ghz");
    require_finite(eps_r_ghz, "eps_r_ghz");
    require_finite(tc_l_ghz, "tc_l_ghz");
    require_finite(tc_r_ghz, "tc_r_ghz");
    require_finite(g_ghz, "g_ghz");
    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    // Basis order {LL, LR, RL, RR}: index = 2*left + right, 0 = L, 1 = R.
    h(0, 0) = 0.5 * (eps_l_ghz + eps_r_ghz);
    h(1, 1) = 0.5 * (eps_l_ghz - eps_r_ghz);
    h(2, 2) = 0.5 * (-eps_l_ghz + eps_r_ghz);
    h(3, 3) = 0.5 * (-eps_l_ghz - eps_r_ghz) + g_ghz;
    h(0, 2) = h(2, 0) = tc_l_ghz;  // left-qubit flip
    h(1, 3) = h(3, 1) = tc_l_ghz;
    h(0, 1) = h(1, 0) = tc_r_ghz;  // right-qubit flip
    h(2, 3) = h(3, 2) = tc_r_ghz;
    return h;
}

Eigen::Matrix4cd build_h2q(double eps_l_ghz, double eps_r_ghz, const CoupledParams& p) {
    return build_h2q(eps_l_ghz, eps_r_ghz, p.left.tc_ghz, p.right.tc_ghz, p.g_ghz);
}

double splitting(double eps_ghz, double tc_ghz) {
    return std::hypot(eps_ghz, 2.0 * tc_ghz);
}

double conditional_detuning(double eps_ghz, bool control_in_latch_side, double g_ghz) {
    return control_in_latch_side ? eps_ghz + g_ghz : eps_ghz;
}

bool is_hermitian(const Eigen::MatrixXcd& m, double rel_tol) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

Rho2 pure_state2(int basis_index) {
    if (basis_index != 0 && basis_index != 1) {
        throw InvalidParameterError("basis_index must be 0 or 1");
    }
    Rho2 rho = Rho2::Zero();
    rho(basis_index, basis_index) = 1.0;
    return rho;
}

Rho4 pure_state4(int left_index, int right_index) {
    if ((left_index != 0 && left_index != 1) || (right_index != 0 && right_index != 1)) {
        throw InvalidParameterError("basis indices must be 0 or 1");
    }
    Rho4 rho = Rho4::Zero();
    const int b = 2 * left_index + right_index;
    rho(b, b) = 1.0;
    return rho;
}

bool is_valid_density(const Eigen::MatrixXcd& rho, double trace_tol, double herm_tol,
                      double eig_floor) {
    if (rho.rows() != rho.cols()) {
        return false;
    }
    if (std::abs(rho.trace().real() - 1.0) > trace_tol || std::abs(rho.trace().imag()) > trace_tol) {
        return false;
    }
    if (!is_hermitian(rho, herm_tol)) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= eig_floor;
}

}  // namespace chargeq
