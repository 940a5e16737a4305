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

#ifndef CHARGEQ_PARAMS_HPP
#define CHARGEQ_PARAMS_HPP

#include <optional>

namespace chargeq {

/// Physical parameters of one double-dot charge qubit. All energies are
/// frequencies (value/h) in GHz, in the position basis {|L>, |R>} with
/// sigma_z|L> = +|L>.
struct QubitParams {
    double tc_ghz = 0.0;        // tunnel coupling t_c/h
    double eps_init_ghz = 0.0;  // initialization/readout detuning
    std::optional<double> eps_idle_ghz;  // idle parking detuning (conditional sequences)

    // Position-basis index (0 = |L>, 1 = |R>) of the inner-dot state, i.e.
    // the state that triggers latched readout. The left qubit of the chain
    // has its inner dot on the R side (index 1), the right qubit on the L
    // side (index 0).
    int latch_state_index = 1;
};

/// Two capacitively coupled charge qubits.
struct CoupledParams {
    QubitParams left;
    QubitParams right;
    double g_ghz = 0.0;        // capacitive coupling g/h
    double g_latch_ghz = 0.0;  // capacitive shift seen from a latched partner

    static CoupledParams make(QubitParams l, QubitParams r, double g_ghz) {
        return CoupledParams{l, r, g_ghz, g_ghz};
    }
    static CoupledParams make(QubitParams l, QubitParams r, double g_ghz, double g_latch_ghz) {
        return CoupledParams{l, r, g_ghz, g_latch_ghz};
    }
};

// Initialization must localize the electron in the outer dot:
// |eps_init| >= localization_factor * tc, with the sign putting the ground
// state on the non-latching side. Throws InvalidParameterError.
void validate(const QubitParams& q, double localization_factor = 5.0);
void validate(const CoupledParams& p, double localization_factor = 5.0);

}  // namespace chargeq

#endif
