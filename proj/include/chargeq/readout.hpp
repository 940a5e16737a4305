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

#ifndef CHARGEQ_READOUT_HPP
#define CHARGEQ_READOUT_HPP

#include <cmath>

#include "chargeq/errors.hpp"

namespace chargeq {

/// Latched-state readout model. The inner-dot population converts to a
/// latched (1,1) signal when reservoir loading beats charge relaxation; the
/// race gives an efficiency gamma_load / (gamma_load + 1/t1). `ideal`
/// bypasses the race with unit efficiency.
struct ReadoutModel {
    double gamma_load_per_ns = 1.0e3;
    double t1_ns = 10.0;
    double t_latch_ns = 150.0;  // informational: latched-state lifetime
    bool ideal = true;

    double efficiency() const {
        if (ideal) {
            return 1.0;
        }
        return 1.0 / (1.0 + 1.0 / (gamma_load_per_ns * t1_ns));
    }
};

inline void validate(const ReadoutModel& r) {
    if (!(r.gamma_load_per_ns > 0) || !(r.t1_ns > 0) || !(r.t_latch_ns > 0)) {
        throw InvalidParameterError("readout rates and lifetimes must be > 0");
    }
}

/// Probability that a qubit with inner-dot population p_inner produces a
/// latched signal.
inline double latched_signal(double p_inner, const ReadoutModel& r) {
    if (!(p_inner >= 0.0 && p_inner <= 1.0)) {
        throw InvalidParameterError("p_inner must lie in [0, 1]");
    }
    return p_inner * r.efficiency();
}

}  // namespace chargeq

#endif
