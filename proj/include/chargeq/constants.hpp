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

#ifndef CHARGEQ_CONSTANTS_HPP
#define CHARGEQ_CONSTANTS_HPP

namespace chargeq {

// Unit conventions used throughout:
//   - energies are stored as frequencies (E/h) in GHz
//   - times are ns at the physics layer, ps at the waveform layer
//   - accumulated phase is 2*pi*f_GHz*t_ns
inline constexpr double kPlanckEvS = 4.135667696e-15;  // eV*s
inline constexpr double kPlanckUevNs = 4.135667696;    // ueV*ns, i.e. kPlanckEvS * 1e6 * 1e9

// 1 ueV expressed as a frequency in GHz.
inline constexpr double kUevToGhz = 1.0 / kPlanckUevNs;

inline constexpr double kPsPerNs = 1000.0;

}  // namespace chargeq

#endif
