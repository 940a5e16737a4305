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

#ifndef CHARGEQ_DAC_HPP
#define CHARGEQ_DAC_HPP

#include <cstddef>
#include <vector>

#include "chargeq/timeline.hpp"

namespace chargeq {

// Dual-DAC decomposition of a control pulse. Each DAC runs at 25 GS/s
// (40 ps/sample) with zero-order hold; the analog combiner sums both
// outputs, yielding a 50 GS/s (20 ps) effective waveform.
//
// dac_a carries +carrier plus every coarse step of the perturbation (steps
// on the 40 ps grid). dac_b carries -carrier plus the single fine step; its
// hold grid is delayed by phase_delay_ps, which places the fine edge with
// ps resolution while leaving every coarse sample untouched.
struct DacWaveformPair {
    std::vector<double> dac_a;
    std::vector<double> dac_b;
    double phase_delay_ps = 0.0;
    double sample_ps = 40.0;
};

struct DacSynthesisOptions {
    // Constant level cancelled between the two DACs. Zero keeps the combined
    // reconstruction bit-exact; a nonzero level shows the +W/-W+p structure
    // at the cost of one rounding per sample.
    double carrier_level = 0.0;
    std::size_t max_record_samples = 1u << 20;
};

/// Decomposes the channel's perturbation (detuning relative to the first
/// segment's level) into a DAC pair. All edges except the designated fine
/// segment's trailing edge must sit on the 40 ps grid.
DacWaveformPair synthesize_dac_pair(const TimelineChannel& channel,
                                    const DacSynthesisOptions& options = {});

/// Sum of both zero-order-hold outputs, resampled at 20 ps by window
/// averaging: samples whose window contains no level change reproduce the
/// held sum bit-exactly; a window straddling the fine edge is linearly
/// interpolated.
std::vector<double> combine_dacs(const DacWaveformPair& pair);

}  // namespace chargeq

#endif
