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

#ifndef CHARGEQ_TIMELINE_HPP
#define CHARGEQ_TIMELINE_HPP

#include <map>
#include <string>
#include <vector>

#include "chargeq/params.hpp"
#include "chargeq/pulse.hpp"

namespace chargeq {

struct TimelineSegment {
    double start_ps = 0.0;
    double end_ps = 0.0;
    double eps_ghz = 0.0;
    bool fine = false;
    std::string label;

    double duration_ps() const { return end_ps - start_ps; }
};

struct TimelineChannel {
    std::string name;
    std::vector<TimelineSegment> segments;  // contiguous, sorted, start >= 0

    double start_ps() const { return segments.empty() ? 0.0 : segments.front().start_ps; }
    double end_ps() const { return segments.empty() ? 0.0 : segments.back().end_ps; }
    double eps_at(double t_ps) const;
    // Start of the last segment, used as the per-channel readout entry time.
    double measure_time_ps() const;
};

struct Timeline {
    std::vector<TimelineChannel> channels;

    double end_ps() const;
    const TimelineChannel* find(const std::string& name) const;
    // Extends each channel's final segment so all channels share one end time.
    void pad_to_common_end();
    // Throws TimelineError if any channel is non-contiguous, unsorted, or
    // starts before t = 0.
    void validate() const;
};

// Helper for programmatic construction: appends a segment after the current
// channel end. Zero-duration segments are skipped.
void append_segment(TimelineChannel& channel, double eps_ghz, double dur_ps,
                    const std::string& label, bool fine = false);

/// Numeric values for the symbols a program leaves open (sweep variables).
struct SweepBindings {
    std::map<std::string, double> ghz;
    std::map<std::string, double> ps;
};

/// Resolves symbols and sync offsets into a concrete per-channel schedule.
///
/// Channel names "L" and "R" select the left/right QubitParams. Built-in
/// detuning symbols: "init" and "readout" map to eps_init, "idle" to
/// eps_idle, "anticrossing" to the conditional anti-crossing location (g for
/// the left channel, 0 for the right, with the partner initialized).
/// A positive sync offset delays the channel by holding its initial level.
Timeline compile_timeline(const PulseProgram& program, const CoupledParams& params,
                          const SweepBindings& sweep = {});

struct QuantizeResult {
    Timeline timeline;
    // Per channel, per segment: requested minus quantized duration (ps).
    std::vector<std::vector<double>> residuals_ps;
};

/// Rounds coarse segment durations to the nearest multiple of grid_ps (ties
/// round up); fine segments round to fine_resolution_ps. Idempotent.
QuantizeResult quantize_durations(const Timeline& tl, double grid_ps = 40.0,
                                  double fine_resolution_ps = 1.0);

/// Replaces each detuning step by a linear ramp of length rise_ps centered
/// on the edge, discretized into `substeps` piecewise-constant pieces sampled
/// at ramp midpoints. rise_ps = 0 or substeps = 0 returns the input.
Timeline apply_rise_time(const Timeline& tl, double rise_ps = 40.0, int substeps = 8);

}  // namespace chargeq

#endif
