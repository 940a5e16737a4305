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

#include "chargeq/dac.hpp"

#include <algorithm>
#include <cmath>

#include "chargeq/errors.hpp"

namespace chargeq {

namespace {

constexpr double kGridTolPs = 1e-6;
constexpr double kCombinedPs = 20.0;

bool on_grid(double t_ps, double grid_ps) {
    return std::abs(t_ps - grid_ps * std::round(t_ps / grid_ps)) <= kGridTolPs;
}

}  // namespace

DacWaveformPair synthesize_dac_pair(const TimelineChannel& channel,
                                    const DacSynthesisOptions& options) {
    const double grid = 40.0;
    const double t_end = channel.end_ps();
    const std::size_t n = static_cast<std::size_t>(std::ceil(t_end / grid - kGridTolPs));
    if (n > options.max_record_samples) {
        throw InvalidParameterError("timeline duration exceeds the configured DAC record length");
    }
    const double baseline = channel.segments.empty() ? 0.0 : channel.segments.front().eps_ghz;

    // The fine segment's trailing edge is the one edge placed with ps
    // resolution (via the inter-DAC phase delay). Everything after it rides
    // on DAC B's delayed grid; everything before it must be grid-aligned on
    // DAC A.
    double fine_edge_ps = -1.0;
    double fine_level = 0.0;  // perturbation level held by DAC A from the fine edge on
    int fine_count = 0;
    for (size_t i = 0; i < channel.segments.size(); ++i) {
        const TimelineSegment& s = channel.segments[i];
        if (!s.fine) {
            continue;
        }
        ++fine_count;
        if (s.end_ps < t_end - kGridTolPs) {
            fine_edge_ps = s.end_ps;
            fine_level = s.eps_ghz - baseline;
        }
    }
    if (fine_count > 1) {
        throw InvalidParameterError("channel has more than one fine segment");
    }
    const bool has_fine = fine_edge_ps >= 0.0;
    const double phase_delay =
        has_fine ? fine_edge_ps - grid * std::floor(fine_edge_ps / grid) : 0.0;

    for (size_t i = 1; i < channel.segments.size(); ++i) {
        const double edge = channel.segments[i].start_ps;
        if (channel.segments[i].eps_ghz == channel.segments[i - 1].eps_ghz) {
            continue;
        }
        if (!has_fine || edge < fine_edge_ps - kGridTolPs) {
            if (!on_grid(edge, grid)) {
                throw InvalidParameterError("coarse edge at " + std::to_string(edge) +
                                            " ps is not on the 40 ps DAC grid");
            }
        } else if (!on_grid(edge - fine_edge_ps, grid)) {
            throw InvalidParameterError("edge at " + std::to_string(edge) +
                                        " ps is not a 40 ps multiple past the fine edge");
        }
    }

    DacWaveformPair pair;
    pair.phase_delay_ps = phase_delay;
    pair.dac_a.resize(n);
    pair.dac_b.resize(n);
    const double carrier = options.carrier_level;
    for (std::size_t k = 0; k < n; ++k) {
        const double ta = grid * static_cast<double>(k);
        if (!has_fine || ta < fine_edge_ps - kGridTolPs) {
            pair.dac_a[k] = carrier + (channel.eps_at(ta) - baseline);
        } else {
            pair.dac_a[k] = carrier + fine_level;
        }
        const double tb = ta + phase_delay;
        if (!has_fine || tb < fine_edge_ps - kGridTolPs) {
            pair.dac_b[k] = -carrier;
        } else {
            pair.dac_b[k] = -carrier + ((channel.eps_at(tb) - baseline) - fine_level);
        }
    }
    return pair;
}

std::vector<double> combine_dacs(const DacWaveformPair& pair) {
    if (pair.dac_a.size() != pair.dac_b.size()) {
        throw InvalidParameterError("DAC arrays must have equal length");
    }
    const std::size_t n = pair.dac_a.size();
    std::vector<double> out(2 * n, 0.0);
    if (n == 0) {
        return out;
    }
    const double grid = pair.sample_ps;
    const double phi = pair.phase_delay_ps;

    const auto a_at = [&](double t) {
        const auto k = static_cast<std::ptrdiff_t>(std::floor(t / grid));
        return pair.dac_a[std::clamp<std::ptrdiff_t>(k, 0, n - 1)];
    };
    const auto b_at = [&](double t) {
        const auto k = static_cast<std::ptrdiff_t>(std::floor((t - phi) / grid));
        return pair.dac_b[std::clamp<std::ptrdiff_t>(k, 0, n - 1)];
    };

    // Hold-value change points of either DAC, skipping no-op boundaries so
    // that windows without a real level change take the exact two-term path.
    std::vector<double> breaks;
    for (std::size_t k = 1; k < n; ++k) {
        if (pair.dac_a[k] != pair.dac_a[k - 1]) {
            breaks.push_back(grid * static_cast<double>(k));
        }
        if (pair.dac_b[k] != pair.dac_b[k - 1]) {
            breaks.push_back(grid * static_cast<double>(k) + phi);
        }
    }
    std::sort(breaks.begin(), breaks.end());

    std::size_t bi = 0;
    for (std::size_t j = 0; j < 2 * n; ++j) {
        const double w0 = kCombinedPs * static_cast<double>(j);
        const double w1 = w0 + kCombinedPs;
        while (bi < breaks.size() && breaks[bi] <= w0) {
            ++bi;
        }
        std::size_t be = bi;
        while (be < breaks.size() && breaks[be] < w1) {
            ++be;
        }
        if (be == bi) {
            out[j] = a_at(w0) + b_at(w0);
            continue;
        }
        // Window straddles a level change: average the held sum over the
        // window, which linearly interpolates the edge position.
        double acc = 0.0;
        double t = w0;
        for (std::size_t m = bi; m <= be; ++m) {
            const double t_next = m == be ? w1 : breaks[m];
            acc += (t_next - t) / kCombinedPs * (a_at(t) + b_at(t));
            t = t_next;
        }
        out[j] = acc;
    }
    return out;
}

}  // namespace chargeq
