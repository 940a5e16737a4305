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

#include "chargeq/timeline.hpp"

#include <algorithm>
#include <cmath>

#include "chargeq/errors.hpp"
#include "chargeq/hamiltonian.hpp"

namespace chargeq {

namespace {

constexpr double kJoinTolPs = 1e-9;

double round_half_up(double x) {
    return std::floor(x + 0.5);
}

}  // namespace

double TimelineChannel::eps_at(double t_ps) const {
    for (const TimelineSegment& s : segments) {
        if (t_ps < s.end_ps) {
            return s.eps_ghz;
        }
    }
    return segments.empty() ? 0.0 : segments.back().eps_ghz;
}

double TimelineChannel::measure_time_ps() const {
    return segments.empty() ? 0.0 : segments.back().start_ps;
}

double Timeline::end_ps() const {
    double t = 0.0;
    for (const TimelineChannel& c : channels) {
        t = std::max(t, c.end_ps());
    }
    return t;
}

const TimelineChannel* Timeline::find(const std::string& name) const {
    for (const TimelineChannel& c : channels) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

void Timeline::pad_to_common_end() {
    const double t_end = end_ps();
    for (TimelineChannel& c : channels) {
        if (!c.segments.empty() && c.segments.back().end_ps < t_end) {
            c.segments.back().end_ps = t_end;
        }
    }
}

void Timeline::validate() const {
    for (const TimelineChannel& c : channels) {
        double prev_end = 0.0;
        bool first = true;
        for (const TimelineSegment& s : c.segments) {
            if (s.end_ps < s.start_ps) {
                throw TimelineError("channel " + c.name + ": segment '" + s.label +
                                    "' has negative duration");
            }
            if (first) {
                if (s.start_ps < 0.0) {
                    throw TimelineError("channel " + c.name + ": starts before t=0");
                }
                first = false;
            } else if (std::abs(s.start_ps - prev_end) > kJoinTolPs) {
                throw TimelineError("channel " + c.name + ": gap or overlap at segment '" +
                                    s.label + "'");
            }
            prev_end = s.end_ps;
        }
    }
}

void append_segment(TimelineChannel& channel, double eps_ghz, double dur_ps,
                    const std::string& label, bool fine) {
    if (dur_ps < 0.0) {
        throw ParseError(ParseErrorKind::kNegativeDuration,
                         "segment '" + label + "' resolves to a negative duration");
    }
    if (dur_ps == 0.0) {
        return;
    }
    const double t0 = channel.end_ps();
    if (!channel.segments.empty() && !fine && !channel.segments.back().fine &&
        channel.segments.back().eps_ghz == eps_ghz) {
        channel.segments.back().end_ps = t0 + dur_ps;
        return;
    }
    channel.segments.push_back(TimelineSegment{t0, t0 + dur_ps, eps_ghz, fine, label});
}

namespace {

struct SymbolTables {
    std::map<std::string, double> ghz;
    std::map<std::string, double> ps;
};

SymbolTables collect_symbols(const PulseProgram& program, const SweepBindings& sweep) {
    SymbolTables t;
    for (const BindingNode& b : program.bindings) {
        (b.unit == BindingNode::Unit::kGhz ? t.ghz : t.ps)[b.name] = b.value;
    }
    for (const auto& [k, v] : sweep.ghz) {
        t.ghz[k] = v;
    }
    for (const auto& [k, v] : sweep.ps) {
        t.ps[k] = v;
    }
    return t;
}

double resolve_eps(const std::string& sym, const QubitParams& q, const QubitParams& partner,
                   double g_ghz, const SymbolTables& syms) {
    if (sym == "init" || sym == "readout") {
        return q.eps_init_ghz;
    }
    if (sym == "idle") {
        if (!q.eps_idle_ghz) {
            throw ParseError(ParseErrorKind::kUnresolvedSymbol,
                             "'idle' used but eps_idle is not configured");
        }
        return *q.eps_idle_ghz;
    }
    if (sym == "anticrossing") {
        // Anti-crossing location with the partner in its initialized state.
        const bool partner_initialized_r = partner.eps_init_ghz > 0;
        return conditional_detuning(0.0, partner_initialized_r, g_ghz);
    }
    const auto it = syms.ghz.find(sym);
    if (it == syms.ghz.end()) {
        throw ParseError(ParseErrorKind::kUnresolvedSymbol, "unresolved detuning symbol '" + sym +
                         "'");
    }
    return it->second;
}

double resolve_dur(const std::string& sym, const SymbolTables& syms) {
    const auto it = syms.ps.find(sym);
    if (it == syms.ps.end()) {
        throw ParseError(ParseErrorKind::kUnresolvedSymbol, "unresolved duration symbol '" + sym +
                         "'");
    }
    return it->second;
}

void apply_sync_offset(TimelineChannel& channel, double offset_ps, double initial_eps) {
    if (offset_ps == 0.0 || channel.segments.empty()) {
        return;
    }
    for (TimelineSegment& s : channel.segments) {
        s.start_ps += offset_ps;
        s.end_ps += offset_ps;
    }
    if (offset_ps > 0.0) {
        // Hold the initial level until the delayed waveform starts.
        TimelineSegment& first = channel.segments.front();
        if (!first.fine && first.eps_ghz == initial_eps) {
            first.start_ps = 0.0;
        } else {
            channel.segments.insert(channel.segments.begin(),
                                    TimelineSegment{0.0, offset_ps, initial_eps, false, "sync"});
        }
    } else {
        // Advancing the channel trims the front of its first segment.
        TimelineSegment& first = channel.segments.front();
        if (first.end_ps <= 0.0) {
            throw ParseError(ParseErrorKind::kSyntax,
                             "sync offset pushes a segment of channel '" + channel.name +
                             "' before t=0");
        }
        first.start_ps = std::max(first.start_ps, 0.0);
    }
}

}  // namespace

Timeline compile_timeline(const PulseProgram& program, const CoupledParams& params,
                          const SweepBindings& sweep) {
    const SymbolTables syms = collect_symbols(program, sweep);
    Timeline tl;
    for (const ChannelNode& cn : program.channels) {
        const QubitParams* q = nullptr;
        const QubitParams* partner = nullptr;
        if (cn.name == "L") {
            q = &params.left;
            partner = &params.right;
        } else if (cn.name == "R") {
            q = &params.right;
            partner = &params.left;
        } else {
            throw ParseError(ParseErrorKind::kUnresolvedSymbol,
                             "channel '" + cn.name + "' does not map to a qubit (use L or R)");
        }

        TimelineChannel channel;
        channel.name = cn.name;
        double initial_eps = 0.0;
        bool have_initial = false;
        for (const SegmentNode& sn : cn.segments) {
            const double eps = std::holds_alternative<double>(sn.eps_ghz)
                                   ? std::get<double>(sn.eps_ghz)
                                   : resolve_eps(std::get<std::string>(sn.eps_ghz), *q, *partner,
                                                 params.g_ghz, syms);
            const double dur = std::holds_alternative<double>(sn.dur_ps)
                                   ? std::get<double>(sn.dur_ps)
                                   : resolve_dur(std::get<std::string>(sn.dur_ps), syms);
            if (!have_initial) {
                initial_eps = eps;
                have_initial = true;
            }
            append_segment(channel, eps, dur, sn.label, sn.fine);
        }
        apply_sync_offset(channel, cn.sync_offset_ps, initial_eps);
        tl.channels.push_back(std::move(channel));
    }
    tl.validate();
    return tl;
}

QuantizeResult quantize_durations(const Timeline& tl, double grid_ps, double fine_resolution_ps) {
    QuantizeResult out;
    for (const TimelineChannel& c : tl.channels) {
        TimelineChannel qc;
        qc.name = c.name;
        std::vector<double> residuals;
        double t = c.start_ps();
        for (const TimelineSegment& s : c.segments) {
            const double step = s.fine ? fine_resolution_ps : grid_ps;
            const double dur = round_half_up(s.duration_ps() / step) * step;
            residuals.push_back(s.duration_ps() - dur);
            if (dur > 0.0) {
                if (!qc.segments.empty() && !s.fine && !qc.segments.back().fine &&
                    qc.segments.back().eps_ghz == s.eps_ghz) {
                    qc.segments.back().end_ps += dur;
                } else {
                    qc.segments.push_back(TimelineSegment{t, t + dur, s.eps_ghz, s.fine, s.label});
                }
                t += dur;
            }
        }
        out.residuals_ps.push_back(std::move(residuals));
        out.timeline.channels.push_back(std::move(qc));
    }
    return out;
}

Timeline apply_rise_time(const Timeline& tl, double rise_ps, int substeps) {
    if (rise_ps < 0.0) {
        throw InvalidParameterError("rise_ps must be >= 0");
    }
    if (substeps < 0) {
        throw InvalidParameterError("substeps must be >= 0");
    }
    if (rise_ps == 0.0 || substeps == 0) {
        return tl;
    }
    Timeline out;
    for (const TimelineChannel& c : tl.channels) {
        TimelineChannel rc;
        rc.name = c.name;
        for (size_t i = 0; i < c.segments.size(); ++i) {
            TimelineSegment seg = c.segments[i];
            if (!rc.segments.empty()) {
                seg.start_ps = rc.segments.back().end_ps;
            }
            const bool has_next = i + 1 < c.segments.size() &&
                                  c.segments[i + 1].eps_ghz != seg.eps_ghz;
            if (!has_next) {
                rc.segments.push_back(seg);
                continue;
            }
            const TimelineSegment& next = c.segments[i + 1];
            // Ramp half-width, limited so neighboring ramps cannot overlap.
            const double h = std::min({rise_ps / 2.0, seg.duration_ps() / 2.0,
                                       next.duration_ps() / 2.0});
            const double edge = seg.end_ps;
            seg.end_ps = edge - h;
            rc.segments.push_back(seg);
            const double width = 2.0 * h;
            const double dt = width / substeps;
            for (int k = 0; k < substeps; ++k) {
                const double t0 = edge - h + k * dt;
                const double mid = (k + 0.5) / substeps;
                const double eps = seg.eps_ghz + (next.eps_ghz - seg.eps_ghz) * mid;
                rc.segments.push_back(TimelineSegment{t0, t0 + dt, eps, false, "ramp"});
            }
            // The following segment starts later by h; its stored start is
            // fixed up on the next iteration.
        }
        // Restore original end time of the last segment.
        if (!rc.segments.empty() && !c.segments.empty()) {
            rc.segments.back().end_ps = c.segments.back().end_ps;
        }
        out.channels.push_back(std::move(rc));
    }
    out.validate();
    return out;
}

}  // namespace chargeq
