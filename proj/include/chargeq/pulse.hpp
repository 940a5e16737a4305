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

#ifndef CHARGEQ_PULSE_HPP
#define CHARGEQ_PULSE_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace chargeq {

// Line-oriented pulse-program language:
//
//   program      := (line NEWLINE)*
//   line         := channel_decl | seg_decl | sync_decl | bind_decl | comment
//   channel_decl := "channel" IDENT
//   seg_decl     := "seg" IDENT "eps=" (NUMBER ["GHz"] | IDENT)
//                             "dur=" (NUMBER ["ps"] | IDENT) ["fine"]
//   sync_decl    := "sync" IDENT "offset=" NUMBER "ps"
//   bind_decl    := "let" IDENT "=" NUMBER ("GHz" | "ps")
//   comment      := "#" anything
//
// Segments attach to the most recently declared channel. Numbers are decimal
// with optional sign and fraction. At most one segment per channel may be
// marked "fine" (ps-resolution duration).

// A literal value or a symbol name resolved at compile time.
using ValueOrSymbol = std::variant<double, std::string>;

struct SegmentNode {
    std::string label;
    ValueOrSymbol eps_ghz;
    ValueOrSymbol dur_ps;
    bool fine = false;

    bool operator==(const SegmentNode&) const = default;
};

struct ChannelNode {
    std::string name;
    double sync_offset_ps = 0.0;
    bool has_sync = false;
    std::vector<SegmentNode> segments;

    bool operator==(const ChannelNode&) const = default;
};

struct BindingNode {
    enum class Unit { kGhz, kPs };

    std::string name;
    double value = 0.0;
    Unit unit = Unit::kGhz;

    bool operator==(const BindingNode&) const = default;
};

struct PulseProgram {
    std::vector<ChannelNode> channels;
    std::vector<BindingNode> bindings;

    bool operator==(const PulseProgram&) const = default;
};

/// Throws ParseError. Empty input yields an empty, valid program.
PulseProgram parse_program(std::string_view text);

/// Canonical text form; parse_program(print_program(p)) == p.
std::string print_program(const PulseProgram& p);

}  // namespace chargeq

#endif
