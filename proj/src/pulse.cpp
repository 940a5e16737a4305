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

#include "chargeq/pulse.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "chargeq/errors.hpp"

namespace chargeq {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
            ++j;
        }
        out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

bool is_ident(std::string_view s) {
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) {
        return false;
    }
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            return false;
        }
    }
    return true;
}

// Decimal number with optional sign, fraction, and exponent.
bool parse_number(std::string_view s, double* out) {
    if (s.empty()) {
        return false;
    }
    const size_t start = s[0] == '+' ? 1 : 0;
    if (start == s.size()) {
        return false;
    }
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(s.data() + start, last, *out);
    return res.ec == std::errc() && res.ptr == last;
}

// "5.5GHz" -> (5.5, "GHz"); "-20ps" -> (-20, "ps"); "74" -> (74, "").
bool split_number_unit(std::string_view s, double* value, std::string* unit) {
    size_t cut = s.size();
    while (cut > 0 && std::isalpha(static_cast<unsigned char>(s[cut - 1]))) {
        --cut;
        // Exponent letters belong to the number, not the unit.
        if (cut >= 1 && (s[cut] == 'e' || s[cut] == 'E') &&
            (cut == 1 || std::isdigit(static_cast<unsigned char>(s[cut - 1])) || s[cut - 1] == '.')) {
            break;
        }
    }
    *unit = std::string(s.substr(cut));
    return parse_number(s.substr(0, cut), value);
}

class Parser {
   public:
    explicit Parser(std::string_view text) : text_(text) {}

    PulseProgram run() {
        PulseProgram program;
        std::string_view rest = text_;
        int line_no = 0;
        while (!rest.empty()) {
            ++line_no;
            const size_t nl = rest.find('\n');
            std::string_view line = nl == std::string_view::npos ? rest : rest.substr(0, nl);
            rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
            parse_line(program, line, line_no);
        }
        validate(program);
        return program;
    }

   private:
    [[noreturn]] static void fail(ParseErrorKind kind, const std::string& msg, int line, int col) {
        throw ParseError(kind, msg, line, col);
    }

    void parse_line(PulseProgram& program, std::string_view line, int line_no) {
        // Strip comments.
        const size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const std::vector<Token> toks = split_tokens(line);
        if (toks.empty()) {
            return;
        }
        const std::string& head = toks[0].text;
        if (head == "channel") {
            parse_channel(program, toks, line_no);
        } else if (head == "seg") {
            parse_seg(program, toks, line_no);
        } else if (head == "sync") {
            parse_sync(program, toks, line_no);
        } else if (head == "let") {
            parse_let(program, toks, line_no);
        } else {
            fail(ParseErrorKind::kSyntax, "unknown directive '" + head + "'", line_no,
                 toks[0].column);
        }
    }

    void parse_channel(PulseProgram& program, const std::vector<Token>& toks, int line_no) {
        if (toks.size() != 2 || !is_ident(toks[1].text)) {
            fail(ParseErrorKind::kSyntax, "expected: channel IDENT", line_no, toks[0].column);
        }
        for (const ChannelNode& c : program.channels) {
            if (c.name == toks[1].text) {
                fail(ParseErrorKind::kDuplicateChannel, "duplicate channel '" + toks[1].text + "'",
                     line_no, toks[1].column);
            }
        }
        program.channels.push_back(ChannelNode{toks[1].text, 0.0, false, {}});
    }

    void parse_seg(PulseProgram& program, const std::vector<Token>& toks, int line_no) {
        if (program.channels.empty()) {
            fail(ParseErrorKind::kSyntax, "segment before any channel declaration", line_no,
                 toks[0].column);
        }
        if (toks.size() < 4 || !is_ident(toks[1].text)) {
            fail(ParseErrorKind::kSyntax, "expected: seg IDENT eps=... dur=... [fine]", line_no,
                 toks[0].column);
        }
        SegmentNode seg;
        seg.label = toks[1].text;
        seg.eps_ghz = parse_field(toks[2], "eps=", "GHz", line_no, /*allow_negative=*/true);
        seg.dur_ps = parse_field(toks[3], "dur=", "ps", line_no, /*allow_negative=*/false);
        size_t next = 4;
        if (next < toks.size() && toks[next].text == "fine") {
            seg.fine = true;
            ++next;
        }
        if (next != toks.size()) {
            fail(ParseErrorKind::kSyntax, "trailing tokens after segment", line_no,
                 toks[next].column);
        }
        program.channels.back().segments.push_back(std::move(seg));
    }

    ValueOrSymbol parse_field(const Token& tok, std::string_view key, std::string_view unit,
                              int line_no, bool allow_negative) {
        if (tok.text.rfind(key, 0) != 0) {
            fail(ParseErrorKind::kSyntax, "expected '" + std::string(key) + "...'", line_no,
                 tok.column);
        }
        const std::string_view body = std::string_view(tok.text).substr(key.size());
        if (body.empty()) {
            fail(ParseErrorKind::kSyntax, "empty value for '" + std::string(key) + "'", line_no,
                 tok.column);
        }
        if (is_ident(body)) {
            return std::string(body);
        }
        double value = 0.0;
        std::string got_unit;
        if (!split_number_unit(body, &value, &got_unit) || (!got_unit.empty() && got_unit != unit)) {
            fail(ParseErrorKind::kSyntax,
                 "bad value '" + std::string(body) + "' for '" + std::string(key) + "'", line_no,
                 tok.column);
        }
        if (!allow_negative && value < 0) {
            fail(ParseErrorKind::kNegativeDuration, "negative duration", line_no, tok.column);
        }
        return value;
    }

    void parse_sync(PulseProgram& program, const std::vector<Token>& toks, int line_no) {
        if (toks.size() != 3 || !is_ident(toks[1].text)) {
            fail(ParseErrorKind::kSyntax, "expected: sync IDENT offset=NUMBERps", line_no,
                 toks[0].column);
        }
        ChannelNode* channel = nullptr;
        for (ChannelNode& c : program.channels) {
            if (c.name == toks[1].text) {
                channel = &c;
            }
        }
        if (channel == nullptr) {
            fail(ParseErrorKind::kUnresolvedSymbol, "sync references unknown channel '" +
                 toks[1].text + "'", line_no, toks[1].column);
        }
        if (toks[2].text.rfind("offset=", 0) != 0) {
            fail(ParseErrorKind::kSyntax, "expected 'offset=...'", line_no, toks[2].column);
        }
        double value = 0.0;
        std::string unit;
        if (!split_number_unit(std::string_view(toks[2].text).substr(7), &value, &unit) ||
            unit != "ps") {
            fail(ParseErrorKind::kSyntax, "bad offset value", line_no, toks[2].column);
        }
        channel->sync_offset_ps = value;
        channel->has_sync = true;
    }

    void parse_let(PulseProgram& program, const std::vector<Token>& toks, int line_no) {
        // Accept both "let x = 5ps" and "let x=5ps".
        std::string name;
        std::string rhs;
        int rhs_col = toks[0].column;
        if (toks.size() == 4 && toks[2].text == "=") {
            name = toks[1].text;
            rhs = toks[3].text;
            rhs_col = toks[3].column;
        } else if (toks.size() == 2) {
            const size_t eq = toks[1].text.find('=');
            if (eq == std::string::npos) {
                fail(ParseErrorKind::kSyntax, "expected: let IDENT = NUMBER(GHz|ps)", line_no,
                     toks[1].column);
            }
            name = toks[1].text.substr(0, eq);
            rhs = toks[1].text.substr(eq + 1);
            rhs_col = toks[1].column;
        } else if (toks.size() == 3 && toks[2].text.front() == '=') {
            name = toks[1].text;
            rhs = toks[2].text.substr(1);
            rhs_col = toks[2].column;
        } else {
            fail(ParseErrorKind::kSyntax, "expected: let IDENT = NUMBER(GHz|ps)", line_no,
                 toks[0].column);
        }
        if (!is_ident(name)) {
            fail(ParseErrorKind::kSyntax, "bad binding name '" + name + "'", line_no, rhs_col);
        }
        double value = 0.0;
        std::string unit;
        if (!split_number_unit(rhs, &value, &unit) || (unit != "GHz" && unit != "ps")) {
            fail(ParseErrorKind::kSyntax, "binding needs a GHz or ps value", line_no, rhs_col);
        }
        program.bindings.push_back(BindingNode{
            name, value, unit == "GHz" ? BindingNode::Unit::kGhz : BindingNode::Unit::kPs});
    }

    void validate(const PulseProgram& program) {
        for (const ChannelNode& c : program.channels) {
            int fine_count = 0;
            for (const SegmentNode& s : c.segments) {
                if (s.fine) {
                    ++fine_count;
                }
            }
            if (fine_count > 1) {
                fail(ParseErrorKind::kSyntax,
                     "channel '" + c.name + "' has more than one fine segment", 0, 0);
            }
        }
    }

    std::string_view text_;
};

std::string format_value(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void print_value_or_symbol(std::ostringstream& out, const ValueOrSymbol& v, const char* unit) {
    if (std::holds_alternative<double>(v)) {
        out << format_value(std::get<double>(v)) << unit;
    } else {
        out << std::get<std::string>(v);
    }
}

}  // namespace

PulseProgram parse_program(std::string_view text) {
    return Parser(text).run();
}

std::string print_program(const PulseProgram& p) {
    std::ostringstream out;
    for (const ChannelNode& c : p.channels) {
        out << "channel " << c.name << "\n";
        for (const SegmentNode& s : c.segments) {
            out << "seg " << s.label << " eps=";
            print_value_or_symbol(out, s.eps_ghz, "GHz");
            out << " dur=";
            print_value_or_symbol(out, s.dur_ps, "ps");
            if (s.fine) {
                out << " fine";
            }
            out << "\n";
        }
    }
    for (const ChannelNode& c : p.channels) {
        if (c.has_sync) {
            out << "sync " << c.name << " offset=" << format_value(c.sync_offset_ps) << "ps\n";
        }
    }
    for (const BindingNode& b : p.bindings) {
        out << "let " << b.name << " = " << format_value(b.value)
            << (b.unit == BindingNode::Unit::kGhz ? "GHz" : "ps") << "\n";
    }
    return out.str();
}

}  // namespace chargeq
