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

#ifndef CHARGEQ_ERRORS_HPP
#define CHARGEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chargeq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad physical parameters or malformed arguments to a library call.
struct InvalidParameterError : Error {
    using Error::Error;
};

// Scenario/config file problems. CLI exit code 2.
struct ConfigError : Error {
    using Error::Error;
};

// Fit did not converge or had unusable input. CLI exit code 3.
struct FitError : Error {
    using Error::Error;
};

// File system problems. CLI exit code 4.
struct IoError : Error {
    using Error::Error;
};

// Inconsistent timeline handed to the propagator.
struct TimelineError : Error {
    using Error::Error;
};

enum class ParseErrorKind {
    kSyntax,
    kDuplicateChannel,
    kNegativeDuration,
    kUnresolvedSymbol,
};

// Pulse-program parse or compile failure, with source location when known.
struct ParseError : Error {
    ParseError(ParseErrorKind k, std::string msg, int line = 0, int column = 0)
        : Error("line " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          kind(k),
          line(line),
          column(column) {}

    ParseErrorKind kind;
    int line;
    int column;
};

}  // namespace chargeq

#endif
