// Copyright 2026 The slocc-rank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slocc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries a 1-based line/column when known (0 otherwise).
class ParseError : public Error {
   public:
    ParseError(const std::string &message, std::size_t line = 0, std::size_t column = 0);

    std::size_t line() const {
        return line_;
    }
    std::size_t column() const {
        return column_;
    }
    /// The message without the position prefix.
    const std::string &reason() const {
        return reason_;
    }

   private:
    std::string reason_;
    std::size_t line_;
    std::size_t column_;
};

/// A precondition on arguments was violated (size mismatch, bad qubit index, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A floating-point computation could not produce a trustworthy answer.
class NumericError : public Error {
   public:
    using Error::Error;
};

/// A classification rule table disagrees with a computed rank, or rules overlap.
/// Raised for internal inconsistencies, never for bad user input.
class ConsistencyError : public Error {
   public:
    using Error::Error;
};

}  // namespace slocc
