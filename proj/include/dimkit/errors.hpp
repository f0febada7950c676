// Copyright 2026 The dimkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
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

namespace dimkit {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands that must share a length do not.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// No distance-increasing map exists (n <= 3) or the requested algorithm
/// does not cover this length.
class UnsupportedLength : public Error {
public:
    explicit UnsupportedLength(std::size_t n, const std::string& detail = {});
    std::size_t length() const noexcept { return length_; }

private:
    std::size_t length_;
};

/// Exhaustive enumeration requested past the configured ceiling.
class EnumerationTooLarge : public Error {
public:
    EnumerationTooLarge(std::size_t n, std::size_t ceiling);
};

/// A code with fewer than two codewords has no minimum distance.
class DegenerateCode : public Error {
public:
    using Error::Error;
};

/// Malformed text input. `position` is 1-based; `line` is 1-based or 0 when
/// the input is a single token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t position);
    std::size_t line() const noexcept { return line_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t line_;
    std::size_t position_;
};

/// Well-formed input that violates a semantic constraint (duplicates, size caps).
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace dimkit
