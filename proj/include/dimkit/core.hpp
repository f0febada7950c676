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
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dimkit {

/// A vector over {0,1}. Element 0 is u_1, the leftmost character of the text
/// form. Any length n >= 1 is representable.
class BinaryVector {
public:
    explicit BinaryVector(std::vector<std::uint8_t> bits);
    BinaryVector(std::initializer_list<int> bits);

    static BinaryVector zeros(std::size_t n);

    /// Parses a string of '0'/'1'. Throws ParseError with the 1-based
    /// position of the first bad character.
    static BinaryVector parse(std::string_view text);

    /// Unpacks an integer whose most significant of the low n bits is u_1.
    /// This is the enumeration order used throughout: lexicographic on the
    /// text form equals numeric order on the packed form.
    static BinaryVector from_packed(std::uint64_t packed, std::size_t n);

    std::size_t size() const noexcept { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    /// Number of 1 symbols.
    std::size_t weight() const noexcept;

    /// Inverse of from_packed; requires size() <= 64.
    std::uint64_t packed() const;

    std::string to_string() const;

    friend bool operator==(const BinaryVector&, const BinaryVector&) = default;
    friend auto operator<=>(const BinaryVector&, const BinaryVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// A rearrangement of 1..n stored as a tuple (x_1, ..., x_n).
class Permutation {
public:
    using value_type = std::uint32_t;

    /// Throws DomainError unless `entries` holds each of 1..n exactly once.
    explicit Permutation(std::vector<value_type> entries);
    Permutation(std::initializer_list<value_type> entries);

    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return entries_.size(); }
    value_type operator[](std::size_t i) const { return entries_[i]; }
    std::span<const value_type> entries() const noexcept { return entries_; }

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct Unchecked {};
    Permutation(std::vector<value_type> entries, Unchecked) : entries_(std::move(entries)) {}

    std::vector<value_type> entries_;
};

std::size_t hamming_distance(const BinaryVector& u, const BinaryVector& v);
std::size_t hamming_distance(const Permutation& x, const Permutation& y);

/// Values 1..n that occupy the same position in x and y, ascending.
/// Its size is n - hamming_distance(x, y).
std::vector<std::uint32_t> agreement_set(const Permutation& x, const Permutation& y);

/// Number of maximal runs of consecutive 1's.
std::size_t block_count(const BinaryVector& a);

/// a_1 a_2 + ... + a_{n-1} a_n, plus a_n a_1 when `cyclic`. Needs n >= 2.
std::size_t adjacent_pair_sum(const BinaryVector& a, bool cyclic);

}  // namespace dimkit
