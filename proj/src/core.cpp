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

#include "dimkit/core.hpp"

#include "dimkit/errors.hpp"

#include <algorithm>
#include <numeric>

namespace dimkit {

UnsupportedLength::UnsupportedLength(std::size_t n, const std::string& detail)
    : Error("unsupported length n=" + std::to_string(n) +
            (detail.empty() ? std::string(": no distance-increasing map of length < 4 exists")
                            : ": " + detail)),
      length_(n) {}

EnumerationTooLarge::EnumerationTooLarge(std::size_t n, std::size_t ceiling)
    : Error("exhaustive enumeration of length n=" + std::to_string(n) +
            " exceeds the ceiling n<=" + std::to_string(ceiling)) {}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t position)
    : Error(what), line_(line), position_(position) {}

namespace {

void check_same_length(std::size_t a, std::size_t b) {
    if (a != b) {
        throw DimensionError("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

BinaryVector::BinaryVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) {
        throw DomainError("binary vector must have length >= 1");
    }
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] > 1) {
            throw DomainError("binary vector symbol at position " + std::to_string(i + 1) +
                              " is not 0 or 1");
        }
    }
}

BinaryVector::BinaryVector(std::initializer_list<int> bits)
    : BinaryVector([&] {
          std::vector<std::uint8_t> out;
          out.reserve(bits.size());
          for (int b : bits) {
              if (b != 0 && b != 1) {
                  throw DomainError("binary vector symbols must be 0 or 1");
              }
              out.push_back(static_cast<std::uint8_t>(b));
          }
          return out;
      }()) {}

BinaryVector BinaryVector::zeros(std::size_t n) {
    return BinaryVector(std::vector<std::uint8_t>(n, 0));
}

BinaryVector BinaryVector::parse(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty bit string", 0, 1);
    }
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') {
            throw ParseError("invalid character '" + std::string(1, c) + "' at position " +
                                 std::to_string(i + 1) + " (expected '0' or '1')",
                             0, i + 1);
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BinaryVector(std::move(bits));
}

BinaryVector BinaryVector::from_packed(std::uint64_t packed, std::size_t n) {
    if (n == 0 || n > 64) {
        throw DomainError("packed binary vectors support 1 <= n <= 64");
    }
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) {
        bits[i] = static_cast<std::uint8_t>((packed >> (n - 1 - i)) & 1U);
    }
    return BinaryVector(std::move(bits));
}

std::size_t BinaryVector::weight() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint64_t BinaryVector::packed() const {
    if (bits_.size() > 64) {
        throw DomainError("cannot pack a binary vector longer than 64");
    }
    std::uint64_t out = 0;
    for (std::uint8_t b : bits_) {
        out = (out << 1) | b;
    }
    return out;
}

std::string BinaryVector::to_string() const {
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        out[i] = static_cast<char>('0' + bits_[i]);
    }
    return out;
}

Permutation::Permutation(std::vector<value_type> entries) : entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    if (n == 0) {
        throw DomainError("permutation must have length >= 1");
    }
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < n; ++i) {
        const value_type v = entries_[i];
        if (v < 1 || v > n) {
            throw DomainError("permutation entry " + std::to_string(v) + " at position " +
                              std::to_string(i + 1) + " is outside 1.." + std::to_string(n));
        }
        if (seen[v]) {
            throw DomainError("permutation value " + std::to_string(v) + " repeats at position " +
                              std::to_string(i + 1));
        }
        seen[v] = true;
    }
}

Permutation::Permutation(std::initializer_list<value_type> entries)
    : Permutation(std::vector<value_type>(entries)) {}

Permutation Permutation::identity(std::size_t n) {
    if (n == 0) {
        throw DomainError("permutation must have length >= 1");
    }
    std::vector<value_type> e(n);
    std::iota(e.begin(), e.end(), value_type{1});
    return Permutation(std::move(e), Unchecked{});
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i != 0) {
            out += ' ';
        }
        out += std::to_string(entries_[i]);
    }
    return out;
}

std::size_t hamming_distance(const BinaryVector& u, const BinaryVector& v) {
    check_same_length(u.size(), v.size());
    std::size_t d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        d += u[i] != v[i];
    }
    return d;
}

std::size_t hamming_distance(const Permutation& x, const Permutation& y) {
    check_same_length(x.size(), y.size());
    std::size_t d = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        d += x[j] != y[j];
    }
    return d;
}

std::vector<std::uint32_t> agreement_set(const Permutation& x, const Permutation& y) {
    check_same_length(x.size(), y.size());
    std::vector<std::uint32_t> t;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] == y[j]) {
            t.push_back(x[j]);
        }
    }
    std::sort(t.begin(), t.end());
    return t;
}

std::size_t block_count(const BinaryVector& a) {
    std::size_t blocks = 0;
    std::uint8_t prev = 0;
    for (std::uint8_t b : a.bits()) {
        blocks += (b == 1 && prev == 0);
        prev = b;
    }
    return blocks;
}

std::size_t adjacent_pair_sum(const BinaryVector& a, bool cyclic) {
    const std::size_t n = a.size();
    if (n < 2) {
        throw DomainError("adjacent pair sum needs n >= 2, got n=" + std::to_string(n));
    }
    std::size_t sum = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        sum += a[i] & a[i + 1];
    }
    if (cyclic) {
        sum += a[n - 1] & a[0];
    }
    return sum;
}

}  // namespace dimkit
