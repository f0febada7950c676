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

#include "dimkit/core.hpp"

#include <cstddef>
#include <vector>

namespace dimkit {

/// Largest code accepted for permutation-array construction.
inline constexpr std::size_t kMaxCodewords = std::size_t{1} << 16;

/// Distinct binary codewords of a common length.
class BinaryCode {
public:
    /// Throws DimensionError on mixed lengths and ValidationError on an empty
    /// list, a duplicate codeword or more than kMaxCodewords entries.
    explicit BinaryCode(std::vector<BinaryVector> codewords);

    std::size_t length() const noexcept { return length_; }
    std::size_t size() const noexcept { return codewords_.size(); }
    const std::vector<BinaryVector>& codewords() const noexcept { return codewords_; }

private:
    std::size_t length_;
    std::vector<BinaryVector> codewords_;
};

/// Permutations of a common length with their minimum pairwise distance.
/// Rows are kept in the given order. A duplicated row is representable and
/// shows up as min_distance() == 0.
class PermutationArray {
public:
    explicit PermutationArray(std::vector<Permutation> rows, unsigned workers = 0);

    std::size_t length() const noexcept { return length_; }
    std::size_t size() const noexcept { return rows_.size(); }
    const std::vector<Permutation>& rows() const noexcept { return rows_; }

    /// Minimum over unordered row pairs; 0 when there are fewer than 2 rows.
    std::size_t min_distance() const noexcept { return min_distance_; }

private:
    std::size_t length_;
    std::vector<Permutation> rows_;
    std::size_t min_distance_;
};

/// Throws DegenerateCode for fewer than two codewords.
std::size_t code_min_distance(const BinaryCode& c, unsigned workers = 0);

/// Row k is dim_map(codeword k).
PermutationArray construct_pa(const BinaryCode& c, unsigned workers = 0);

/// True iff every codeword pair at distance d < n maps to rows at distance
/// > d, and every pair at distance n maps to rows at distance n.
bool certify(const PermutationArray& pa, const BinaryCode& c);

}  // namespace dimkit
