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
#include <cstdint>
#include <span>
#include <vector>

namespace dimkit {

/// Which swap schedule defines z_n.
enum class DimFamily {
    EvenA,  ///< n = 2r, r >= 2
    OddB,   ///< n = 4r + 1, r >= 1
    OddC,   ///< n = 4r - 1, r >= 2
};

struct DimKind {
    DimFamily family;
    std::size_t r;

    constexpr std::size_t length() const noexcept {
        switch (family) {
            case DimFamily::EvenA: return 2 * r;
            case DimFamily::OddB: return 4 * r + 1;
            case DimFamily::OddC: return 4 * r - 1;
        }
        return 0;
    }

    /// Largest 1-based position named by any swap of the schedule. Family A
    /// names position 2r+1 in its last swap, which wraps to position 1; B and
    /// C never exceed n.
    constexpr std::size_t max_swap_index() const noexcept {
        switch (family) {
            case DimFamily::EvenA: return 2 * r + 1;
            case DimFamily::OddB: return 2 * (2 * r) + 1;
            case DimFamily::OddC: return 2 * (2 * r - 1) + 1;
        }
        return 0;
    }

    friend constexpr bool operator==(const DimKind&, const DimKind&) = default;
};

const char* to_string(DimFamily family) noexcept;

/// Throws UnsupportedLength for n <= 3.
DimKind classify(std::size_t n);

/// One executed transposition: input bit u_bit fired and exchanged the
/// entries at 1-based positions `left` and `right`.
struct SwapStep {
    std::size_t bit;
    std::size_t left;
    std::size_t right;

    friend bool operator==(const SwapStep&, const SwapStep&) = default;
};

struct TracedImage {
    Permutation image;
    std::vector<SwapStep> swaps;
};

/// Algorithm A on n = 2r. The odd bits swap (x_{2i-1}, x_{2i}) first, then the
/// even bits swap (x_{2i}, x_{2i+1}) where x_{2r+1} wraps around to x_1.
Permutation map_even(const BinaryVector& u);

/// Algorithm B on n = 4r + 1. u_n fires two swaps: (x_n, x_1), then
/// (x_1, x_{2r+1}), between the odd and even passes.
Permutation map_odd_b(const BinaryVector& u);

/// Algorithm C on n = 4r - 1. Between the passes, u_n swaps (x_n, x_{2r}) and
/// then u_{2r} swaps (x_1, x_{2r}); u_{2r} fires again in the even pass.
Permutation map_odd_c(const BinaryVector& u);

/// z_n for any n >= 4, dispatched on classify(n).
Permutation dim_map(const BinaryVector& u);

/// dim_map that also records every executed swap in order.
TracedImage dim_map_traced(const BinaryVector& u);

/// Allocation-free z_n over the packed encoding (u_1 is the most significant
/// of the low n bits). `out` must have kind.length() entries; receives 1..n.
void dim_map_packed(const DimKind& kind, std::uint64_t packed, std::span<std::uint8_t> out);

}  // namespace dimkit
