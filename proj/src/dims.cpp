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

#include "dimkit/dims.hpp"

#include "dimkit/errors.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace dimkit {

static_assert(DimKind{DimFamily::OddB, 1}.max_swap_index() == DimKind{DimFamily::OddB, 1}.length());
static_assert(DimKind{DimFamily::OddB, 7}.max_swap_index() == DimKind{DimFamily::OddB, 7}.length());
static_assert(DimKind{DimFamily::OddC, 2}.max_swap_index() == DimKind{DimFamily::OddC, 2}.length());
static_assert(DimKind{DimFamily::OddC, 9}.max_swap_index() == DimKind{DimFamily::OddC, 9}.length());
static_assert(DimKind{DimFamily::EvenA, 5}.max_swap_index() == DimKind{DimFamily::EvenA, 5}.length() + 1);

namespace {

// Runs the swap schedule of `kind`. `bit(i)` reads u_i, `swap(i, a, b)`
// exchanges x_a and x_b on behalf of u_i. All indices are 1-based.
template <class BitFn, class SwapFn>
void run_schedule(const DimKind& kind, BitFn&& bit, SwapFn&& swap) {
    const std::size_t n = kind.length();
    const std::size_t r = kind.r;
    switch (kind.family) {
        case DimFamily::EvenA:
            for (std::size_t i = 1; i <= r; ++i) {
                if (bit(2 * i - 1)) swap(2 * i - 1, 2 * i - 1, 2 * i);
            }
            for (std::size_t i = 1; i <= r; ++i) {
                // x_{2r+1} is x_1: the positions sit on a circle
                if (bit(2 * i)) swap(2 * i, 2 * i, 2 * i == n ? 1 : 2 * i + 1);
            }
            break;
        case DimFamily::OddB:
            for (std::size_t i = 1; i <= 2 * r; ++i) {
                if (bit(2 * i - 1)) swap(2 * i - 1, 2 * i - 1, 2 * i);
            }
            if (bit(n)) {
                swap(n, n, 1);
                swap(n, 1, 2 * r + 1);
            }
            for (std::size_t i = 1; i <= 2 * r; ++i) {
                if (bit(2 * i)) swap(2 * i, 2 * i, 2 * i + 1);
            }
            break;
        case DimFamily::OddC:
            for (std::size_t i = 1; i <= 2 * r - 1; ++i) {
                if (bit(2 * i - 1)) swap(2 * i - 1, 2 * i - 1, 2 * i);
            }
            if (bit(n)) swap(n, n, 2 * r);
            if (bit(2 * r)) swap(2 * r, 1, 2 * r);
            for (std::size_t i = 1; i <= 2 * r - 1; ++i) {
                if (bit(2 * i)) swap(2 * i, 2 * i, 2 * i + 1);
            }
            break;
    }
}

DimKind require_kind(const BinaryVector& u, DimFamily family) {
    const std::size_t n = u.size();
    const DimKind kind = classify(n);
    if (kind.family != family) {
        throw UnsupportedLength(n, std::string("algorithm ") + to_string(family) +
                                       " does not cover this length (z_" + std::to_string(n) +
                                       " uses " + to_string(kind.family) + ")");
    }
    return kind;
}

template <class SwapHook>
Permutation apply(const DimKind& kind, const BinaryVector& u, SwapHook&& hook) {
    std::vector<Permutation::value_type> x(kind.length());
    std::iota(x.begin(), x.end(), Permutation::value_type{1});
    run_schedule(
        kind, [&](std::size_t i) { return u[i - 1] != 0; },
        [&](std::size_t i, std::size_t a, std::size_t b) {
            std::swap(x[a - 1], x[b - 1]);
            hook(i, a, b);
        });
    return Permutation(std::move(x));
}

Permutation apply(const DimKind& kind, const BinaryVector& u) {
    return apply(kind, u, [](std::size_t, std::size_t, std::size_t) {});
}

}  // namespace

const char* to_string(DimFamily family) noexcept {
    switch (family) {
        case DimFamily::EvenA: return "A";
        case DimFamily::OddB: return "B";
        case DimFamily::OddC: return "C";
    }
    return "?";
}

DimKind classify(std::size_t n) {
    if (n <= 3) {
        throw UnsupportedLength(n);
    }
    if (n % 2 == 0) {
        return {DimFamily::EvenA, n / 2};
    }
    if (n % 4 == 1) {
        return {DimFamily::OddB, (n - 1) / 4};
    }
    return {DimFamily::OddC, (n + 1) / 4};
}

Permutation map_even(const BinaryVector& u) {
    return apply(require_kind(u, DimFamily::EvenA), u);
}

Permutation map_odd_b(const BinaryVector& u) {
    return apply(require_kind(u, DimFamily::OddB), u);
}

Permutation map_odd_c(const BinaryVector& u) {
    return apply(require_kind(u, DimFamily::OddC), u);
}

Permutation dim_map(const BinaryVector& u) {
    return apply(classify(u.size()), u);
}

TracedImage dim_map_traced(const BinaryVector& u) {
    std::vector<SwapStep> swaps;
    Permutation image = apply(classify(u.size()), u, [&](std::size_t i, std::size_t a, std::size_t b) {
        swaps.push_back({i, a, b});
    });
    return {std::move(image), std::move(swaps)};
}

void dim_map_packed(const DimKind& kind, std::uint64_t packed, std::span<std::uint8_t> out) {
    const std::size_t n = kind.length();
    if (out.size() != n) {
        throw DimensionError("output span has " + std::to_string(out.size()) +
                             " entries, expected " + std::to_string(n));
    }
    if (n > 64) {
        throw DomainError("packed mapping supports n <= 64");
    }
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = static_cast<std::uint8_t>(j + 1);
    }
    run_schedule(
        kind, [&](std::size_t i) { return ((packed >> (n - i)) & 1U) != 0; },
        [&](std::size_t, std::size_t a, std::size_t b) { std::swap(out[a - 1], out[b - 1]); });
}

}  // namespace dimkit
