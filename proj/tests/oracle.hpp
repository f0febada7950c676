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

// Reference implementations kept independent of the library's code paths.
// The map is rebuilt from the swap chains drawn around the position circles,
// and distances are counted with plain loops over std::vector.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

struct ChainLink {
    std::size_t bit;  // 1-based input bit that triggers the swap
    std::size_t a;    // 1-based positions exchanged
    std::size_t b;
};

// Swap chain of z_n in firing order.
inline std::vector<ChainLink> chain(std::size_t n) {
    std::vector<ChainLink> links;
    auto neighbour = [&](std::size_t k) { links.push_back({k, k, k + 1}); };
    if (n % 2 == 0) {
        for (std::size_t k = 1; k < n; k += 2) neighbour(k);
        for (std::size_t k = 2; k < n; k += 2) neighbour(k);
        links.push_back({n, n, 1});
    } else if (n % 4 == 1) {
        const std::size_t r = (n - 1) / 4;
        for (std::size_t k = 1; k < n; k += 2) neighbour(k);
        links.push_back({n, n, 1});
        links.push_back({n, 1, 2 * r + 1});
        for (std::size_t k = 2; k < n; k += 2) neighbour(k);
    } else {
        const std::size_t r = (n + 1) / 4;
        for (std::size_t k = 1; k < n; k += 2) neighbour(k);
        links.push_back({n, n, 2 * r});
        links.push_back({2 * r, 1, 2 * r});
        for (std::size_t k = 2; k < n; k += 2) neighbour(k);
    }
    return links;
}

inline std::vector<int> bits_of(std::uint64_t packed, std::size_t n) {
    std::vector<int> u(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = static_cast<int>((packed >> (n - 1 - i)) & 1U);
    }
    return u;
}

inline std::vector<int> image(const std::vector<int>& u) {
    const std::size_t n = u.size();
    std::vector<int> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = static_cast<int>(j + 1);
    for (const ChainLink& l : chain(n)) {
        if (u[l.bit - 1] == 1) std::swap(x[l.a - 1], x[l.b - 1]);
    }
    return x;
}

inline std::size_t distance(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

// Row-major n*n counts D_ij (1-based i, j stored at (i-1)*n + (j-1)).
inline std::vector<std::uint64_t> table(std::size_t n) {
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<std::vector<int>> words(total), images(total);
    for (std::uint64_t u = 0; u < total; ++u) {
        words[u] = bits_of(u, n);
        images[u] = image(words[u]);
    }
    std::vector<std::uint64_t> counts(n * n, 0);
    for (std::uint64_t a = 0; a < total; ++a) {
        for (std::uint64_t b = a + 1; b < total; ++b) {
            const std::size_t i = distance(words[a], words[b]);
            const std::size_t j = distance(images[a], images[b]);
            ++counts[(i - 1) * n + (j - 1)];
        }
    }
    return counts;
}

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    std::uint64_t c = 1;
    for (std::size_t t = 1; t <= k; ++t) c = c * (n - k + t) / t;
    return c;
}

}  // namespace oracle
