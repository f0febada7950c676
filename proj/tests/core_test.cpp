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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace dimkit;

TEST_CASE("binary vector parse and text round trip keep u_1 leftmost") {
    const BinaryVector u = BinaryVector::parse("1011");
    CHECK(u.size() == 4);
    CHECK(u[0] == 1);
    CHECK(u[1] == 0);
    CHECK(u.to_string() == "1011");
    CHECK(u.weight() == 3);
    CHECK(u.packed() == 0b1011);
    CHECK(BinaryVector::from_packed(0b1011, 4) == u);
    CHECK(BinaryVector::from_packed(1, 5).to_string() == "00001");
}

TEST_CASE("binary vector rejects bad symbols") {
    try {
        BinaryVector::parse("1x01");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(BinaryVector::parse(""), ParseError);
    CHECK_THROWS_AS(BinaryVector({0, 2, 1}), DomainError);
    CHECK_THROWS_AS(BinaryVector(std::vector<std::uint8_t>{}), DomainError);
    CHECK(BinaryVector({1}).size() == 1);
}

TEST_CASE("permutation validation") {
    CHECK_NOTHROW(Permutation({3, 1, 2}));
    CHECK_THROWS_AS(Permutation({1, 1, 2}), DomainError);
    CHECK_THROWS_AS(Permutation({0, 1, 2}), DomainError);
    CHECK_THROWS_AS(Permutation({1, 2, 4}), DomainError);
    CHECK(Permutation::identity(4) == Permutation({1, 2, 3, 4}));
    CHECK(Permutation({4, 5, 1, 2, 3}).to_string() == "4 5 1 2 3");
}

TEST_CASE("hamming distance on bits") {
    CHECK(hamming_distance(BinaryVector({0, 0, 0, 0, 0}), BinaryVector({0, 0, 0, 0, 0})) == 0);
    CHECK(hamming_distance(BinaryVector({0, 0, 0, 0, 0}), BinaryVector({1, 1, 1, 1, 1})) == 5);
    CHECK(hamming_distance(BinaryVector({1, 0, 1, 1}), BinaryVector({1, 1, 1, 0})) == 2);
    CHECK_THROWS_AS(hamming_distance(BinaryVector({1, 0}), BinaryVector({1, 0, 0})), DimensionError);
}

TEST_CASE("hamming distance on permutations") {
    CHECK(hamming_distance(Permutation({1, 2, 3, 4}), Permutation({1, 2, 3, 4})) == 0);
    CHECK(hamming_distance(Permutation({1, 2, 3, 4}), Permutation({2, 1, 3, 4})) == 2);
    CHECK(hamming_distance(Permutation({1, 2, 3, 4, 5}), Permutation({4, 5, 1, 2, 3})) == 5);
    CHECK_THROWS_AS(hamming_distance(Permutation({1, 2}), Permutation({1, 2, 3})), DimensionError);
}

TEST_CASE("agreement set") {
    using T = std::vector<std::uint32_t>;
    CHECK(agreement_set(Permutation({1, 2, 3, 4}), Permutation({1, 2, 3, 4})) == T{1, 2, 3, 4});
    CHECK(agreement_set(Permutation({1, 2, 3, 4}), Permutation({2, 1, 4, 3})).empty());
    CHECK(agreement_set(Permutation({1, 2, 3, 4}), Permutation({1, 3, 2, 4})) == T{1, 4});
    CHECK_THROWS_AS(agreement_set(Permutation({1}), Permutation({1, 2})), DimensionError);
}

TEST_CASE("block count and adjacent pair sums") {
    CHECK(block_count(BinaryVector({0, 0, 0, 0})) == 0);
    CHECK(block_count(BinaryVector({1, 1, 0, 1})) == 2);
    CHECK(block_count(BinaryVector({1, 0, 1, 0, 1})) == 3);

    CHECK(adjacent_pair_sum(BinaryVector({1, 1, 1}), false) == 2);
    CHECK(adjacent_pair_sum(BinaryVector({1, 0, 1}), true) == 1);
    CHECK(adjacent_pair_sum(BinaryVector({0, 0, 0, 0}), true) == 0);
    CHECK(adjacent_pair_sum(BinaryVector({1, 1, 0, 1}), false) == 1);
    CHECK_THROWS_AS(adjacent_pair_sum(BinaryVector({1}), false), DomainError);
}

TEST_CASE("bit distance is a metric, exhaustive for n <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const std::uint64_t total = std::uint64_t{1} << n;
        std::vector<BinaryVector> all;
        for (std::uint64_t p = 0; p < total; ++p) all.push_back(BinaryVector::from_packed(p, n));
        for (const auto& u : all) {
            for (const auto& v : all) {
                const std::size_t d = hamming_distance(u, v);
                REQUIRE(d == hamming_distance(v, u));
                REQUIRE((d == 0) == (u == v));
                REQUIRE(d <= n);
                for (const auto& w : all) {
                    REQUIRE(hamming_distance(u, w) <= d + hamming_distance(v, w));
                }
            }
        }
    }
}

TEST_CASE("agreement set size plus distance is n, random permutations") {
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 1 + rng() % 16;
        std::vector<std::uint32_t> a(n), b(n);
        std::iota(a.begin(), a.end(), 1U);
        std::iota(b.begin(), b.end(), 1U);
        std::shuffle(a.begin(), a.end(), rng);
        if (trial % 3 != 0) std::shuffle(b.begin(), b.end(), rng);
        const Permutation x(a), y(b);
        const std::size_t d = hamming_distance(x, y);
        REQUIRE(agreement_set(x, y).size() + d == n);
        REQUIRE(d != 1);
    }
}

TEST_CASE("pair-sum identity and cyclic bound, exhaustive n = 2..12") {
    for (std::size_t n = 2; n <= 12; ++n) {
        for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
            const BinaryVector a = BinaryVector::from_packed(p, n);
            const std::size_t w = a.weight();
            const bool mixed = w != 0 && w != n;
            REQUIRE(adjacent_pair_sum(a, false) == w - block_count(a));
            REQUIRE(adjacent_pair_sum(a, true) <= w - (mixed ? 1 : 0));
        }
    }
}
