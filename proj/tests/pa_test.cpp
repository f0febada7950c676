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
#include "dimkit/pa.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace dimkit;

namespace {

BinaryCode code(std::initializer_list<const char*> words) {
    std::vector<BinaryVector> v;
    for (const char* w : words) v.push_back(BinaryVector::parse(w));
    return BinaryCode(std::move(v));
}

BinaryCode full_code(std::size_t n) {
    std::vector<BinaryVector> v;
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) v.push_back(BinaryVector::from_packed(p, n));
    return BinaryCode(std::move(v));
}

}  // namespace

TEST_CASE("binary code validation") {
    CHECK_THROWS_AS(code({"0000", "00000"}), DimensionError);
    CHECK_THROWS_AS(code({"0000", "1100", "0000"}), ValidationError);
    CHECK_THROWS_AS(BinaryCode(std::vector<BinaryVector>{}), ValidationError);
    CHECK(code({"0000"}).size() == 1);
}

TEST_CASE("code minimum distance") {
    CHECK(code_min_distance(code({"00000", "11111"})) == 5);
    CHECK(code_min_distance(code({"0000", "1100", "0011"})) == 2);
    CHECK_THROWS_AS(code_min_distance(code({"0000"})), DegenerateCode);
}

TEST_CASE("construct_pa on small codes") {
    const BinaryCode rep = code({"00000", "11111"});
    const PermutationArray pa = construct_pa(rep);
    REQUIRE(pa.size() == 2);
    CHECK(pa.rows()[0] == Permutation({1, 2, 3, 4, 5}));
    CHECK(pa.rows()[1] == Permutation({4, 5, 1, 2, 3}));
    CHECK(pa.min_distance() == 5);
    CHECK(certify(pa, rep));

    const BinaryCode pair = code({"0000", "1000"});
    const PermutationArray pa2 = construct_pa(pair);
    CHECK(pa2.rows()[1] == Permutation({2, 1, 3, 4}));
    CHECK(code_min_distance(pair) == 1);
    CHECK(pa2.min_distance() == 2);
    CHECK(certify(pa2, pair));

    CHECK_THROWS_AS(construct_pa(code({"00000"})), DegenerateCode);
    CHECK_THROWS_AS(construct_pa(code({"000", "111"})), UnsupportedLength);
}

TEST_CASE("certify catches a duplicated row and shape mismatches") {
    const BinaryCode c = code({"00000", "10000", "11111"});
    const PermutationArray good = construct_pa(c);
    CHECK(certify(good, c));

    std::vector<Permutation> rows = good.rows();
    rows[1] = Permutation::identity(5);
    const PermutationArray bad(rows);
    CHECK(bad.min_distance() == 0);
    CHECK_FALSE(certify(bad, c));

    const PermutationArray short_pa({Permutation::identity(5), Permutation({2, 1, 3, 4, 5})});
    CHECK_THROWS_AS(certify(short_pa, c), DimensionError);
    CHECK_THROWS_AS(PermutationArray({Permutation::identity(5), Permutation::identity(4)}), DimensionError);
}

TEST_CASE("full code: certified, no collisions, minimum distance 2") {
    for (std::size_t n = 4; n <= 9; ++n) {
        const BinaryCode c = full_code(n);
        const PermutationArray pa = construct_pa(c);
        CHECK(pa.size() == c.size());
        CHECK(std::set<Permutation>(pa.rows().begin(), pa.rows().end()).size() == c.size());
        CHECK(pa.min_distance() == 2);
        CHECK(certify(pa, c));
    }
}

TEST_CASE("random codes are always certified") {
    std::mt19937_64 rng(4242);
    for (std::size_t n = 4; n <= 12; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            const std::uint64_t space = std::uint64_t{1} << n;
            const std::size_t m = 2 + rng() % std::min<std::uint64_t>(63, space - 1);
            std::set<std::uint64_t> picked;
            while (picked.size() < m) picked.insert(rng() & ((std::uint64_t{1} << n) - 1));
            std::vector<BinaryVector> words;
            for (auto p : picked) words.push_back(BinaryVector::from_packed(p, n));
            std::shuffle(words.begin(), words.end(), rng);
            const BinaryCode c(std::move(words));
            const PermutationArray pa = construct_pa(c, 1 + trial % 3);
            REQUIRE(pa.size() == c.size());
            REQUIRE(certify(pa, c));
            const std::size_t dc = code_min_distance(c);
            if (dc < n) {
                REQUIRE(pa.min_distance() > dc);
            } else {
                REQUIRE(pa.min_distance() == n);
            }
        }
    }
}
