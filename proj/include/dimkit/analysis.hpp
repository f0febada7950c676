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
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace dimkit {

/// Exhaustive operations refuse n above this; 2^24 cached images is the
/// largest cache we are willing to allocate.
inline constexpr std::size_t kEnumerationCeiling = 24;

/// Any map Z_2^n -> S_n. Used to run the verifier on candidates other than z_n.
using Mapper = std::function<Permutation(const BinaryVector&)>;

/// 2^{n-1} (2^n - 1): unordered pairs of distinct length-n binary vectors.
std::uint64_t unordered_pair_count(std::size_t n);

/// Counts D_ij of unordered pairs {u, v} with d(u,v) = i and d(f(u),f(v)) = j,
/// for 1 <= i, j <= n.
class DistanceExpansionTable {
public:
    explicit DistanceExpansionTable(std::size_t n);
    /// `row_major` holds n*n entries, row i (input distance) first.
    DistanceExpansionTable(std::size_t n, std::vector<std::uint64_t> row_major);

    std::size_t n() const noexcept { return n_; }

    /// 1-based access; throws DomainError outside 1..n.
    std::uint64_t at(std::size_t i, std::size_t j) const;
    std::uint64_t& at(std::size_t i, std::size_t j);

    std::uint64_t row_sum(std::size_t i) const;
    std::uint64_t total() const;

    /// True when no mass sits where a distance-increasing map forbids it:
    /// j <= i for i < n, and j < n for i = n.
    bool has_dim_shape() const;

    std::span<const std::uint64_t> counts() const noexcept { return counts_; }

    friend bool operator==(const DistanceExpansionTable&, const DistanceExpansionTable&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const;

    std::size_t n_;
    std::vector<std::uint64_t> counts_;
};

struct Violation {
    BinaryVector u;
    BinaryVector v;
    std::size_t d_in;
    std::size_t d_out;
};

struct VerificationReport {
    std::size_t n = 0;
    bool is_dim = false;
    /// Full scan: every unordered pair. Early exit: pairs up to and including
    /// the first violation in enumeration order.
    std::uint64_t pairs_checked = 0;
    /// Lexicographically first violating pair (u before v).
    std::optional<Violation> first_violation;
    /// Total violations; only a census when the scan was not cut short.
    std::uint64_t violation_count = 0;
};

struct ScanOptions {
    bool early_exit = true;
    /// 0 = one worker per hardware thread.
    unsigned workers = 0;
};

/// Exhaustively checks that z_n increases every distance below n and maps
/// antipodal pairs to distance n. 4 <= n <= kEnumerationCeiling.
VerificationReport verify_dim(std::size_t n, const ScanOptions& options = {});

/// Same check for an arbitrary map of length n.
VerificationReport verify_map(std::size_t n, const Mapper& f, const ScanOptions& options = {});

/// Distance expansion table of z_n. Results do not depend on `workers`.
DistanceExpansionTable expansion_table(std::size_t n, unsigned workers = 0);

DistanceExpansionTable expansion_table(std::size_t n, const Mapper& f, unsigned workers = 0);

/// Exhaustively checks, over every binary sequence of length 2..n_max, that
///   sum a_i a_{i+1}            == weight - blocks
///   sum a_i a_{i+1} + a_n a_1  <= weight - [sequence has both a 1 and a 0].
/// 2 <= n_max <= 20.
bool check_lemma1(std::size_t n_max);

/// The two Lemma 1 relations for a single sequence (n >= 2).
bool lemma1_holds(const BinaryVector& a);

}  // namespace dimkit
