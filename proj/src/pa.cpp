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

#include "dimkit/pa.hpp"

#include "dimkit/detail/parallel.hpp"
#include "dimkit/dims.hpp"
#include "dimkit/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace dimkit {

namespace {

// Minimum of dist(items[a], items[b]) over a < b; SIZE_MAX when size < 2.
template <class T>
std::size_t min_pairwise(const std::vector<T>& items, unsigned requested_workers) {
    const std::uint64_t rows = items.size();
    const unsigned workers = detail::resolve_workers(requested_workers, rows);
    std::vector<std::size_t> best(workers, std::numeric_limits<std::size_t>::max());
    detail::for_each_row_block(rows, workers, 16, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t a = begin; a < end; ++a) {
            for (std::uint64_t b = a + 1; b < rows; ++b) {
                best[w] = std::min(best[w], hamming_distance(items[a], items[b]));
            }
        }
    });
    return *std::min_element(best.begin(), best.end());
}

}  // namespace

BinaryCode::BinaryCode(std::vector<BinaryVector> codewords) : codewords_(std::move(codewords)) {
    if (codewords_.empty()) {
        throw ValidationError("binary code has no codewords");
    }
    if (codewords_.size() > kMaxCodewords) {
        throw ValidationError("binary code has " + std::to_string(codewords_.size()) +
                              " codewords, limit is " + std::to_string(kMaxCodewords));
    }
    length_ = codewords_.front().size();
    std::set<BinaryVector> seen;
    for (std::size_t k = 0; k < codewords_.size(); ++k) {
        const BinaryVector& w = codewords_[k];
        if (w.size() != length_) {
            throw DimensionError("codeword " + std::to_string(k + 1) + " has length " +
                                 std::to_string(w.size()) + ", expected " + std::to_string(length_));
        }
        if (!seen.insert(w).second) {
            throw ValidationError("duplicate codeword " + w.to_string() + " at entry " +
                                  std::to_string(k + 1));
        }
    }
}

PermutationArray::PermutationArray(std::vector<Permutation> rows, unsigned workers)
    : length_(0), rows_(std::move(rows)), min_distance_(0) {
    if (rows_.empty()) {
        return;
    }
    length_ = rows_.front().size();
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (rows_[k].size() != length_) {
            throw DimensionError("row " + std::to_string(k + 1) + " has length " +
                                 std::to_string(rows_[k].size()) + ", expected " +
                                 std::to_string(length_));
        }
    }
    if (rows_.size() >= 2) {
        min_distance_ = min_pairwise(rows_, workers);
    }
}

std::size_t code_min_distance(const BinaryCode& c, unsigned workers) {
    if (c.size() < 2) {
        throw DegenerateCode("minimum distance needs at least 2 codewords, got " +
                             std::to_string(c.size()));
    }
    return min_pairwise(c.codewords(), workers);
}

PermutationArray construct_pa(const BinaryCode& c, unsigned workers) {
    if (c.size() < 2) {
        throw DegenerateCode("permutation array needs at least 2 codewords, got " +
                             std::to_string(c.size()));
    }
    classify(c.length());
    std::vector<Permutation> rows;
    rows.reserve(c.size());
    for (const BinaryVector& w : c.codewords()) {
        rows.push_back(dim_map(w));
    }
    return PermutationArray(std::move(rows), workers);
}

bool certify(const PermutationArray& pa, const BinaryCode& c) {
    if (pa.size() != c.size() || pa.length() != c.length()) {
        throw DimensionError("permutation array is " + std::to_string(pa.size()) + "x" +
                             std::to_string(pa.length()) + " but code is " +
                             std::to_string(c.size()) + "x" + std::to_string(c.length()));
    }
    const std::size_t n = c.length();
    const auto& words = c.codewords();
    const auto& rows = pa.rows();
    for (std::size_t a = 0; a < words.size(); ++a) {
        for (std::size_t b = a + 1; b < words.size(); ++b) {
            const std::size_t d_in = hamming_distance(words[a], words[b]);
            const std::size_t d_out = hamming_distance(rows[a], rows[b]);
            if (d_in < n ? d_out <= d_in : d_out != n) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace dimkit
