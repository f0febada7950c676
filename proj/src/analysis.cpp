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

#include "dimkit/analysis.hpp"

#include "dimkit/detail/parallel.hpp"
#include "dimkit/dims.hpp"
#include "dimkit/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstring>
#include <limits>
#include <string>

namespace dimkit {

namespace {

constexpr std::uint64_t kRowBlock = 64;

void check_enumerable(std::size_t n) {
    if (n < 4) {
        throw UnsupportedLength(n);
    }
    if (n > kEnumerationCeiling) {
        throw EnumerationTooLarge(n, kEnumerationCeiling);
    }
}

// Every image of Z_2^n, one per packed input, each stored as n bytes padded
// with zeros to a whole number of 64-bit words.
class ImageCache {
public:
    ImageCache(std::size_t n, unsigned workers, const Mapper* f)
        : n_(n), words_((n + 7) / 8), count_(std::uint64_t{1} << n), data_(count_ * words_, 0) {
        detail::for_each_row_block(count_, workers, 4096, [&](unsigned, std::uint64_t begin,
                                                              std::uint64_t end) {
            const DimKind kind = classify(n_);
            std::array<std::uint8_t, 8 * 3> bytes{};
            for (std::uint64_t u = begin; u < end; ++u) {
                bytes.fill(0);
                if (f == nullptr) {
                    dim_map_packed(kind, u, std::span(bytes.data(), n_));
                } else {
                    const Permutation x = (*f)(BinaryVector::from_packed(u, n_));
                    if (x.size() != n_) {
                        throw DimensionError("mapper returned a permutation of length " +
                                             std::to_string(x.size()) + " for n=" +
                                             std::to_string(n_));
                    }
                    for (std::size_t j = 0; j < n_; ++j) {
                        bytes[j] = static_cast<std::uint8_t>(x[j]);
                    }
                }
                std::memcpy(&data_[u * words_], bytes.data(), words_ * 8);
            }
        });
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t words() const noexcept { return words_; }
    std::uint64_t count() const noexcept { return count_; }
    const std::uint64_t* image(std::uint64_t u) const noexcept { return &data_[u * words_]; }

private:
    std::size_t n_;
    std::size_t words_;
    std::uint64_t count_;
    std::vector<std::uint64_t> data_;
};

// Number of nonzero bytes in x.
inline unsigned nonzero_bytes(std::uint64_t x) noexcept {
    x |= x >> 4;
    x |= x >> 2;
    x |= x >> 1;
    return static_cast<unsigned>(std::popcount(x & 0x0101010101010101ULL));
}

template <std::size_t W>
inline unsigned perm_distance(const std::uint64_t* x, const std::uint64_t* y) noexcept {
    unsigned d = 0;
    for (std::size_t k = 0; k < W; ++k) {
        d += nonzero_bytes(x[k] ^ y[k]);
    }
    return d;
}

// Calls visit(a, b, d_in, d_out) for b in (a, 2^n); stops the row early when
// visit returns false.
template <std::size_t W, class Visit>
void scan_row(const ImageCache& cache, std::uint64_t a, Visit&& visit) {
    const std::uint64_t* xa = cache.image(a);
    for (std::uint64_t b = a + 1; b < cache.count(); ++b) {
        const auto d_in = static_cast<unsigned>(std::popcount(a ^ b));
        const unsigned d_out = perm_distance<W>(xa, cache.image(b));
        if (!visit(b, d_in, d_out)) {
            return;
        }
    }
}

template <class Visit>
void scan_row_dispatch(const ImageCache& cache, std::uint64_t a, Visit&& visit) {
    switch (cache.words()) {
        case 1: scan_row<1>(cache, a, visit); break;
        case 2: scan_row<2>(cache, a, visit); break;
        default: scan_row<3>(cache, a, visit); break;
    }
}

DistanceExpansionTable build_table(const ImageCache& cache, unsigned requested_workers) {
    const std::size_t n = cache.n();
    const std::size_t side = n + 1;
    const unsigned workers = detail::resolve_workers(requested_workers, cache.count());
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(side * side, 0));
    detail::for_each_row_block(cache.count(), workers, kRowBlock,
                               [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
                                   auto& acc = partial[w];
                                   for (std::uint64_t a = begin; a < end; ++a) {
                                       scan_row_dispatch(cache, a, [&](std::uint64_t, unsigned i, unsigned j) {
                                           ++acc[i * side + j];
                                           return true;
                                       });
                                   }
                               });
    DistanceExpansionTable table(n);
    for (const auto& acc : partial) {
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= n; ++j) {
                table.at(i, j) += acc[i * side + j];
            }
        }
        // A zero-distance image pair or d_out == 0 would land in row/column 0.
        for (std::size_t k = 0; k < side; ++k) {
            if (acc[k] != 0 || acc[k * side] != 0) {
                throw DomainError("map is not injective: distinct inputs share an image");
            }
        }
    }
    return table;
}

bool violates(std::size_t n, unsigned d_in, unsigned d_out) {
    return d_in < n ? d_out <= d_in : d_out != n;
}

VerificationReport verify_cache(const ImageCache& cache, const ScanOptions& options) {
    const std::size_t n = cache.n();
    const std::uint64_t rows = cache.count();
    const unsigned workers = detail::resolve_workers(options.workers, rows);
    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

    struct WorkerState {
        std::uint64_t violations = 0;
        std::uint64_t first_a = kNone;
        std::uint64_t first_b = kNone;
        unsigned d_in = 0;
        unsigned d_out = 0;
    };
    std::vector<WorkerState> states(workers);
    // Earliest row known to hold a violation; rows after it cannot hold the first.
    std::atomic<std::uint64_t> stop_row{kNone};

    detail::for_each_row_block(rows, workers, kRowBlock, [&](unsigned w, std::uint64_t begin,
                                                             std::uint64_t end) {
        WorkerState& st = states[w];
        for (std::uint64_t a = begin; a < end; ++a) {
            if (options.early_exit && a > stop_row.load(std::memory_order_relaxed)) {
                return;
            }
            scan_row_dispatch(cache, a, [&](std::uint64_t b, unsigned d_in, unsigned d_out) {
                if (!violates(n, d_in, d_out)) {
                    return true;
                }
                ++st.violations;
                if (a < st.first_a || (a == st.first_a && b < st.first_b)) {
                    st.first_a = a;
                    st.first_b = b;
                    st.d_in = d_in;
                    st.d_out = d_out;
                }
                if (options.early_exit) {
                    std::uint64_t cur = stop_row.load(std::memory_order_relaxed);
                    while (a < cur && !stop_row.compare_exchange_weak(cur, a)) {
                    }
                    return false;
                }
                return true;
            });
        }
    });

    VerificationReport report;
    report.n = n;
    const WorkerState* best = nullptr;
    for (const auto& st : states) {
        report.violation_count += st.violations;
        if (st.first_a != kNone &&
            (best == nullptr || st.first_a < best->first_a ||
             (st.first_a == best->first_a && st.first_b < best->first_b))) {
            best = &st;
        }
    }
    report.is_dim = best == nullptr;
    if (best == nullptr || !options.early_exit) {
        report.pairs_checked = unordered_pair_count(n);
    } else {
        const std::uint64_t a = best->first_a;
        report.pairs_checked = a * (rows - 1) - a * (a - 1) / 2 + (best->first_b - a);
    }
    if (best != nullptr) {
        report.first_violation = Violation{BinaryVector::from_packed(best->first_a, n),
                                           BinaryVector::from_packed(best->first_b, n), best->d_in,
                                           best->d_out};
    }
    return report;
}

}  // namespace

std::uint64_t unordered_pair_count(std::size_t n) {
    if (n == 0 || n > 32) {
        throw DomainError("pair count supports 1 <= n <= 32");
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    return (total / 2) * (total - 1);
}

DistanceExpansionTable::DistanceExpansionTable(std::size_t n) : n_(n), counts_(n * n, 0) {
    if (n == 0) {
        throw DomainError("table size must be >= 1");
    }
}

DistanceExpansionTable::DistanceExpansionTable(std::size_t n, std::vector<std::uint64_t> row_major)
    : n_(n), counts_(std::move(row_major)) {
    if (n == 0 || counts_.size() != n * n) {
        throw DimensionError("table of size " + std::to_string(n) + " needs " +
                             std::to_string(n * n) + " entries, got " +
                             std::to_string(counts_.size()));
    }
}

std::size_t DistanceExpansionTable::index(std::size_t i, std::size_t j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
        throw DomainError("table index (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") outside 1.." + std::to_string(n_));
    }
    return (i - 1) * n_ + (j - 1);
}

std::uint64_t DistanceExpansionTable::at(std::size_t i, std::size_t j) const {
    return counts_[index(i, j)];
}

std::uint64_t& DistanceExpansionTable::at(std::size_t i, std::size_t j) {
    return counts_[index(i, j)];
}

std::uint64_t DistanceExpansionTable::row_sum(std::size_t i) const {
    std::uint64_t s = 0;
    for (std::size_t j = 1; j <= n_; ++j) {
        s += at(i, j);
    }
    return s;
}

std::uint64_t DistanceExpansionTable::total() const {
    std::uint64_t s = 0;
    for (std::uint64_t c : counts_) {
        s += c;
    }
    return s;
}

bool DistanceExpansionTable::has_dim_shape() const {
    for (std::size_t i = 1; i <= n_; ++i) {
        const std::size_t forbidden_upto = i < n_ ? i : n_ - 1;
        for (std::size_t j = 1; j <= forbidden_upto; ++j) {
            if (at(i, j) != 0) {
                return false;
            }
        }
    }
    return true;
}

VerificationReport verify_dim(std::size_t n, const ScanOptions& options) {
    check_enumerable(n);
    const ImageCache cache(n, detail::resolve_workers(options.workers, std::uint64_t{1} << n), nullptr);
    return verify_cache(cache, options);
}

VerificationReport verify_map(std::size_t n, const Mapper& f, const ScanOptions& options) {
    check_enumerable(n);
    const ImageCache cache(n, detail::resolve_workers(options.workers, std::uint64_t{1} << n), &f);
    return verify_cache(cache, options);
}

DistanceExpansionTable expansion_table(std::size_t n, unsigned workers) {
    check_enumerable(n);
    const ImageCache cache(n, detail::resolve_workers(workers, std::uint64_t{1} << n), nullptr);
    return build_table(cache, workers);
}

DistanceExpansionTable expansion_table(std::size_t n, const Mapper& f, unsigned workers) {
    check_enumerable(n);
    const ImageCache cache(n, detail::resolve_workers(workers, std::uint64_t{1} << n), &f);
    return build_table(cache, workers);
}

bool lemma1_holds(const BinaryVector& a) {
    const std::size_t weight = a.weight();
    const bool mixed = weight != 0 && weight != a.size();
    return adjacent_pair_sum(a, false) == weight - block_count(a) &&
           adjacent_pair_sum(a, true) <= weight - (mixed ? 1 : 0);
}

bool check_lemma1(std::size_t n_max) {
    if (n_max < 2 || n_max > 20) {
        throw DomainError("check_lemma1 needs 2 <= n_max <= 20, got " + std::to_string(n_max));
    }
    for (std::size_t n = 2; n <= n_max; ++n) {
        for (std::uint64_t packed = 0; packed < (std::uint64_t{1} << n); ++packed) {
            if (!lemma1_holds(BinaryVector::from_packed(packed, n))) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace dimkit
