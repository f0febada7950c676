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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dimkit::detail {

/// 0 means one worker per hardware thread. Never more workers than rows.
inline unsigned resolve_workers(unsigned requested, std::uint64_t rows) {
    unsigned w = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
    if (rows < w) {
        w = static_cast<unsigned>(std::max<std::uint64_t>(rows, 1));
    }
    return w;
}

/// Hands out [0, rows) in ascending blocks to `workers` threads; each call is
/// body(worker_index, begin, end). Every row is visited exactly once.
/// Exceptions thrown by a body are rethrown on the calling thread.
template <class Body>
void for_each_row_block(std::uint64_t rows, unsigned workers, std::uint64_t block, Body&& body) {
    if (workers <= 1) {
        for (std::uint64_t b = 0; b < rows; b += block) {
            body(0U, b, std::min(rows, b + block));
        }
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&](unsigned w) {
        try {
            for (;;) {
                const std::uint64_t b = next.fetch_add(block);
                if (b >= rows) {
                    return;
                }
                body(w, b, std::min(rows, b + block));
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
            next.store(rows);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) {
        pool.emplace_back(run, w);
    }
    run(0);
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace dimkit::detail
