/* Copyright (c) 2026 The ppersist Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#ifndef PPERSIST_PARALLEL_HPP
#define PPERSIST_PARALLEL_HPP

#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace ppersist {

/// Thread budget: PPERSIST_THREADS when set, hardware concurrency
/// otherwise, at least 1.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("PPERSIST_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(i) for i in [0, n). Work items must write only to their own
/// index; results are then independent of the thread count.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
    unsigned threads = std::min<unsigned>(thread_budget(), n > 0 ? n : 1);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (int i = static_cast<int>(t); i < n; i += static_cast<int>(threads)) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace ppersist

#endif
