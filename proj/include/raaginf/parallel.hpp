/* Copyright 2026 The raaginf Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#ifndef RAAGINF_PARALLEL_HPP
#define RAAGINF_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace raaginf {

// Maps f over items on up to `jobs` threads; results keep input order. The
// first exception thrown by any worker is rethrown after all workers stop.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F&& f, std::size_t jobs = 1) {
    using R = std::decay_t<std::invoke_result_t<F&, const T&>>;
    std::vector<R> out(items.size());
    jobs = std::max<std::size_t>(1, std::min(jobs, items.size()));
    if (jobs == 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = f(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                out[i] = f(items[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = items.size();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace raaginf

#endif  // RAAGINF_PARALLEL_HPP
