// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_PARALLEL_HPP
#define MWX_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace mwx {

// Worker count: MWX_JOBS when set, otherwise the hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("MWX_JOBS")) {
        const long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

// Index-ordered parallel map: results land in slot order, so output is
// deterministic regardless of scheduling. Tasks must be independent; any
// thread-local context (e.g. a modulus scope) is the task's own business.
template <class F>
auto parallel_map(std::size_t n, F&& fn) {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(n);
    const unsigned jobs = std::min<std::size_t>(worker_count(), n ? n : 1);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

} // namespace mwx

#endif
