#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace noncorr {

template <typename Result, typename Task>
std::vector<Result> parallel_map(std::uint64_t count, unsigned workers, Task task) {
    std::vector<Result> results(count);
    workers = std::max(1U, workers);
    if (workers == 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) results[i] = task(i);
        return results;
    }
    const std::uint64_t chunk = (count + workers - 1) / workers;
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = std::min<std::uint64_t>(count, w * chunk);
        const std::uint64_t end = std::min<std::uint64_t>(count, begin + chunk);
        threads.emplace_back([&, w, begin, end] {
            try {
                for (std::uint64_t i = begin; i < end; ++i) results[i] = task(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace noncorr
