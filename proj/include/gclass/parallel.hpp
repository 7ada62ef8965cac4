#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <future>
#include <utility>

namespace gclass {

// Chunked parallel map over the inclusive range [lo, hi] with in-order
// delivery: work(a, b) runs on consecutive subranges, possibly concurrently,
// and consume sees the results in ascending chunk order regardless of which
// worker finished first. With workers <= 1 everything runs inline.
// max_chunks > 0 stops after that many chunks (partial runs / resume tests).
// Returns the first n not processed (hi + 1 when the range was exhausted).
template <typename Result>
std::uint64_t chunked_parallel(std::uint64_t lo, std::uint64_t hi, std::uint64_t chunk_size,
                               unsigned workers, std::uint64_t max_chunks,
                               const std::function<Result(std::uint64_t, std::uint64_t)>& work,
                               const std::function<void(Result&&)>& consume) {
    if (chunk_size == 0)
        chunk_size = 1;
    std::uint64_t next = lo;
    std::uint64_t chunks_done = 0;

    auto next_range = [&]() -> std::pair<std::uint64_t, std::uint64_t> {
        const std::uint64_t a = next;
        const std::uint64_t b = (hi - a >= chunk_size - 1) ? a + chunk_size - 1 : hi;
        next = b + 1;
        return {a, b};
    };
    auto exhausted = [&] {
        return next > hi || next < lo || (max_chunks != 0 && chunks_done >= max_chunks);
    };

    if (workers <= 1) {
        while (!exhausted()) {
            auto [a, b] = next_range();
            consume(work(a, b));
            ++chunks_done;
        }
        return next;
    }

    std::deque<std::future<Result>> window;
    auto launch = [&] {
        auto [a, b] = next_range();
        window.push_back(std::async(std::launch::async, [&work, a, b] { return work(a, b); }));
        ++chunks_done;
    };

    while (!exhausted() && window.size() < workers)
        launch();
    while (!window.empty()) {
        Result r = window.front().get();
        window.pop_front();
        if (!exhausted())
            launch();
        consume(std::move(r));
    }
    return next;
}

} // namespace gclass
