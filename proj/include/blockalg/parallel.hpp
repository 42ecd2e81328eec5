#pragma once

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace blockalg::detail {

/// Evaluates `probe(k)` for k in [0, count) on up to `threads` workers and
/// returns the failure with the smallest k, so the result does not depend on
/// scheduling. `probe` returns std::nullopt on success.
template <class Result, class Probe>
std::optional<std::pair<std::size_t, Result>> first_failure(std::size_t count, unsigned threads, Probe probe) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t k = 0; k < count; ++k)
            if (auto r = probe(k)) return std::make_pair(k, std::move(*r));
        return std::nullopt;
    }

    std::mutex guard;
    std::optional<std::pair<std::size_t, Result>> best;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
            for (std::size_t k = w; k < count; k += threads) {
                {
                    std::lock_guard lock(guard);
                    if (best && best->first < k) return;
                }
                if (auto r = probe(k)) {
                    std::lock_guard lock(guard);
                    if (!best || k < best->first) best.emplace(k, std::move(*r));
                    return;
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    return best;
}

}  // namespace blockalg::detail
