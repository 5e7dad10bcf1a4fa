#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace csdd::detail {

// Runs body(i) for i in [0, count) on a few threads. body must only touch
// data owned by index i.
template <class Body>
void parallel_for(std::size_t count, Body&& body, std::size_t min_chunk = 16)
{
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min(hw, std::max<std::size_t>(1, count / min_chunk));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers)
                body(i);
        });
    }
}

}  // namespace csdd::detail
