#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace solenoid {

/// Worker count: SOLENOID_THREADS when set to a positive integer, otherwise
/// the hardware concurrency.
inline std::size_t thread_limit()
{
    if (const char* env = std::getenv("SOLENOID_THREADS"))
    {
        try
        {
            const long v = std::stol(env);
            if (v > 0)
                return static_cast<std::size_t>(v);
        }
        catch (const std::exception&)
        {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls f(i) for i in [0, n) on contiguous chunks. f must only write to
/// slot i of its output, so results do not depend on scheduling.
template <class F>
void parallel_for(std::size_t n, F&& f)
{
    const std::size_t workers = std::min(thread_limit(), std::max<std::size_t>(1, n / 256));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w)
    {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end)
            break;
        pool.emplace_back([&f, begin, end] {
            for (std::size_t i = begin; i < end; ++i)
                f(i);
        });
    }
}

} // namespace solenoid
