#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace inr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not satisfy an operation's preconditions.
struct ShapeError : Error {
    using Error::Error;
};

/// A value or configuration field violates its documented domain.
struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

/// Training produced non-finite values.
struct DivergenceError : Error {
    using Error::Error;
};

namespace par {

namespace detail {
inline std::size_t resolve_default_threads() {
    if (const char* env = std::getenv("INR_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

inline std::size_t& thread_count_ref() {
    static std::size_t n = resolve_default_threads();
    return n;
}
}  // namespace detail

inline std::size_t num_threads() { return detail::thread_count_ref(); }

inline void set_num_threads(std::size_t n) { detail::thread_count_ref() = n >= 1 ? n : 1; }

/// Runs fn(begin, end) over fixed-size chunks of [0, total).
///
/// Chunk boundaries depend only on `total` and `chunk_size`, never on the
/// worker count, and chunks write disjoint outputs, so results are
/// bit-identical for any number of workers.
template <typename Fn>
void for_blocks(std::size_t total, std::size_t chunk_size, Fn&& fn) {
    if (total == 0) return;
    const std::size_t n_chunks = (total + chunk_size - 1) / chunk_size;
    const std::size_t workers = std::min(num_threads(), n_chunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) {
            std::size_t b = c * chunk_size;
            fn(b, std::min(b + chunk_size, total));
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= n_chunks) return;
            try {
                std::size_t b = c * chunk_size;
                fn(b, std::min(b + chunk_size, total));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t t = 0; t + 1 < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace par
}  // namespace inr
