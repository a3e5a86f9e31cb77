// Minimal worker-pool helper with a determinism contract: work is split into
// chunks on a grid that depends only on the problem size, never on the thread
// count. Callers write results into per-index or per-chunk slots and reduce in
// chunk order, so outputs are bit-identical for any number of workers.

#ifndef NEARFOCUS_PARALLEL_HPP
#define NEARFOCUS_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nearfocus {

namespace detail {
inline std::atomic<unsigned>& max_threads_storage() {
    static std::atomic<unsigned> value{0};  // 0 = hardware concurrency
    return value;
}
}  // namespace detail

/// Caps worker threads used by parallel constructions. 0 restores the
/// hardware default. Results never depend on this setting.
inline void set_max_threads(unsigned n) { detail::max_threads_storage().store(n); }

inline unsigned max_threads() {
    unsigned n = detail::max_threads_storage().load();
    if (n == 0) {
        n = std::thread::hardware_concurrency();
        if (n == 0) n = 1;
    }
    return n;
}

/// Runs fn(chunk_index, begin, end) over [0, n) split into fixed chunks of
/// `chunk` items. Chunks are claimed by workers through an atomic counter;
/// the chunk grid itself is independent of the worker count.
template <typename Fn>
inline void parallel_for_chunks(std::size_t n, std::size_t chunk, Fn&& fn) {
    if (n == 0) return;
    if (chunk == 0) chunk = 1;
    const std::size_t n_chunks = (n + chunk - 1) / chunk;
    unsigned workers = max_threads();
    if (workers > n_chunks) workers = static_cast<unsigned>(n_chunks);

    if (workers <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) {
            const std::size_t b = c * chunk;
            const std::size_t e = b + chunk < n ? b + chunk : n;
            fn(c, b, e);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= n_chunks) return;
            const std::size_t b = c * chunk;
            const std::size_t e = b + chunk < n ? b + chunk : n;
            try {
                fn(c, b, e);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace nearfocus

#endif  // NEARFOCUS_PARALLEL_HPP
