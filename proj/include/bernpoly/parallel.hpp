#ifndef BERNPOLY_PARALLEL_HPP
#define BERNPOLY_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bernpoly {

inline unsigned effective_jobs(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/* Runs f(i) for i in [lo, hi) on `jobs` worker threads (jobs == 0 means
 * hardware concurrency). Work items are claimed through a shared atomic
 * counter; f must be safe to call concurrently for distinct i. The first
 * exception thrown by any worker is rethrown on the calling thread after
 * all workers have drained.
 */
template <class F>
void parallel_for(long lo, long hi, unsigned jobs, F&& f) {
    if (hi <= lo) return;
    unsigned n = effective_jobs(jobs);
    if (n == 1 || hi - lo == 1) {
        for (long i = lo; i < hi; ++i) f(i);
        return;
    }

    std::atomic<long> next{lo};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            long i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= hi) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(hi, std::memory_order_relaxed);  // drain remaining work
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    unsigned count = static_cast<unsigned>(std::min<long>(n, hi - lo));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace bernpoly

#endif
