#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qrlab {

// Worker count: QRLAB_THREADS caps it, 0 or unset means hardware concurrency.
std::size_t worker_count();

// Deterministic reduction: indices [0, n) are split into fixed-size chunks,
// chunk partials are computed (possibly concurrently) and then accumulated in
// chunk order.  The summation order is independent of the thread count, so
// repeated runs are bit-stable.
namespace detail {
inline constexpr std::size_t kChunk = 4096;

template <class Fn>
void run_chunks(std::size_t n_chunks, Fn&& body) {
    const std::size_t workers = std::min(worker_count(), n_chunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) body(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t c = next.fetch_add(1); c < n_chunks && !failed.load();
                     c = next.fetch_add(1))
                    body(c);
            } catch (...) {
                errors[w] = std::current_exception();
                failed.store(true);
            }
        });
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
}
}  // namespace detail

template <class Term>
double chunked_sum(std::size_t n, Term&& term) {
    if (n == 0) return 0.0;
    const std::size_t n_chunks = (n + detail::kChunk - 1) / detail::kChunk;
    std::vector<double> partial(n_chunks, 0.0);
    detail::run_chunks(n_chunks, [&](std::size_t c) {
        const std::size_t lo = c * detail::kChunk;
        const std::size_t hi = std::min(n, lo + detail::kChunk);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[c] = s;
    });
    double total = 0.0;
    for (double s : partial) total += s;
    return total;
}

template <class Term>
double chunked_max(std::size_t n, Term&& term) {
    if (n == 0) return 0.0;
    const std::size_t n_chunks = (n + detail::kChunk - 1) / detail::kChunk;
    std::vector<double> partial(n_chunks, 0.0);
    detail::run_chunks(n_chunks, [&](std::size_t c) {
        const std::size_t lo = c * detail::kChunk;
        const std::size_t hi = std::min(n, lo + detail::kChunk);
        double m = term(lo);
        for (std::size_t i = lo + 1; i < hi; ++i) m = std::max(m, term(i));
        partial[c] = m;
    });
    double total = partial[0];
    for (double m : partial) total = std::max(total, m);
    return total;
}

}  // namespace qrlab
