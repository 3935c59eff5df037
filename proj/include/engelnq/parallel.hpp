#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace engelnq {

/// Worker-count default: ENGELNQ_THREADS env var, else hardware concurrency.
unsigned default_threads();
void set_default_threads(unsigned n);

/// Runs f(ctx, i) for i in [0, n), strided across up to `threads` workers,
/// each with its own context from make_ctx(). Output written by index stays
/// deterministic regardless of the worker count.
template <class MakeCtx, class F>
void parallel_jobs(std::size_t n, unsigned threads, MakeCtx make_ctx, F f) {
  if (n == 0)
    return;
  unsigned t = threads == 0 ? 1 : threads;
  if (t > n)
    t = static_cast<unsigned>(n);
  if (t <= 1) {
    auto ctx = make_ctx();
    for (std::size_t i = 0; i < n; ++i)
      f(ctx, i);
    return;
  }
  std::exception_ptr first_error;
  std::mutex err_mutex;
  std::vector<std::thread> workers;
  workers.reserve(t);
  for (unsigned w = 0; w < t; ++w) {
    workers.emplace_back([&, w] {
      try {
        auto ctx = make_ctx();
        for (std::size_t i = w; i < n; i += t)
          f(ctx, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error)
          first_error = std::current_exception();
      }
    });
  }
  for (auto &th : workers)
    th.join();
  if (first_error)
    std::rethrow_exception(first_error);
}

} // namespace engelnq
