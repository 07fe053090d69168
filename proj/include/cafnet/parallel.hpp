#pragma once
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace cafnet {

// Process-wide worker count. 1 disables the pool entirely.
inline int& worker_count_ref() {
  static int n = 1;
  return n;
}
inline int worker_count() { return worker_count_ref(); }
inline void set_worker_count(int n) { worker_count_ref() = n < 1 ? 1 : n; }

namespace detail {

// Persistent pool. Work items are contiguous index ranges; every index is
// processed exactly once and each invocation owns a disjoint output slice,
// so results are bitwise independent of the worker count.
class ThreadPool {
 public:
  static ThreadPool& instance() {
    static ThreadPool pool;
    return pool;
  }

  void run(std::int64_t n, int workers,
           const std::function<void(std::int64_t, std::int64_t)>& body) {
    ensure_threads(workers - 1);
    const int parts = workers;
    std::int64_t chunk = (n + parts - 1) / parts;
    {
      std::unique_lock lk(m_);
      body_ = &body;
      next_ = chunk;  // main thread takes [0, chunk)
      end_ = n;
      chunk_ = chunk;
      pending_ = static_cast<int>(threads_.size());
      ++epoch_;
    }
    cv_.notify_all();
    if (n > 0) body(0, std::min(chunk, n));
    std::unique_lock lk(m_);
    done_cv_.wait(lk, [&] { return pending_ == 0; });
    body_ = nullptr;
  }

 private:
  ThreadPool() = default;
  ~ThreadPool() {
    {
      std::unique_lock lk(m_);
      stop_ = true;
    }
    cv_.notify_all();
    for (auto& t : threads_) t.join();
  }

  void ensure_threads(int n) {
    std::unique_lock lk(m_);
    while (static_cast<int>(threads_.size()) < n) {
      threads_.emplace_back([this] { worker_loop(); });
    }
  }

  void worker_loop() {
    std::uint64_t seen = 0;
    while (true) {
      std::unique_lock lk(m_);
      cv_.wait(lk, [&] { return stop_ || epoch_ != seen; });
      if (stop_) return;
      seen = epoch_;
      const auto* body = body_;
      while (body && next_ < end_) {
        const std::int64_t lo = next_;
        const std::int64_t hi = std::min(lo + chunk_, end_);
        next_ = hi;
        lk.unlock();
        (*body)(lo, hi);
        lk.lock();
      }
      if (--pending_ == 0) done_cv_.notify_all();
    }
  }

  std::mutex m_;
  std::condition_variable cv_, done_cv_;
  std::vector<std::thread> threads_;
  const std::function<void(std::int64_t, std::int64_t)>* body_ = nullptr;
  std::int64_t next_ = 0, end_ = 0, chunk_ = 0;
  int pending_ = 0;
  std::uint64_t epoch_ = 0;
  bool stop_ = false;
};

}  // namespace detail

// Calls f(lo, hi) over a partition of [0, n). f must only write state that
// is disjoint per index.
template <class F>
void parallel_for_ranges(std::int64_t n, F&& f) {
  const int w = worker_count();
  if (w <= 1 || n <= 1) {
    if (n > 0) f(std::int64_t{0}, n);
    return;
  }
  const std::function<void(std::int64_t, std::int64_t)> body = f;
  detail::ThreadPool::instance().run(n, w, body);
}

template <class F>
void parallel_for(std::int64_t n, F&& f) {
  parallel_for_ranges(n, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) f(i);
  });
}

}  // namespace cafnet
