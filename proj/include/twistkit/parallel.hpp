#pragma once

/* Order-preserving parallel map. Work items are pulled off a shared atomic
   counter; results land at their input index, so output order never depends
   on the schedule. TWISTKIT_THREADS caps the worker count. */

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace twistkit {

inline int thread_budget() {
  if (const char* s = std::getenv("TWISTKIT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1024) return int(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

template <class T, class F>
auto parallel_map(const std::vector<T>& in, F f) -> std::vector<decltype(f(in[std::size_t(0)]))> {
  using R = decltype(f(in[std::size_t(0)]));
  std::vector<R> out(in.size());
  if (in.empty()) return out;
  int workers = std::min<int>(thread_budget(), int(in.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = f(in[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errs(in.size());
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= in.size()) return;
      try {
        out[i] = f(in[i]);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  for (const auto& e : errs)  // rethrow the lowest-index failure, deterministically
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace twistkit
