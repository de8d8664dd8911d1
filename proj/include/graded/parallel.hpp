#pragma once

// Data-parallel index kernels. Every kernel has a serial reference path and an
// OpenMP path with identical, order-independent results: first_index returns
// the smallest satisfying index, map_indices writes results by index.

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace graded {

enum class ExecMode { Serial, Parallel };

inline bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace detail {

class ExceptionSlot {
 public:
  void capture() {
    std::lock_guard<std::mutex> lock(mu_);
    if (!ptr_) ptr_ = std::current_exception();
  }
  void rethrow() {
    if (ptr_) std::rethrow_exception(ptr_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr ptr_;
};

}  // namespace detail

template <class Pred>
std::optional<std::uint64_t> first_index_serial(std::uint64_t count, Pred&& pred) {
  for (std::uint64_t i = 0; i < count; ++i)
    if (pred(i)) return i;
  return std::nullopt;
}

template <class Pred>
std::optional<std::uint64_t> first_index(std::uint64_t count, Pred&& pred,
                                         ExecMode mode = ExecMode::Parallel) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel && count > 1 && omp_get_max_threads() > 1) {
    std::atomic<std::uint64_t> best{count};
    detail::ExceptionSlot error;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto u = static_cast<std::uint64_t>(i);
      if (u >= best.load(std::memory_order_relaxed)) continue;
      try {
        if (pred(u)) {
          auto cur = best.load();
          while (u < cur && !best.compare_exchange_weak(cur, u)) {
          }
        }
      } catch (...) {
        error.capture();
      }
    }
    error.rethrow();
    if (best.load() == count) return std::nullopt;
    return best.load();
  }
#endif
  (void)mode;
  return first_index_serial(count, std::forward<Pred>(pred));
}

template <class Fn>
auto map_indices(std::uint64_t count, Fn&& fn, ExecMode mode = ExecMode::Parallel)
    -> std::vector<std::invoke_result_t<Fn&, std::uint64_t>> {
  using R = std::invoke_result_t<Fn&, std::uint64_t>;
#ifdef _OPENMP
  if (mode == ExecMode::Parallel && count > 1 && omp_get_max_threads() > 1) {
    std::vector<std::optional<R>> slots(count);
    detail::ExceptionSlot error;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        slots[static_cast<std::size_t>(i)].emplace(fn(static_cast<std::uint64_t>(i)));
      } catch (...) {
        error.capture();
      }
    }
    error.rethrow();
    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
  }
#endif
  (void)mode;
  std::vector<R> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(fn(i));
  return out;
}

}  // namespace graded
