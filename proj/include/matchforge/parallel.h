// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matchforge {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_max_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

/// Captures the first exception thrown inside an OpenMP worksharing region
/// so it can be rethrown after the region (exceptions must not cross the
/// region boundary).
class OmpGuard {
 public:
  template <typename F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mutex_);
      if (!captured_) captured_ = std::current_exception();
    }
  }

  void rethrow() {
    if (captured_) std::rethrow_exception(captured_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr captured_;
};

}  // namespace matchforge
