#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

namespace golod {

/// Worker count: explicit request, else GOLODLAB_JOBS, else the number of processors.
int resolve_jobs(std::optional<int> requested = std::nullopt);

/// Runs fn(i) for i in [0, n) on up to `jobs` OpenMP threads. Each index writes its own
/// result slot, so output does not depend on scheduling. If any call throws, the
/// exception of the lowest failing index is rethrown after the loop.
template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace golod
