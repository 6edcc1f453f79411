#include "golodlab/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

#include "golodlab/errors.hpp"

namespace golod {

int resolve_jobs(std::optional<int> requested) {
  if (requested) {
    if (*requested < 1) throw DomainError("--jobs must be at least 1");
    return *requested;
  }
  if (const char* env = std::getenv("GOLODLAB_JOBS"); env && *env) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("GOLODLAB_JOBS is not a positive integer: ") + env);
  }
  return omp_get_num_procs();
}

}  // namespace golod
