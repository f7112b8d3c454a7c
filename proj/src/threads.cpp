#include "topress/threads.hpp"

#include <cstdlib>
#include <string>

#include "topress/common.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace topress {

int configure_threads() {
  const char* env = std::getenv(kThreadsEnv);
  if (env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 1 || n > 4096) {
      throw InvalidArgument(std::string(kThreadsEnv) + " must be a positive integer (got '" +
                            env + "')");
    }
#ifdef _OPENMP
    omp_set_num_threads(static_cast<int>(n));
#endif
  }
  return max_threads();
}

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace topress
