#include "bfnl/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bfnl {

void set_worker_count(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int worker_count() {
#ifdef _OPENMP
  int threads = 1;
#pragma omp parallel
  {
#pragma omp single
    threads = omp_get_num_threads();
  }
  return threads;
#else
  return 1;
#endif
}

}  // namespace bfnl
