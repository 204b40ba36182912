#include "rbt/parallel.hpp"

#include <omp.h>

#include <stdexcept>

namespace rbt {

void set_workers(int n) {
  if (n < 1) throw std::invalid_argument("workers must be >= 1");
  omp_set_num_threads(n);
}

int workers() { return omp_get_max_threads(); }

}  // namespace rbt
