#include "fastbcc/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>
#include <thread>

namespace fastbcc {

int num_workers() { return omp_get_max_threads(); }

void set_num_workers(int workers) { omp_set_num_threads(workers > 0 ? workers : default_num_workers()); }

int default_num_workers() {
  if (const char* env = std::getenv("FASTBCC_NUM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace fastbcc
