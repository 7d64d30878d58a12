#pragma once

// Thin fork-join layer over OpenMP: worker count control, parallel loops,
// monotone atomic cell updates and a blocked prefix sum.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fastbcc {

// Worker count used by subsequent parallel calls.
int num_workers();
void set_num_workers(int workers);

// Hardware parallelism, or FASTBCC_NUM_THREADS when set to a positive integer.
int default_num_workers();

// Sets the worker count for the lifetime of the object.
class ScopedWorkers {
 public:
  explicit ScopedWorkers(int workers) : saved_(num_workers()) { set_num_workers(workers); }
  ~ScopedWorkers() { set_num_workers(saved_); }
  ScopedWorkers(const ScopedWorkers&) = delete;
  ScopedWorkers& operator=(const ScopedWorkers&) = delete;

 private:
  int saved_;
};

inline constexpr std::size_t kSequentialCutoff = 2048;

template <class F>
void parallel_for(std::size_t begin, std::size_t end, F&& f) {
  if (end <= begin) return;
  if (end - begin < kSequentialCutoff || num_workers() == 1) {
    for (std::size_t i = begin; i < end; ++i) f(i);
    return;
  }
  const auto b = static_cast<std::int64_t>(begin);
  const auto e = static_cast<std::int64_t>(end);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = b; i < e; ++i) f(static_cast<std::size_t>(i));
}

// Dynamic scheduling for loops with skewed per-iteration cost (per-vertex
// adjacency scans).
template <class F>
void parallel_for_dynamic(std::size_t begin, std::size_t end, F&& f, std::size_t chunk = 256) {
  if (end <= begin) return;
  if (end - begin < kSequentialCutoff || num_workers() == 1) {
    for (std::size_t i = begin; i < end; ++i) f(i);
    return;
  }
  const auto b = static_cast<std::int64_t>(begin);
  const auto e = static_cast<std::int64_t>(end);
  const auto c = static_cast<int>(chunk);
#pragma omp parallel for schedule(dynamic, c)
  for (std::int64_t i = b; i < e; ++i) f(static_cast<std::size_t>(i));
}

// Runs f(0..count) as independent coarse tasks, in parallel whenever more
// than one worker is available.
template <class F>
void parallel_tasks(std::size_t count, F&& f) {
  if (count == 0) return;
  if (count == 1 || num_workers() == 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  const auto e = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < e; ++i) f(static_cast<std::size_t>(i));
}

// Atomic cell updates. Passing concurrent = false (legal only while a single
// worker runs) uses plain loads and stores: locked instructions serialize
// memory accesses and dominate sequential runs.

// Lowers cell to value if value is smaller. Returns true if it wrote.
template <class T>
bool write_min(T& cell, T value, bool concurrent = true) {
  if (!concurrent) {
    if (!(value < cell)) return false;
    cell = value;
    return true;
  }
  std::atomic_ref<T> ref(cell);
  T cur = ref.load(std::memory_order_relaxed);
  while (value < cur) {
    if (ref.compare_exchange_weak(cur, value, std::memory_order_relaxed)) return true;
  }
  return false;
}

template <class T>
bool write_max(T& cell, T value, bool concurrent = true) {
  if (!concurrent) {
    if (!(cell < value)) return false;
    cell = value;
    return true;
  }
  std::atomic_ref<T> ref(cell);
  T cur = ref.load(std::memory_order_relaxed);
  while (cur < value) {
    if (ref.compare_exchange_weak(cur, value, std::memory_order_relaxed)) return true;
  }
  return false;
}

// Replaces cell with desired if it holds expected; expected receives the old value.
template <class T>
bool compare_and_swap(T& cell, T& expected, T desired, bool concurrent = true) {
  if (!concurrent) {
    if (cell != expected) {
      expected = cell;
      return false;
    }
    cell = desired;
    return true;
  }
  return std::atomic_ref<T>(cell).compare_exchange_strong(expected, desired, std::memory_order_relaxed);
}

template <class T>
T atomic_load(T& cell) {
  return std::atomic_ref<T>(cell).load(std::memory_order_relaxed);
}

template <class T>
T fetch_add(T& cell, T delta, bool concurrent = true) {
  if (!concurrent) {
    T old = cell;
    cell += delta;
    return old;
  }
  return std::atomic_ref<T>(cell).fetch_add(delta, std::memory_order_relaxed);
}

template <class T, class F>
T parallel_max(std::size_t begin, std::size_t end, T init, F&& f) {
  T acc = init;
  if (end <= begin) return acc;
  if (end - begin < kSequentialCutoff || num_workers() == 1) {
    for (std::size_t i = begin; i < end; ++i) acc = std::max(acc, f(i));
    return acc;
  }
  const auto b = static_cast<std::int64_t>(begin);
  const auto e = static_cast<std::int64_t>(end);
#pragma omp parallel for schedule(static) reduction(max : acc)
  for (std::int64_t i = b; i < e; ++i) acc = std::max(acc, f(static_cast<std::size_t>(i)));
  return acc;
}

template <class F>
std::size_t parallel_count(std::size_t begin, std::size_t end, F&& pred) {
  std::size_t acc = 0;
  if (end <= begin) return acc;
  if (end - begin < kSequentialCutoff || num_workers() == 1) {
    for (std::size_t i = begin; i < end; ++i) acc += pred(i) ? 1 : 0;
    return acc;
  }
  const auto b = static_cast<std::int64_t>(begin);
  const auto e = static_cast<std::int64_t>(end);
#pragma omp parallel for schedule(static) reduction(+ : acc)
  for (std::int64_t i = b; i < e; ++i) acc += pred(static_cast<std::size_t>(i)) ? 1 : 0;
  return acc;
}

// In-place exclusive prefix sum; returns the total.
template <class T>
T exclusive_scan_inplace(std::span<T> values) {
  const std::size_t n = values.size();
  const int workers = num_workers();
  if (n < 4 * kSequentialCutoff || workers == 1) {
    T sum{};
    for (auto& v : values) {
      T x = v;
      v = sum;
      sum += x;
    }
    return sum;
  }
  const std::size_t blocks = static_cast<std::size_t>(workers) * 4;
  const std::size_t block_len = (n + blocks - 1) / blocks;
  std::vector<T> block_sums(blocks + 1, T{});
  parallel_tasks(blocks, [&](std::size_t b) {
    const std::size_t lo = std::min(n, b * block_len), hi = std::min(n, lo + block_len);
    T s{};
    for (std::size_t i = lo; i < hi; ++i) s += values[i];
    block_sums[b] = s;
  });
  T total{};
  for (std::size_t b = 0; b < blocks; ++b) {
    T x = block_sums[b];
    block_sums[b] = total;
    total += x;
  }
  parallel_tasks(blocks, [&](std::size_t b) {
    const std::size_t lo = std::min(n, b * block_len), hi = std::min(n, lo + block_len);
    T s = block_sums[b];
    for (std::size_t i = lo; i < hi; ++i) {
      T x = values[i];
      values[i] = s;
      s += x;
    }
  });
  return total;
}

// Stable counting sort of the indices [0, n) by key(i) < num_keys, for small
// key ranges. Writes the sorted indices to `order` (size n) and the bucket
// boundaries to `bucket_start` (size num_keys + 1).
template <class Index, class Alloc1, class Alloc2, class KeyFn>
void counting_sort_indices(std::size_t n, std::size_t num_keys, KeyFn&& key,
                           std::vector<Index, Alloc1>& order, std::vector<std::size_t, Alloc2>& bucket_start) {
  order.resize(n);
  bucket_start.assign(num_keys + 1, 0);
  const std::size_t blocks =
      (n < 4 * kSequentialCutoff || num_workers() == 1) ? 1 : static_cast<std::size_t>(num_workers()) * 2;
  const std::size_t block_len = (n + blocks - 1) / std::max<std::size_t>(blocks, 1);
  // counts[k * blocks + b]: keys equal to k inside block b, scanned key-major.
  std::vector<std::size_t, Alloc2> counts(num_keys * blocks + 1, 0);
  parallel_tasks(blocks, [&](std::size_t b) {
    const std::size_t lo = std::min(n, b * block_len), hi = std::min(n, lo + block_len);
    for (std::size_t i = lo; i < hi; ++i) ++counts[static_cast<std::size_t>(key(i)) * blocks + b];
  });
  exclusive_scan_inplace(std::span<std::size_t>(counts));
  for (std::size_t k = 0; k < num_keys; ++k) bucket_start[k] = counts[k * blocks];
  bucket_start[num_keys] = n;
  parallel_tasks(blocks, [&](std::size_t b) {
    const std::size_t lo = std::min(n, b * block_len), hi = std::min(n, lo + block_len);
    for (std::size_t i = lo; i < hi; ++i) order[counts[static_cast<std::size_t>(key(i)) * blocks + b]++] = static_cast<Index>(i);
  });
}

// Indices i in [0, n) with pred(i), in increasing order.
template <class Index, class Alloc, class Pred>
void pack_indices(std::size_t n, Pred&& pred, std::vector<Index, Alloc>& out) {
  const std::size_t blocks =
      (n < 4 * kSequentialCutoff || num_workers() == 1) ? 1 : static_cast<std::size_t>(num_workers()) * 4;
  const std::size_t block_len = (n + blocks - 1) / blocks;
  std::vector<std::size_t> counts(blocks + 1, 0);
  parallel_tasks(blocks, [&](std::size_t b) {
    const std::size_t lo = std::min(n, b * block_len), hi = std::min(n, lo + block_len);
    std::size_t c = 0;
    for (std::size_t i = lo; i < hi; ++i) c += pred(i) ? 1 : 0;
    counts[b] = c;
  });
  const std::size_t total = exclusive_scan_inplace(std::span<std::size_t>(counts));
  out.resize(total);
  parallel_tasks(blocks, [&](std::size_t b) {
    const std::size_t lo = std::min(n, b * block_len), hi = std::min(n, lo + block_len);
    std::size_t pos = counts[b];
    for (std::size_t i = lo; i < hi; ++i) {
      if (pred(i)) out[pos++] = static_cast<Index>(i);
    }
  });
}

}  // namespace fastbcc
