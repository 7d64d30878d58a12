#pragma once

// Allocation accounting for algorithm-internal ("auxiliary") arrays.
//
// Every transient array an algorithm allocates goes through aux_vector, whose
// allocator reports to a process-wide counter. Graph storage is tracked too;
// a PeakScope subtracts whatever was live when it started, so an input graph
// loaded beforehand is excluded. Counters are global: a PeakScope measures
// correctly only while one algorithm runs at a time, and scopes do not nest.

#include <cstddef>
#include <memory>
#include <new>
#include <vector>

namespace fastbcc::memory {

void note_allocate(std::size_t bytes) noexcept;
void note_deallocate(std::size_t bytes) noexcept;
std::size_t current_bytes() noexcept;
std::size_t peak_bytes() noexcept;
void reset_peak() noexcept;

inline constexpr std::size_t kWordBytes = 8;

// Records the high-water mark of tracked allocations from construction on.
class PeakScope {
 public:
  PeakScope() : baseline_(current_bytes()) { reset_peak(); }
  std::size_t peak_bytes() const noexcept {
    auto p = memory::peak_bytes();
    return p > baseline_ ? p - baseline_ : 0;
  }
  std::size_t peak_words() const noexcept { return (peak_bytes() + kWordBytes - 1) / kWordBytes; }

 private:
  std::size_t baseline_;
};

template <class T>
struct TrackingAllocator {
  using value_type = T;

  TrackingAllocator() noexcept = default;
  template <class U>
  TrackingAllocator(const TrackingAllocator<U>&) noexcept {}

  T* allocate(std::size_t count) {
    T* p = std::allocator<T>{}.allocate(count);
    note_allocate(count * sizeof(T));
    return p;
  }
  void deallocate(T* p, std::size_t count) noexcept {
    note_deallocate(count * sizeof(T));
    std::allocator<T>{}.deallocate(p, count);
  }

  template <class U>
  bool operator==(const TrackingAllocator<U>&) const noexcept { return true; }
};

}  // namespace fastbcc::memory

namespace fastbcc {

template <class T>
using aux_vector = std::vector<T, memory::TrackingAllocator<T>>;

// Releases the storage of an aux_vector immediately.
template <class T>
void release(aux_vector<T>& v) {
  aux_vector<T>().swap(v);
}

}  // namespace fastbcc
