#include "fastbcc/memory.hpp"

#include <atomic>

namespace fastbcc::memory {

namespace {
std::atomic<std::size_t> g_current{0};
std::atomic<std::size_t> g_peak{0};
}  // namespace

void note_allocate(std::size_t bytes) noexcept {
  const std::size_t now = g_current.fetch_add(bytes, std::memory_order_relaxed) + bytes;
  std::size_t peak = g_peak.load(std::memory_order_relaxed);
  while (now > peak && !g_peak.compare_exchange_weak(peak, now, std::memory_order_relaxed)) {
  }
}

void note_deallocate(std::size_t bytes) noexcept { g_current.fetch_sub(bytes, std::memory_order_relaxed); }

std::size_t current_bytes() noexcept { return g_current.load(std::memory_order_relaxed); }

std::size_t peak_bytes() noexcept { return g_peak.load(std::memory_order_relaxed); }

void reset_peak() noexcept { g_peak.store(g_current.load(std::memory_order_relaxed), std::memory_order_relaxed); }

}  // namespace fastbcc::memory
