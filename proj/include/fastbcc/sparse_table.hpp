#pragma once

#include <algorithm>
#include <bit>
#include <span>

#include "fastbcc/common.hpp"
#include "fastbcc/memory.hpp"
#include "fastbcc/parallel.hpp"

namespace fastbcc {

enum class RangeMode { min, max };

template <class T>
inline T combine(RangeMode mode, T a, T b) {
  return mode == RangeMode::min ? std::min(a, b) : std::max(a, b);
}

// Idempotent range queries in O(1) after O(L log L) preprocessing. Level k
// holds the aggregate of the 2^k-element window starting at each index.
template <class T>
class SparseTable {
 public:
  SparseTable() = default;
  SparseTable(std::span<const T> base, RangeMode mode) : size_(base.size()), mode_(mode) {
    if (base.empty()) throw Error(ErrorCode::invalid_argument, "sparse table over an empty array");
    levels_ = static_cast<std::size_t>(std::bit_width(size_));
    table_.resize(levels_ * size_);
    std::copy(base.begin(), base.end(), table_.begin());
    for (std::size_t k = 1; k < levels_; ++k) {
      const std::size_t half = std::size_t{1} << (k - 1);
      const std::size_t count = size_ - (std::size_t{1} << k) + 1;
      const T* prev = table_.data() + (k - 1) * size_;
      T* cur = table_.data() + k * size_;
      parallel_for(0, count, [&](std::size_t i) { cur[i] = combine(mode_, prev[i], prev[i + half]); });
    }
  }

  std::size_t size() const { return size_; }
  RangeMode mode() const { return mode_; }

  // Aggregate over base[l..r], inclusive.
  T query(std::size_t l, std::size_t r) const {
    const std::size_t k = static_cast<std::size_t>(std::bit_width(r - l + 1)) - 1;
    const T* level = table_.data() + k * size_;
    return combine(mode_, level[l], level[r + 1 - (std::size_t{1} << k)]);
  }

 private:
  std::size_t size_ = 0;
  std::size_t levels_ = 0;
  RangeMode mode_ = RangeMode::min;
  aux_vector<T> table_;
};

template <class T>
SparseTable<T> build_sparse_table(std::span<const T> base, RangeMode mode) {
  return SparseTable<T>(base, mode);
}

// Linear-space range queries: in-block prefix/suffix aggregates plus a sparse
// table over block aggregates. Queries inside one block scan at most
// kBlock elements.
template <class T>
class BlockedRangeQuery {
 public:
  static constexpr std::size_t kBlock = 32;

  BlockedRangeQuery(std::span<const T> base, RangeMode mode)
      : base_(base), mode_(mode), prefix_(base.size()), suffix_(base.size()) {
    if (base.empty()) throw Error(ErrorCode::invalid_argument, "range query over an empty array");
    const std::size_t blocks = (base.size() + kBlock - 1) / kBlock;
    aux_vector<T> summary(blocks);
    parallel_for(0, blocks, [&](std::size_t b) {
      const std::size_t lo = b * kBlock, hi = std::min(base.size(), lo + kBlock);
      T acc = base[lo];
      for (std::size_t i = lo; i < hi; ++i) prefix_[i] = acc = combine(mode_, acc, base[i]);
      summary[b] = acc;
      acc = base[hi - 1];
      for (std::size_t i = hi; i-- > lo;) suffix_[i] = acc = combine(mode_, acc, base[i]);
    });
    summary_ = SparseTable<T>(summary, mode);
  }

  T query(std::size_t l, std::size_t r) const {
    const std::size_t bl = l / kBlock, br = r / kBlock;
    if (bl == br) {
      T acc = base_[l];
      for (std::size_t i = l + 1; i <= r; ++i) acc = combine(mode_, acc, base_[i]);
      return acc;
    }
    T acc = combine(mode_, suffix_[l], prefix_[r]);
    if (bl + 1 < br) acc = combine(mode_, acc, summary_.query(bl + 1, br - 1));
    return acc;
  }

 private:
  std::span<const T> base_;
  RangeMode mode_;
  aux_vector<T> prefix_;
  aux_vector<T> suffix_;
  SparseTable<T> summary_;
};

}  // namespace fastbcc
