#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fastbcc/common.hpp"

namespace fastbcc {

// Explicit biconnected components: each block is a vertex set, stored flat.
struct BccSets {
  std::vector<edge_t> block_offsets{0};
  std::vector<vertex_t> block_vertices;
  std::vector<vertex_t> articulation;  // ascending

  std::size_t num_blocks() const { return block_offsets.size() - 1; }
  std::span<const vertex_t> block(std::size_t i) const {
    return {block_vertices.data() + block_offsets[i], block_vertices.data() + block_offsets[i + 1]};
  }
  template <class It>
  void add_block(It first, It last) {
    block_vertices.insert(block_vertices.end(), first, last);
    block_offsets.push_back(block_vertices.size());
  }
};

// Blocks as sorted vertex lists, listed in lexicographic order.
using Partition = std::vector<std::vector<vertex_t>>;

Partition canonical_partition(const BccSets& sets);

// Describes the first difference between two canonical partitions, or
// nullopt when they are equal.
std::optional<std::string> first_difference(const Partition& expected, const Partition& actual);

}  // namespace fastbcc
