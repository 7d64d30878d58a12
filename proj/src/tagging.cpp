#include "fastbcc/tagging.hpp"

#include <limits>

#include "fastbcc/sparse_table.hpp"

namespace fastbcc {

namespace {

void subtree_aggregate(const RootedForest& rf, const aux_vector<tour_t>& w, RangeMode mode, aux_vector<tour_t>& out) {
  const vertex_t n = rf.num_vertices();
  const std::size_t positions = rf.roots.empty() ? 0 : static_cast<std::size_t>(rf.last[rf.roots.back()]) + 1;
  const tour_t identity = mode == RangeMode::min ? std::numeric_limits<tour_t>::max() : tour_t{0};
  aux_vector<tour_t> by_position(positions, identity);
  parallel_for(0, n, [&](std::size_t v) { by_position[rf.first[v]] = w[v]; });
  BlockedRangeQuery<tour_t> rmq(by_position, mode);
  out.resize(n);
  parallel_for(0, n, [&](std::size_t v) { out[v] = rmq.query(rf.first[v], rf.last[v]); });
}

}  // namespace

void compute_low_high(const RootedForest& rf, VertexTags& tags) {
  if (rf.num_vertices() == 0) {
    tags.low.clear();
    tags.high.clear();
    return;
  }
  subtree_aggregate(rf, tags.w1, RangeMode::min, tags.low);
  subtree_aggregate(rf, tags.w2, RangeMode::max, tags.high);
}

VertexTags compute_tags(const Graph& g, const RootedForest& rf, WUpdateMode mode) {
  VertexTags tags;
  compute_w(g, rf, tags.w1, tags.w2, mode);
  compute_low_high(rf, tags);
  return tags;
}

}  // namespace fastbcc
