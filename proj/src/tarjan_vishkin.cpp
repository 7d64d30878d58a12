#include <algorithm>
#include <new>

#include "fastbcc/baselines.hpp"
#include "fastbcc/euler_tour.hpp"
#include "fastbcc/tagging.hpp"

namespace fastbcc {

TarjanVishkinResult tarjan_vishkin(const Graph& g, const CcOptions& options) {
  memory::PeakScope scope;
  TarjanVishkinResult result;
  const vertex_t n = g.num_vertices();
  try {
    RootedForest rf;
    {
      CCResult cc = connected_components(g, KeepAllEdges{}, options);
      aux_vector<vertex_t> roots;
      pack_indices(n, [&](std::size_t v) { return cc.labels[v] == v; }, roots);
      rf = build_euler_tour(n, cc.forest_edges, roots);
    }
    VertexTags tags = compute_tags(g, rf);
    release(tags.w1);
    release(tags.w2);

    // Undirected edge (u, v), u < v, gets id base[u] + rank of v among the
    // neighbors of u that exceed u.
    aux_vector<edge_t> upper(n), base(static_cast<std::size_t>(n) + 1, 0);
    parallel_for(0, n, [&](std::size_t u) {
      auto nb = g.neighbors(static_cast<vertex_t>(u));
      const auto k = static_cast<edge_t>(std::upper_bound(nb.begin(), nb.end(), static_cast<vertex_t>(u)) - nb.begin());
      upper[u] = k;
      base[u] = nb.size() - k;
    });
    const edge_t num_edges = exclusive_scan_inplace(std::span<edge_t>(base));
    if (num_edges >= static_cast<edge_t>(kNoVertex)) throw Error(ErrorCode::too_large, "tarjan_vishkin: too many edges for the skeleton id width");
    auto edge_id = [&](vertex_t u, vertex_t v) -> vertex_t {
      if (u > v) std::swap(u, v);
      auto nb = g.neighbors(u);
      const auto pos = static_cast<edge_t>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
      return static_cast<vertex_t>(base[u] + (pos - upper[u]));
    };
    aux_vector<vertex_t> tree_id(n, kNoVertex);
    parallel_for(0, n, [&](std::size_t u) {
      if (rf.parent[u] != u) tree_id[u] = edge_id(static_cast<vertex_t>(u), rf.parent[u]);
    });

    const ForestEdgeTest is_tree{&rf};
    auto for_each_pair = [&](vertex_t u, auto&& emit) {
      for (vertex_t v : g.neighbors(u)) {
        if (is_tree(u, v)) continue;
        if (rf.first[v] < rf.first[u]) emit(tree_id[u], edge_id(u, v));
        if (u < v && !rf.is_ancestor(u, v) && !rf.is_ancestor(v, u)) emit(tree_id[u], tree_id[v]);
      }
      const vertex_t p = rf.parent[u];
      if (p != u && rf.parent[p] != p && (tags.low[u] < rf.first[p] || tags.high[u] > rf.last[p]))
        emit(tree_id[u], tree_id[p]);
    };

    aux_vector<edge_t> offset(static_cast<std::size_t>(n) + 1, 0);
    parallel_for_dynamic(0, n, [&](std::size_t u) {
      edge_t c = 0;
      for_each_pair(static_cast<vertex_t>(u), [&](vertex_t, vertex_t) { ++c; });
      offset[u] = c;
    });
    const edge_t num_pairs = exclusive_scan_inplace(std::span<edge_t>(offset));
    aux_vector<Edge> pairs(num_pairs);
    parallel_for_dynamic(0, n, [&](std::size_t u) {
      edge_t pos = offset[u];
      for_each_pair(static_cast<vertex_t>(u), [&](vertex_t a, vertex_t b) { pairs[pos++] = {a, b}; });
    });
    release(offset);
    release(tree_id);
    release(upper);
    release(base);
    tags = VertexTags{};
    rf = RootedForest{};

    Graph skeleton = symmetrize(pairs, static_cast<vertex_t>(num_edges));
    release(pairs);
    CcOptions skeleton_options = options;
    skeleton_options.record_forest = false;
    CCResult cc = connected_components(skeleton, KeepAllEdges{}, skeleton_options);
    result.block_count = cc.num_components;
    result.skeleton_vertices = num_edges;
    result.skeleton_edges = skeleton.num_edges() / 2;
  } catch (const std::bad_alloc&) {
    throw Error(ErrorCode::too_large, "tarjan_vishkin: out of memory while building the skeleton");
  }
  result.memory_words = scope.peak_words();
  return result;
}

}  // namespace fastbcc
