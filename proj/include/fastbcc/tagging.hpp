#pragma once

// Per-vertex tags over a rooted spanning forest:
//   w1[v]  = min(first[v], first[x] for every non-tree neighbor x of v)
//   w2[v]  = max(first[v], first[x] for every non-tree neighbor x of v)
//   low[v] = min of w1 over the subtree of v, high[v] = max of w2 over it.

#include "fastbcc/euler_tour.hpp"
#include "fastbcc/graph.hpp"
#include "fastbcc/memory.hpp"
#include "fastbcc/parallel.hpp"

namespace fastbcc {

struct VertexTags {
  aux_vector<tour_t> w1;
  aux_vector<tour_t> w2;
  aux_vector<tour_t> low;
  aux_vector<tour_t> high;
};

// Tree-edge test for the forest recorded in rf (graphs are simple, so an
// edge is a tree edge iff one endpoint is the other's parent).
struct ForestEdgeTest {
  const RootedForest* rf;
  bool operator()(vertex_t u, vertex_t v) const { return rf->parent[v] == u || rf->parent[u] == v; }
};

enum class WUpdateMode {
  atomic,  // every non-tree edge lowers/raises both endpoint cells with CAS
  owner,   // every vertex aggregates its own cell from its adjacency list
};

template <class IsTree>
void compute_w(const Graph& g, const RootedForest& rf, IsTree&& is_tree, aux_vector<tour_t>& w1,
               aux_vector<tour_t>& w2, WUpdateMode mode = WUpdateMode::atomic) {
  const vertex_t n = g.num_vertices();
  w1.assign(rf.first.begin(), rf.first.end());
  w2.assign(rf.first.begin(), rf.first.end());
  if (mode == WUpdateMode::atomic) {
    const bool concurrent = num_workers() > 1;
    parallel_for_dynamic(0, n, [&](std::size_t ui) {
      const auto u = static_cast<vertex_t>(ui);
      for (vertex_t v : g.neighbors(u)) {
        if (v <= u || is_tree(u, v)) continue;
        const tour_t lo = std::min(rf.first[u], rf.first[v]);
        const tour_t hi = std::max(rf.first[u], rf.first[v]);
        write_min(w1[u], lo, concurrent);
        write_min(w1[v], lo, concurrent);
        write_max(w2[u], hi, concurrent);
        write_max(w2[v], hi, concurrent);
      }
    });
  } else {
    parallel_for_dynamic(0, n, [&](std::size_t ui) {
      const auto u = static_cast<vertex_t>(ui);
      tour_t lo = w1[u], hi = w2[u];
      for (vertex_t v : g.neighbors(u)) {
        if (is_tree(u, v)) continue;
        lo = std::min(lo, rf.first[v]);
        hi = std::max(hi, rf.first[v]);
      }
      w1[u] = lo;
      w2[u] = hi;
    });
  }
}

inline void compute_w(const Graph& g, const RootedForest& rf, aux_vector<tour_t>& w1, aux_vector<tour_t>& w2,
                      WUpdateMode mode = WUpdateMode::atomic) {
  compute_w(g, rf, ForestEdgeTest{&rf}, w1, w2, mode);
}

// low/high as range queries over [first[v], last[v]] of the tour-ordered w
// arrays. Tour positions that are not some vertex's first hold the identity
// of the aggregate, so every subtree vertex is counted exactly once.
void compute_low_high(const RootedForest& rf, VertexTags& tags);

// compute_w followed by compute_low_high.
VertexTags compute_tags(const Graph& g, const RootedForest& rf, WUpdateMode mode = WUpdateMode::atomic);

}  // namespace fastbcc
