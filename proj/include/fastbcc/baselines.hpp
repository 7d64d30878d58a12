#pragma once

#include <cstddef>

#include "fastbcc/bcc_sets.hpp"
#include "fastbcc/connectivity.hpp"
#include "fastbcc/graph.hpp"

namespace fastbcc {

// Sequential DFS with an edge stack. Iterative, so path-like graphs of any
// length are fine. Children are visited in neighbor-list order.
BccSets hopcroft_tarjan(const Graph& g);

inline constexpr vertex_t kBruteForceMaxVertices = 12;

// Exhaustive oracle: two edges share a block iff some simple cycle holds both.
// Articulation points by the vertex-removal component count. n <= 12.
BccSets brute_force_bcc(const Graph& g);

struct TarjanVishkinResult {
  std::size_t block_count = 0;
  std::size_t skeleton_vertices = 0;  // one per undirected edge of G
  std::size_t skeleton_edges = 0;
  std::size_t memory_words = 0;       // peak tracked allocation during the run
};

// Tarjan-Vishkin with the edge skeleton built explicitly: skeleton vertices
// are the edges of G, and two of them are joined when
//   (a) (u, p(u)) and a non-tree edge (u, v) with first[v] < first[u];
//   (b) (u, p(u)) and (v, p(v)) for a cross edge (u, v);
//   (c) (u, v) and (v, p(v)) with v = p(u) not a root, when some non-tree edge
//       leaves the subtree of u for a vertex outside the subtree of v.
// Throws Error(too_large) when the skeleton cannot be allocated.
TarjanVishkinResult tarjan_vishkin(const Graph& g, const CcOptions& options = {});

}  // namespace fastbcc
