#pragma once

// Biconnected components from an arbitrary spanning forest.
//
//   1. First-CC  connected components of G; the forest is a by-product
//   2. Rooting   Euler tour over the forest: parent, first, last
//   3. Tagging   w1/w2 and subtree low/high
//   4. Last-CC   connected components of G without fence and back edges
//                (the implicit skeleton), then component heads
//
// The output keeps one label per vertex plus one head per label: the vertices
// sharing label l together with head[l] form one biconnected component.

#include <cstdint>
#include <vector>

#include "fastbcc/bcc_sets.hpp"
#include "fastbcc/connectivity.hpp"
#include "fastbcc/euler_tour.hpp"
#include "fastbcc/graph.hpp"
#include "fastbcc/tagging.hpp"

namespace fastbcc {

enum class EdgeClass : std::uint8_t { plain_tree, fence_tree, back, cross };

const char* to_string(EdgeClass c);

// Tree edge parent - child is a fence edge iff no edge leaves the child's
// subtree for a vertex outside the parent's subtree.
inline bool is_fence(const RootedForest& rf, const VertexTags& tags, vertex_t parent, vertex_t child) {
  return tags.low[child] >= rf.first[parent] && tags.high[child] <= rf.last[parent];
}

// Throws Error(invalid_argument) when is_tree is set but neither endpoint is
// the other's parent.
EdgeClass classify_edge(const RootedForest& rf, const VertexTags& tags, vertex_t u, vertex_t v, bool is_tree);

inline bool in_skeleton(const RootedForest& rf, const VertexTags& tags, vertex_t u, vertex_t v, bool is_tree) {
  const EdgeClass c = classify_edge(rf, tags, u, v, is_tree);
  return c == EdgeClass::plain_tree || c == EdgeClass::cross;
}

// Edge predicate for Last-CC: keeps plain tree edges and cross edges.
struct SkeletonFilter {
  const vertex_t* parent;
  const tour_t* first;
  const tour_t* last;
  const tour_t* low;
  const tour_t* high;

  SkeletonFilter(const RootedForest& rf, const VertexTags& tags)
      : parent(rf.parent.data()), first(rf.first.data()), last(rf.last.data()), low(tags.low.data()),
        high(tags.high.data()) {}

  bool operator()(vertex_t u, vertex_t v) const {
    if (parent[v] == u) return low[v] < first[u] || high[v] > last[u];
    if (parent[u] == v) return low[u] < first[v] || high[u] > last[v];
    const bool back = (first[u] <= first[v] && last[u] >= first[v]) || (first[v] <= first[u] && last[v] >= first[u]);
    return !back;
  }
};

struct BccLabeling {
  aux_vector<vertex_t> label;         // skeleton component id (its smallest vertex)
  aux_vector<vertex_t> head;          // head[l] for label l, kNoVertex when l has none
  aux_vector<std::uint8_t> is_tree_root;
  vertex_t bcc_count = 0;

  vertex_t num_vertices() const { return static_cast<vertex_t>(label.size()); }
};

struct StepTimings {
  double first_cc = 0.0;
  double rooting = 0.0;
  double tagging = 0.0;
  double last_cc = 0.0;

  double total() const { return first_cc + rooting + tagging + last_cc; }
};

struct FastBccOptions {
  CcOptions connectivity;
  WUpdateMode w_update = WUpdateMode::atomic;
};

// Intermediate structures, kept on request for inspection and testing.
struct FastBccArtifacts {
  aux_vector<Edge> spanning_forest;
  RootedForest forest;
  VertexTags tags;
};

struct FastBccResult {
  BccLabeling labeling;
  StepTimings timings;
};

FastBccResult fast_bcc(const Graph& g, const FastBccOptions& options = {}, FastBccArtifacts* artifacts = nullptr);

// Blocks {v : label[v] == l} + {head[l]} for every label that has a head or
// at least two members. Articulation points are not filled in.
BccSets extract_bccs(const Graph& g, const BccLabeling& labeling);

// Non-root heads, plus roots that head at least two labels. Ascending.
std::vector<vertex_t> articulation_points(const Graph& g, const BccLabeling& labeling);

// extract_bccs with the articulation points filled in.
BccSets to_bcc_sets(const Graph& g, const BccLabeling& labeling);

}  // namespace fastbcc
