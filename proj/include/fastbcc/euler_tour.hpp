#pragma once

// Rooting spanning forests with the Euler tour technique.
//
// Tour positions: a tree with n_t vertices owns the 2*n_t consecutive
// positions [base, base + 2*n_t). Its root takes first = base and
// last = base + 2*n_t - 1; the directed tour edge with rank k (counted from
// the root's first outgoing edge) sits at position base + k + 1, and every
// other vertex takes the min/max position over the tour edges entering it.
// Trees are laid out by increasing root id.

#include <span>

#include "fastbcc/common.hpp"
#include "fastbcc/graph.hpp"
#include "fastbcc/memory.hpp"

namespace fastbcc {

struct RootedForest {
  aux_vector<vertex_t> parent;  // parent[root] == root
  aux_vector<tour_t> first;
  aux_vector<tour_t> last;
  aux_vector<vertex_t> roots;   // ascending

  vertex_t num_vertices() const { return static_cast<vertex_t>(parent.size()); }
  bool is_root(vertex_t v) const { return parent[v] == v; }

  // u lies on the tree path from the root to v (u == v included).
  bool is_ancestor(vertex_t u, vertex_t v) const { return first[u] <= first[v] && last[u] >= first[v]; }
};

inline bool is_ancestor(const RootedForest& rf, vertex_t u, vertex_t v) { return rf.is_ancestor(u, v); }

// Distance of every node from `head` along `next` (kNoVertex terminates a
// chain; a link back to head closes a cycle). Every node must lie on the list.
aux_vector<tour_t> list_ranking(std::span<const tour_t> next, tour_t head);

// Ranks several disjoint lists at once. owner[i] receives the index into
// `heads` of the list holding node i. Throws if a node is on no list, if two
// heads share a list, or if a walk exceeds the node count.
void rank_lists(std::span<const tour_t> next, std::span<const tour_t> heads, std::span<tour_t> rank,
                std::span<tour_t> owner);

// Roots every tree of the forest given by tree_edges at the listed root.
RootedForest build_euler_tour(vertex_t n, std::span<const Edge> tree_edges, std::span<const vertex_t> roots);

}  // namespace fastbcc
