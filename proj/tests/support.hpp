#pragma once

// Sequential reference implementations and graph builders shared by the tests.

#include <algorithm>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "fastbcc/bcc_sets.hpp"
#include "fastbcc/fast_bcc.hpp"
#include "fastbcc/graph.hpp"

namespace fbtest {

using fastbcc::Edge;
using fastbcc::EdgeList;
using fastbcc::Graph;
using fastbcc::vertex_t;

inline Graph make_graph(vertex_t n, const EdgeList& edges) { return fastbcc::symmetrize(edges, n); }

inline Graph cycle(vertex_t n) {
  EdgeList e;
  for (vertex_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e);
}

inline Graph star(vertex_t leaves) {
  EdgeList e;
  for (vertex_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make_graph(leaves + 1, e);
}

inline Graph complete(vertex_t n) {
  EdgeList e;
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make_graph(n, e);
}

// Triangles {0,1,2} and {2,3,4} sharing vertex 2.
inline Graph bowtie() { return make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}); }

// `count` triangles hanging off a shared articulation vertex 0, with a tail
// path; exercises multi-block roots.
inline Graph flower(vertex_t count) {
  EdgeList e;
  vertex_t next = 1;
  for (vertex_t i = 0; i < count; ++i) {
    e.emplace_back(0, next);
    e.emplace_back(next, next + 1);
    e.emplace_back(next + 1, 0);
    next += 2;
  }
  e.emplace_back(0, next);
  return make_graph(next + 1, e);
}

struct NamedGraph {
  std::string name;
  Graph g;
};

// Small structured graphs plus seeded random ones, including disconnected
// graphs and isolated vertices.
inline std::vector<NamedGraph> corpus() {
  std::vector<NamedGraph> out;
  out.push_back({"empty", Graph{}});
  out.push_back({"single", fastbcc::gen_chain(1)});
  out.push_back({"K2", fastbcc::gen_chain(2)});
  out.push_back({"chain7", fastbcc::gen_chain(7)});
  out.push_back({"C3", cycle(3)});
  out.push_back({"C8", cycle(8)});
  out.push_back({"star6", star(6)});
  out.push_back({"K5", complete(5)});
  out.push_back({"bowtie", bowtie()});
  out.push_back({"flower4", flower(4)});
  out.push_back({"grid4x5", fastbcc::gen_grid(4, 5, false, 1.0, 1)});
  out.push_back({"torus5x5", fastbcc::gen_grid(5, 5, true, 1.0, 1)});
  out.push_back({"sparse_grid", fastbcc::gen_grid(8, 8, true, 0.6, 3)});
  out.push_back({"isolated+edge", make_graph(5, {{1, 3}})});
  for (std::uint64_t s = 0; s < 40; ++s) {
    const vertex_t n = 4 + static_cast<vertex_t>(s % 9) * 7;
    const double p = 0.02 + 0.48 * static_cast<double>((s * 37) % 40) / 40.0;
    out.push_back({"gnp" + std::to_string(s), fastbcc::gen_random(n, p, 1000 + s)});
  }
  return out;
}

// Component labels over the kept edges by BFS; label = smallest member.
template <class Keep>
std::vector<vertex_t> bfs_labels(const Graph& g, Keep keep) {
  const vertex_t n = g.num_vertices();
  std::vector<vertex_t> label(n, fastbcc::kNoVertex);
  for (vertex_t s = 0; s < n; ++s) {
    if (label[s] != fastbcc::kNoVertex) continue;
    label[s] = s;
    std::queue<vertex_t> q;
    q.push(s);
    while (!q.empty()) {
      const vertex_t u = q.front();
      q.pop();
      for (vertex_t v : g.neighbors(u)) {
        if (label[v] == fastbcc::kNoVertex && keep(u, v)) {
          label[v] = s;
          q.push(v);
        }
      }
    }
  }
  return label;
}

inline std::vector<vertex_t> bfs_labels(const Graph& g) {
  return bfs_labels(g, [](vertex_t, vertex_t) { return true; });
}

inline std::size_t count_components_without(const Graph& g, vertex_t removed) {
  auto label = bfs_labels(g, [&](vertex_t u, vertex_t v) { return u != removed && v != removed; });
  std::size_t c = 0;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) c += (v != removed && label[v] == v) ? 1 : 0;
  return c;
}

// Vertices whose removal increases the number of components.
inline std::vector<vertex_t> removal_articulation(const Graph& g) {
  const std::size_t base = count_components_without(g, fastbcc::kNoVertex);
  std::vector<vertex_t> out;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    if (count_components_without(g, v) > base) out.push_back(v);
  }
  return out;
}

struct DfsTree {
  std::vector<vertex_t> parent;
  std::vector<std::vector<vertex_t>> subtree;  // sorted vertex set of T_v
};

// Roots every tree of the forest given by `edges` at its listed root with an
// iterative DFS and enumerates all subtrees.
inline DfsTree dfs_rooting(vertex_t n, const EdgeList& edges, const std::vector<vertex_t>& roots) {
  std::vector<std::vector<vertex_t>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  DfsTree t;
  t.parent.assign(n, fastbcc::kNoVertex);
  t.subtree.assign(n, {});
  std::vector<vertex_t> order;
  for (vertex_t r : roots) {
    t.parent[r] = r;
    std::vector<vertex_t> stack{r};
    while (!stack.empty()) {
      const vertex_t u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (vertex_t w : adj[u]) {
        if (t.parent[w] == fastbcc::kNoVertex) {
          t.parent[w] = u;
          stack.push_back(w);
        }
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const vertex_t u = *it;
    t.subtree[u].push_back(u);
    std::sort(t.subtree[u].begin(), t.subtree[u].end());
    if (t.parent[u] != u) {
      auto& p = t.subtree[t.parent[u]];
      p.insert(p.end(), t.subtree[u].begin(), t.subtree[u].end());
    }
  }
  return t;
}

inline bool contains(const std::vector<vertex_t>& sorted, vertex_t v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Edge classes straight from subtree sets: a tree edge p-v is a fence iff no
// edge leaves T_v for a vertex outside T_p; a non-tree edge is back iff one
// endpoint's subtree holds the other.
inline fastbcc::EdgeClass brute_edge_class(const Graph& g, const DfsTree& dfs, vertex_t u, vertex_t v) {
  using fastbcc::EdgeClass;
  const bool tree = dfs.parent[v] == u || dfs.parent[u] == v;
  if (!tree) {
    return contains(dfs.subtree[u], v) || contains(dfs.subtree[v], u) ? EdgeClass::back : EdgeClass::cross;
  }
  if (dfs.parent[u] == v) std::swap(u, v);
  for (vertex_t x : dfs.subtree[v]) {
    for (vertex_t y : g.neighbors(x)) {
      if (!contains(dfs.subtree[u], y)) return EdgeClass::plain_tree;
    }
  }
  return EdgeClass::fence_tree;
}

}  // namespace fbtest
