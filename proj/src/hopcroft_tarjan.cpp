#include <algorithm>
#include <vector>

#include "fastbcc/baselines.hpp"
#include "fastbcc/memory.hpp"

namespace fastbcc {

BccSets hopcroft_tarjan(const Graph& g) {
  const vertex_t n = g.num_vertices();
  BccSets out;
  aux_vector<vertex_t> pre(n, kNoVertex), low(n, 0);
  aux_vector<std::uint8_t> articulation(n, 0);
  // Last block that collected a vertex; dedups endpoints while popping.
  aux_vector<std::size_t> stamp(n, SIZE_MAX);

  struct Frame {
    vertex_t v;
    vertex_t parent;
    edge_t next;
  };
  aux_vector<Frame> frames;
  aux_vector<Edge> edge_stack;
  aux_vector<vertex_t> block;
  vertex_t clock = 0;

  for (vertex_t root = 0; root < n; ++root) {
    if (pre[root] != kNoVertex || g.degree(root) == 0) continue;
    pre[root] = low[root] = clock++;
    frames.push_back({root, kNoVertex, g.offset(root)});
    std::size_t root_children = 0;

    while (!frames.empty()) {
      Frame& f = frames.back();
      const vertex_t v = f.v;
      if (f.next < g.offset(v) + g.degree(v)) {
        const vertex_t w = g.edges()[f.next++];
        if (pre[w] == kNoVertex) {
          edge_stack.emplace_back(v, w);
          pre[w] = low[w] = clock++;
          if (v == root) ++root_children;
          frames.push_back({w, v, g.offset(w)});
        } else if (w != f.parent && pre[w] < pre[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], pre[w]);
        }
        continue;
      }
      frames.pop_back();
      if (frames.empty()) break;
      const vertex_t u = frames.back().v;
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= pre[u]) {
        // u separates the subtree of v: everything pushed since u-v is a block.
        const std::size_t id = out.num_blocks();
        block.clear();
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          for (vertex_t x : {e.first, e.second}) {
            if (stamp[x] != id) {
              stamp[x] = id;
              block.push_back(x);
            }
          }
          if (e.first == u && e.second == v) break;
        }
        out.add_block(block.begin(), block.end());
        if (u != root) articulation[u] = 1;
      }
    }
    if (root_children >= 2) articulation[root] = 1;
  }
  for (vertex_t v = 0; v < n; ++v) {
    if (articulation[v]) out.articulation.push_back(v);
  }
  return out;
}

}  // namespace fastbcc
