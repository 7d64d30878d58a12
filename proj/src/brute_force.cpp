#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "fastbcc/baselines.hpp"

namespace fastbcc {

namespace {

class SmallUnionFind {
 public:
  explicit SmallUnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t count_components(const Graph& g, vertex_t removed) {
  const vertex_t n = g.num_vertices();
  SmallUnionFind uf(n);
  for (vertex_t u = 0; u < n; ++u) {
    if (u == removed) continue;
    for (vertex_t v : g.neighbors(u)) {
      if (v != removed) uf.unite(u, v);
    }
  }
  std::size_t count = 0;
  for (vertex_t v = 0; v < n; ++v) count += (v != removed && uf.find(v) == v) ? 1 : 0;
  return count;
}

}  // namespace

BccSets brute_force_bcc(const Graph& g) {
  const vertex_t n = g.num_vertices();
  if (n > kBruteForceMaxVertices)
    throw Error(ErrorCode::too_large, "brute_force_bcc supports at most " + std::to_string(kBruteForceMaxVertices) + " vertices");

  constexpr vertex_t kMax = kBruteForceMaxVertices;
  std::array<std::array<int, kMax>, kMax> edge_id{};
  for (auto& row : edge_id) row.fill(-1);
  EdgeList edges = undirected_edges(g);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edge_id[edges[i].first][edges[i].second] = edge_id[edges[i].second][edges[i].first] = static_cast<int>(i);
  }
  SmallUnionFind classes(edges.size());

  // Every simple cycle once: its smallest vertex s starts the path, all other
  // vertices exceed s, and path[1] < path.back() fixes the orientation.
  std::vector<vertex_t> path;
  std::array<bool, kMax> on_path{};
  auto close_cycle = [&] {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) classes.unite(edge_id[path[i]][path[i + 1]], edge_id[path[0]][path[1]]);
    classes.unite(edge_id[path.back()][path[0]], edge_id[path[0]][path[1]]);
  };
  auto extend = [&](auto&& self, vertex_t s) -> void {
    const vertex_t tip = path.back();
    for (vertex_t w : g.neighbors(tip)) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) close_cycle();
      if (w <= s || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      self(self, s);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (vertex_t s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path.fill(false);
    on_path[s] = true;
    extend(extend, s);
  }

  // Blocks: vertex sets of the edge classes.
  std::vector<std::vector<vertex_t>> by_class(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& b = by_class[classes.find(i)];
    b.push_back(edges[i].first);
    b.push_back(edges[i].second);
  }
  BccSets out;
  for (auto& b : by_class) {
    if (b.empty()) continue;
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    out.add_block(b.begin(), b.end());
  }
  const std::size_t base = count_components(g, kNoVertex);
  for (vertex_t v = 0; v < n; ++v) {
    if (count_components(g, v) > base) out.articulation.push_back(v);
  }
  return out;
}

}  // namespace fastbcc
