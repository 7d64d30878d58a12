#include "fastbcc/graph.hpp"

#include <algorithm>

#include "fastbcc/parallel.hpp"

namespace fastbcc {

Graph::Graph(aux_vector<edge_t> offsets, aux_vector<vertex_t> edges)
    : offsets_(std::move(offsets)), edges_(std::move(edges)) {
  if (offsets_.empty()) throw Error(ErrorCode::invalid_structure, "offsets must have n+1 entries");
  if (offsets_.front() != 0 || offsets_.back() != edges_.size())
    throw Error(ErrorCode::invalid_structure, "offsets must start at 0 and end at m");
  if (offsets_.size() - 1 > static_cast<std::size_t>(kNoVertex))
    throw Error(ErrorCode::too_large, "vertex count exceeds the vertex id width");
}

bool Graph::has_edge(vertex_t u, vertex_t v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void validate(const Graph& g) {
  const vertex_t n = g.num_vertices();
  auto offsets = g.offsets();
  for (vertex_t v = 0; v < n; ++v) {
    if (offsets[v] > offsets[v + 1]) throw Error(ErrorCode::invalid_structure, "offsets decrease at vertex " + std::to_string(v));
  }
  for (vertex_t u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const vertex_t v = nb[i];
      if (v >= n) throw Error(ErrorCode::invalid_structure, "neighbor id out of range at vertex " + std::to_string(u));
      if (v == u) throw Error(ErrorCode::invalid_structure, "self loop at vertex " + std::to_string(u));
      if (i > 0 && nb[i - 1] >= v)
        throw Error(ErrorCode::invalid_structure, "neighbor list of vertex " + std::to_string(u) + " is not strictly increasing");
    }
  }
  // Lists are duplicate free, so symmetry reduces to reverse-slot existence.
  for (vertex_t u = 0; u < n; ++u) {
    for (vertex_t v : g.neighbors(u)) {
      if (!g.has_edge(v, u))
        throw Error(ErrorCode::invalid_structure,
                    "edge " + std::to_string(u) + "-" + std::to_string(v) + " has no reverse slot");
    }
  }
}

bool is_valid(const Graph& g) {
  try {
    validate(g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Graph symmetrize(std::span<const Edge> edges, vertex_t n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw Error(ErrorCode::invalid_argument,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range for n=" + std::to_string(n));
  }
  const bool concurrent = num_workers() > 1;
  aux_vector<edge_t> cursor(static_cast<std::size_t>(n) + 1, 0);
  parallel_for(0, edges.size(), [&](std::size_t i) {
    const auto [u, v] = edges[i];
    if (u == v) return;
    fetch_add<edge_t>(cursor[u], 1, concurrent);
    fetch_add<edge_t>(cursor[v], 1, concurrent);
  });
  const edge_t slots = exclusive_scan_inplace(std::span<edge_t>(cursor));
  aux_vector<edge_t> start(cursor);
  aux_vector<vertex_t> scratch(slots);
  parallel_for(0, edges.size(), [&](std::size_t i) {
    const auto [u, v] = edges[i];
    if (u == v) return;
    scratch[fetch_add<edge_t>(cursor[u], 1, concurrent)] = v;
    scratch[fetch_add<edge_t>(cursor[v], 1, concurrent)] = u;
  });

  aux_vector<edge_t> degree(static_cast<std::size_t>(n) + 1, 0);
  parallel_for_dynamic(0, n, [&](std::size_t v) {
    auto first = scratch.begin() + static_cast<std::ptrdiff_t>(start[v]);
    auto last = scratch.begin() + static_cast<std::ptrdiff_t>(start[v + 1]);
    std::sort(first, last);
    degree[v] = static_cast<edge_t>(std::unique(first, last) - first);
  });
  const edge_t m = exclusive_scan_inplace(std::span<edge_t>(degree));
  degree[n] = m;
  aux_vector<vertex_t> out(m);
  parallel_for_dynamic(0, n, [&](std::size_t v) {
    std::copy_n(scratch.begin() + static_cast<std::ptrdiff_t>(start[v]), degree[v + 1] - degree[v],
                out.begin() + static_cast<std::ptrdiff_t>(degree[v]));
  });
  return Graph(std::move(degree), std::move(out));
}

EdgeList undirected_edges(const Graph& g) {
  EdgeList out;
  out.reserve(g.num_edges() / 2);
  for (vertex_t u = 0; u < g.num_vertices(); ++u) {
    for (vertex_t v : g.neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace fastbcc
