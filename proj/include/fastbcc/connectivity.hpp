#pragma once

// Parallel connected components with a spanning forest as by-product.
//
// The default pipeline is a low-diameter decomposition (exponential start-time
// BFS ball growing) followed by concurrent union-find over the edges that
// cross clusters. Both phases take an edge predicate, so the same routine
// computes components of G and of any symmetric edge-filtered subgraph.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <concepts>
#include <span>

#include "fastbcc/common.hpp"
#include "fastbcc/graph.hpp"
#include "fastbcc/memory.hpp"
#include "fastbcc/parallel.hpp"
#include "fastbcc/random.hpp"

namespace fastbcc {

struct KeepAllEdges {
  bool operator()(vertex_t, vertex_t) const { return true; }
};

// Concurrent union-find. find() uses path splitting with CAS; unite() links
// the root with the larger id under the smaller one.
class UnionFind {
 public:
  explicit UnionFind(vertex_t n) : parent_(n) {
    parallel_for(0, n, [&](std::size_t i) { parent_[i] = static_cast<vertex_t>(i); });
  }
  // Adopts an existing parent forest (every chain must end at a self-loop).
  explicit UnionFind(aux_vector<vertex_t> parent) : parent_(std::move(parent)) {}

  // Set when constructed while a single worker is active; switches the
  // parent updates to plain stores. Do not share such an instance across threads.
  bool concurrent() const { return concurrent_; }

  vertex_t size() const { return static_cast<vertex_t>(parent_.size()); }

  vertex_t find(vertex_t u) {
    vertex_t cur = u;
    while (true) {
      vertex_t p = atomic_load(parent_[cur]);
      if (p == cur) return cur;
      const vertex_t gp = atomic_load(parent_[p]);
      if (gp != p) {
        vertex_t expected = p;
        compare_and_swap(parent_[cur], expected, gp, concurrent_);
      }
      cur = p;
    }
  }

  // True iff this call merged two distinct sets.
  bool unite(vertex_t u, vertex_t v) {
    if (atomic_load(parent_[u]) == atomic_load(parent_[v])) return false;
    while (true) {
      vertex_t ru = find(u), rv = find(v);
      if (ru == rv) return false;
      if (ru < rv) std::swap(ru, rv);
      vertex_t expected = ru;
      if (compare_and_swap(parent_[ru], expected, rv, concurrent_)) return true;
    }
  }

  aux_vector<vertex_t> release_parents() && { return std::move(parent_); }

 private:
  aux_vector<vertex_t> parent_;
  bool concurrent_ = num_workers() > 1;
};

struct LddPartition {
  aux_vector<vertex_t> cluster;     // cluster id = id of the cluster's center vertex
  aux_vector<vertex_t> bfs_parent;  // BFS tree inside the cluster; centers point to themselves
  double beta = 1.0;
  std::size_t rounds = 0;
};

// beta = 1 / log2(n), clamped to (0, 1].
inline double default_beta(vertex_t n) {
  if (n <= 2) return 1.0;
  return std::min(1.0, 1.0 / std::log2(static_cast<double>(n)));
}

namespace detail {

inline constexpr std::uint64_t kLddStream = 0x6c6464;  // "ldd"

// Exponential(beta) via inversion of a uniform u in [0, 1).
inline double exponential(double u, double beta) { return -std::log1p(-u) / beta; }

}  // namespace detail

// Largest vertex count ldd accepts: a claim packs (cluster, parent) into 64 bits.
inline constexpr std::uint64_t kLddMaxVertices = std::uint64_t{1} << 32;

// Partitions the vertices into clusters that are connected through kept
// edges. Vertex v starts its own cluster at round floor(max_shift - shift_v)
// unless a growing ball reached it earlier; simultaneous arrivals go to the
// smallest cluster id, then the smallest BFS parent.
template <class Keep>
  requires std::predicate<Keep&, vertex_t, vertex_t>
LddPartition ldd(const Graph& g, double beta, std::uint64_t seed, Keep&& keep) {
  if (!(beta > 0.0 && beta <= 1.0)) throw Error(ErrorCode::invalid_argument, "ldd: beta must lie in (0, 1]");
  const vertex_t n = g.num_vertices();
  if (n >= kLddMaxVertices) throw Error(ErrorCode::too_large, "ldd: at most 2^32 - 1 vertices");
  LddPartition out;
  out.beta = beta;
  out.cluster.assign(n, kNoVertex);
  out.bfs_parent.assign(n, kNoVertex);
  if (n == 0) return out;

  // The shift is monotone in u, so the largest shift comes from the largest u.
  const double max_u = parallel_max<double>(0, n, 0.0, [&](std::size_t v) {
    return rng::uniform(seed, detail::kLddStream, v);
  });
  const double max_shift = detail::exponential(max_u, beta);
  if (max_shift >= 1e9) throw Error(ErrorCode::invalid_argument, "ldd: beta too small for this graph");
  const std::size_t num_rounds = static_cast<std::size_t>(max_shift) + 1;

  aux_vector<vertex_t> by_round;
  aux_vector<std::size_t> round_start;
  {
    aux_vector<vertex_t> start(n);
    parallel_for(0, n, [&](std::size_t v) {
      const double shift = detail::exponential(rng::uniform(seed, detail::kLddStream, v), beta);
      start[v] = static_cast<vertex_t>(max_shift - shift);
    });
    counting_sort_indices(n, num_rounds, [&](std::size_t v) { return start[v]; }, by_round, round_start);
  }

  auto& cluster = out.cluster;
  auto& bfs_parent = out.bfs_parent;
  // claim[w] = (cluster << 32) | parent; the minimum wins.
  constexpr std::uint64_t kUnclaimed = ~std::uint64_t{0};
  const bool concurrent = num_workers() > 1;
  aux_vector<vertex_t> frontier(n), next(n);
  aux_vector<std::uint64_t> claim(n, kUnclaimed);
  std::size_t frontier_size = 0;

  std::size_t round = 0;
  for (; round < num_rounds || frontier_size > 0; ++round) {
    if (round < num_rounds) {
      parallel_for(round_start[round], round_start[round + 1], [&](std::size_t i) {
        const vertex_t v = by_round[i];
        if (cluster[v] != kNoVertex) return;
        cluster[v] = v;
        bfs_parent[v] = v;
        frontier[fetch_add<std::size_t>(frontier_size, 1, concurrent)] = v;
      });
    }
    if (frontier_size == 0) continue;

    std::size_t next_size = 0;
    parallel_for_dynamic(0, frontier_size, [&](std::size_t i) {
      const vertex_t u = frontier[i];
      const std::uint64_t mine = (static_cast<std::uint64_t>(cluster[u]) << 32) | u;
      for (vertex_t w : g.neighbors(u)) {
        if (atomic_load(cluster[w]) != kNoVertex || !keep(u, w)) continue;
        std::uint64_t cur = atomic_load(claim[w]);
        while (mine < cur) {
          if (compare_and_swap(claim[w], cur, mine, concurrent)) {
            if (cur == kUnclaimed) next[fetch_add<std::size_t>(next_size, 1, concurrent)] = w;
            break;
          }
        }
      }
    });
    parallel_for(0, next_size, [&](std::size_t i) {
      const vertex_t w = next[i];
      cluster[w] = static_cast<vertex_t>(claim[w] >> 32);
      bfs_parent[w] = static_cast<vertex_t>(claim[w] & 0xffffffffu);
    });
    std::swap(frontier, next);
    frontier_size = next_size;
  }
  out.rounds = round;
  return out;
}

inline LddPartition ldd(const Graph& g, double beta, std::uint64_t seed) {
  return ldd(g, beta, seed, KeepAllEdges{});
}

struct CcOptions {
  bool use_ldd = true;  // plain union-find when false or when n >= kLddMaxVertices
  double beta = 0.0;  // 0 selects default_beta(n)
  std::uint64_t seed = 0x5eedbcc;
  bool record_forest = true;
};

struct CCResult {
  aux_vector<vertex_t> labels;  // smallest vertex id of the component
  aux_vector<Edge> forest_edges;
  vertex_t num_components = 0;
};

// Connected components of the subgraph of g made of the edges accepted by
// keep, which must be symmetric.
template <class Keep>
  requires std::predicate<Keep&, vertex_t, vertex_t>
CCResult connected_components(const Graph& g, Keep&& keep, const CcOptions& options = {}) {
  const vertex_t n = g.num_vertices();
  CCResult out;
  if (n == 0) return out;

  const bool record = options.record_forest;
  const bool concurrent = num_workers() > 1;
  if (record) out.forest_edges.resize(n - 1);
  std::size_t forest_size = 0;

  aux_vector<vertex_t> initial;
  if (options.use_ldd && n < kLddMaxVertices) {
    const double beta = options.beta > 0.0 ? options.beta : default_beta(n);
    LddPartition part = ldd(g, beta, options.seed, keep);
    parallel_for(0, n, [&](std::size_t v) {
      const vertex_t p = part.bfs_parent[v];
      if (p != v && record) out.forest_edges[fetch_add<std::size_t>(forest_size, 1, concurrent)] = {p, static_cast<vertex_t>(v)};
    });
    release(part.bfs_parent);
    initial = std::move(part.cluster);
  } else {
    initial.resize(n);
    parallel_for(0, n, [&](std::size_t v) { initial[v] = static_cast<vertex_t>(v); });
  }

  UnionFind uf(std::move(initial));
  parallel_for_dynamic(0, n, [&](std::size_t ui) {
    const auto u = static_cast<vertex_t>(ui);
    for (vertex_t v : g.neighbors(u)) {
      if (v <= u || !keep(u, v)) continue;
      if (uf.unite(u, v) && record) out.forest_edges[fetch_add<std::size_t>(forest_size, 1, concurrent)] = {u, v};
    }
  });
  if (record) out.forest_edges.resize(forest_size);

  out.labels.resize(n);
  parallel_for(0, n, [&](std::size_t v) { out.labels[v] = uf.find(static_cast<vertex_t>(v)); });
  // Canonical label: smallest member. The root slots of the union-find array
  // are reused to collect per-component minima.
  aux_vector<vertex_t> smallest = std::move(uf).release_parents();
  parallel_for(0, n, [&](std::size_t v) {
    if (out.labels[v] == v) smallest[v] = kNoVertex;
  });
  parallel_for(0, n, [&](std::size_t v) { write_min(smallest[out.labels[v]], static_cast<vertex_t>(v), concurrent); });
  parallel_for(0, n, [&](std::size_t v) { out.labels[v] = smallest[out.labels[v]]; });
  out.num_components =
      static_cast<vertex_t>(parallel_count(0, n, [&](std::size_t v) { return out.labels[v] == v; }));
  return out;
}

inline CCResult connected_components(const Graph& g, const CcOptions& options = {}) {
  return connected_components(g, KeepAllEdges{}, options);
}

}  // namespace fastbcc
