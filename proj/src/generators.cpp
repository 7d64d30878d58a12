#include <cmath>

#include "fastbcc/graph.hpp"
#include "fastbcc/parallel.hpp"
#include "fastbcc/random.hpp"

namespace fastbcc {

namespace {

vertex_t checked_vertex_count(std::uint64_t n) {
  if (n >= static_cast<std::uint64_t>(kNoVertex)) throw Error(ErrorCode::too_large, "vertex count exceeds id width");
  return static_cast<vertex_t>(n);
}

constexpr std::uint64_t kGridStream = 0x67726964;    // "grid"
constexpr std::uint64_t kRandomStream = 0x676e7072;  // "gnpr"

}  // namespace

Graph gen_grid(std::uint64_t rows, std::uint64_t cols, bool circular, double keep_prob, std::uint64_t seed) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::invalid_argument, "grid needs rows >= 1 and cols >= 1");
  if (!(keep_prob >= 0.0 && keep_prob <= 1.0)) throw Error(ErrorCode::invalid_argument, "keep probability must lie in [0,1]");
  if (rows > UINT64_MAX / cols) throw Error(ErrorCode::too_large, "grid too large");
  const vertex_t n = checked_vertex_count(rows * cols);

  // Candidate 2v is the edge to the right of v, 2v+1 the edge below it.
  EdgeList edges(2 * static_cast<std::size_t>(n), Edge{0, 0});
  parallel_for(0, n, [&](std::size_t v) {
    const std::uint64_t r = v / cols, c = v % cols;
    auto keep = [&](std::uint64_t candidate) {
      return keep_prob >= 1.0 || rng::uniform(seed, kGridStream, candidate) < keep_prob;
    };
    if (c + 1 < cols || (circular && cols > 1)) {
      const std::uint64_t right = r * cols + (c + 1) % cols;
      if (keep(2 * v)) edges[2 * v] = {static_cast<vertex_t>(v), static_cast<vertex_t>(right)};
    }
    if (r + 1 < rows || (circular && rows > 1)) {
      const std::uint64_t below = ((r + 1) % rows) * cols + c;
      if (keep(2 * v + 1)) edges[2 * v + 1] = {static_cast<vertex_t>(v), static_cast<vertex_t>(below)};
    }
  });
  // Dropped candidates stay (0,0) self loops and vanish in symmetrize.
  return symmetrize(edges, n);
}

Graph gen_chain(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "chain needs at least one vertex");
  const vertex_t nv = checked_vertex_count(n);
  aux_vector<edge_t> offsets(n + 1);
  aux_vector<vertex_t> edges(2 * (n - 1));
  parallel_for(0, n + 1, [&](std::size_t v) { offsets[v] = v == 0 ? 0 : 2 * v - 1 - (v == n ? 1 : 0); });
  parallel_for(0, nv, [&](std::size_t v) {
    edge_t pos = offsets[v];
    if (v > 0) edges[pos++] = static_cast<vertex_t>(v - 1);
    if (v + 1 < n) edges[pos] = static_cast<vertex_t>(v + 1);
  });
  return Graph(std::move(offsets), std::move(edges));
}

Graph gen_random(std::uint64_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::invalid_argument, "edge probability must lie in [0,1]");
  const vertex_t nv = checked_vertex_count(n);
  EdgeList edges;
  if (p > 0.0 && n > 1) {
    // Geometric skipping over the pairs (u, v), v > u, one stream per row.
    std::vector<EdgeList> rows(n);
    const double log_q = std::log1p(-p);
    parallel_for_dynamic(0, nv, [&](std::size_t u) {
      auto& row = rows[u];
      if (p >= 1.0) {
        for (std::uint64_t v = u + 1; v < n; ++v) row.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
        return;
      }
      rng::Stream stream(seed ^ kRandomStream, u);
      std::uint64_t v = u;
      while (true) {
        const double r = stream.next_unit();
        const double skip = std::floor(std::log1p(-r) / log_q);
        if (skip >= static_cast<double>(n - v - 1)) break;
        v += static_cast<std::uint64_t>(skip) + 1;
        row.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
      }
    }, 64);
    std::size_t total = 0;
    for (const auto& row : rows) total += row.size();
    edges.reserve(total);
    for (auto& row : rows) {
      edges.insert(edges.end(), row.begin(), row.end());
      EdgeList().swap(row);
    }
  }
  return symmetrize(edges, nv);
}

}  // namespace fastbcc
