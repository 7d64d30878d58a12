#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fastbcc/common.hpp"
#include "fastbcc/memory.hpp"

namespace fastbcc {

// Immutable undirected graph in compressed sparse row form. Every undirected
// edge occupies two directed slots, so num_edges() is twice the number of
// undirected edges.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}
  Graph(aux_vector<edge_t> offsets, aux_vector<vertex_t> edges);
  Graph(const std::vector<edge_t>& offsets, const std::vector<vertex_t>& edges)
      : Graph(aux_vector<edge_t>(offsets.begin(), offsets.end()), aux_vector<vertex_t>(edges.begin(), edges.end())) {}

  vertex_t num_vertices() const { return static_cast<vertex_t>(offsets_.size() - 1); }
  edge_t num_edges() const { return edges_.size(); }

  std::span<const vertex_t> neighbors(vertex_t v) const {
    return {edges_.data() + offsets_[v], edges_.data() + offsets_[v + 1]};
  }
  edge_t degree(vertex_t v) const { return offsets_[v + 1] - offsets_[v]; }
  edge_t offset(vertex_t v) const { return offsets_[v]; }

  std::span<const edge_t> offsets() const { return offsets_; }
  std::span<const vertex_t> edges() const { return edges_; }

  // Binary search in the sorted neighbor list of u.
  bool has_edge(vertex_t u, vertex_t v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  aux_vector<edge_t> offsets_;
  aux_vector<vertex_t> edges_;
};

using Edge = std::pair<vertex_t, vertex_t>;
using EdgeList = std::vector<Edge>;

// Checks the CSR invariants: offsets well formed, ids in range, neighbor lists
// sorted and duplicate free, no self loops, symmetric. Throws Error on failure.
void validate(const Graph& g);

// Returns true when validate(g) would not throw.
bool is_valid(const Graph& g);

// Undirected simple graph containing u-v for every input pair with u != v.
Graph symmetrize(std::span<const Edge> edges, vertex_t n);

// Undirected edges of g with u < v, in CSR order.
EdgeList undirected_edges(const Graph& g);

// ---- file formats ---------------------------------------------------------

struct LoadInfo {
  // Set when a .bin header carries the legacy (n-1)*8 size formula.
  bool legacy_size_field = false;
};

Graph load_bin(const std::filesystem::path& path, LoadInfo* info = nullptr);
void write_bin(const Graph& g, const std::filesystem::path& path);
Graph load_adj(const std::filesystem::path& path);
void write_adj(const Graph& g, const std::filesystem::path& path);

// Chooses the reader from the extension (.bin / .adj), falling back to
// sniffing the "AdjacencyGraph" header.
Graph load_graph(const std::filesystem::path& path, LoadInfo* info = nullptr);

// Byte size of g in .bin layout: 3*8 + (n+1)*8 + m*4.
std::uint64_t bin_file_size(std::uint64_t n, std::uint64_t m);

// ---- generators -----------------------------------------------------------

// rows x cols 4-neighbor grid; `circular` adds row and column wraparound.
// Each candidate edge is kept independently with probability keep_prob.
Graph gen_grid(std::uint64_t rows, std::uint64_t cols, bool circular, double keep_prob,
               std::uint64_t seed);

// Path 0 - 1 - ... - (n-1).
Graph gen_chain(std::uint64_t n);

// Erdos-Renyi G(n, p).
Graph gen_random(std::uint64_t n, double p, std::uint64_t seed);

}  // namespace fastbcc
