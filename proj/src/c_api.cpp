#include "fastbcc/fastbcc.h"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "fastbcc/baselines.hpp"
#include "fastbcc/fast_bcc.hpp"
#include "fastbcc/graph.hpp"
#include "fastbcc/memory.hpp"
#include "fastbcc/parallel.hpp"

struct fbcc_graph {
  fastbcc::Graph g;
};

struct fbcc_blocks {
  std::vector<std::uint64_t> offsets{0};
  std::vector<std::uint64_t> vertices;
  std::vector<std::uint64_t> articulation;
};

namespace {

thread_local std::string g_last_error;

fbcc_status to_status(fastbcc::ErrorCode code) {
  switch (code) {
    case fastbcc::ErrorCode::io: return FBCC_ERR_IO;
    case fastbcc::ErrorCode::format: return FBCC_ERR_FORMAT;
    case fastbcc::ErrorCode::invalid_argument: return FBCC_ERR_INVALID_ARGUMENT;
    case fastbcc::ErrorCode::invalid_structure: return FBCC_ERR_INVALID_STRUCTURE;
    case fastbcc::ErrorCode::too_large: return FBCC_ERR_TOO_LARGE;
    case fastbcc::ErrorCode::internal: return FBCC_ERR_INTERNAL;
  }
  return FBCC_ERR_INTERNAL;
}

fbcc_status fail(fbcc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, mapping exceptions to status codes.
template <class F>
fbcc_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return FBCC_OK;
  } catch (const fastbcc::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FBCC_ERR_TOO_LARGE, "out of memory");
  } catch (const std::exception& e) {
    return fail(FBCC_ERR_INTERNAL, e.what());
  }
}

fbcc_status null_argument(const char* what) {
  return fail(FBCC_ERR_INVALID_ARGUMENT, std::string(what) + " must not be NULL");
}

fastbcc::Graph normalize(const fastbcc::Graph& g) {
  fastbcc::EdgeList edges;
  edges.reserve(g.num_edges());
  for (fastbcc::vertex_t u = 0; u < g.num_vertices(); ++u) {
    for (fastbcc::vertex_t v : g.neighbors(u)) edges.emplace_back(u, v);
  }
  return fastbcc::symmetrize(edges, g.num_vertices());
}

fbcc_status emit_graph(fastbcc::Graph g, fbcc_graph** out) {
  *out = new fbcc_graph{std::move(g)};
  return FBCC_OK;
}

fastbcc::BccSets compute_sets(const fastbcc::Graph& g, fbcc_algo algo, bool corrupt) {
  if (algo == FBCC_ALGO_HOPCROFT_TARJAN) return fastbcc::hopcroft_tarjan(g);
  fastbcc::FastBccResult r = fastbcc::fast_bcc(g);
  if (corrupt) {
    // Drop the head of the first headed label: that block loses a vertex.
    auto& lab = r.labeling;
    for (std::size_t l = 0; l < lab.head.size(); ++l) {
      if (lab.head[l] != fastbcc::kNoVertex) {
        lab.head[l] = fastbcc::kNoVertex;
        break;
      }
    }
  }
  return fastbcc::to_bcc_sets(g, r.labeling);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

extern "C" {

const char* fbcc_status_string(fbcc_status status) {
  switch (status) {
    case FBCC_OK: return "ok";
    case FBCC_ERR_IO: return "i/o error";
    case FBCC_ERR_FORMAT: return "format error";
    case FBCC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FBCC_ERR_INVALID_STRUCTURE: return "invalid structure";
    case FBCC_ERR_TOO_LARGE: return "too large";
    case FBCC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* fbcc_last_error(void) { return g_last_error.c_str(); }

fbcc_status fbcc_graph_load(const char* path, fbcc_graph** out, int* normalized, int* legacy_header) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    fastbcc::LoadInfo info;
    fastbcc::Graph g = fastbcc::load_graph(path, &info);
    const bool valid = fastbcc::is_valid(g);
    if (!valid) g = normalize(g);
    if (normalized) *normalized = valid ? 0 : 1;
    if (legacy_header) *legacy_header = info.legacy_size_field ? 1 : 0;
    emit_graph(std::move(g), out);
  });
}

fbcc_status fbcc_graph_write_bin(const fbcc_graph* g, const char* path) {
  if (!g) return null_argument("graph");
  if (!path) return null_argument("path");
  return guarded([&] { fastbcc::write_bin(g->g, path); });
}

fbcc_status fbcc_graph_from_edges(uint64_t n, const uint64_t* pairs, uint64_t count, fbcc_graph** out) {
  if (!out) return null_argument("out");
  if (!pairs && count > 0) return null_argument("pairs");
  *out = nullptr;
  if (n >= fastbcc::kNoVertex) return fail(FBCC_ERR_TOO_LARGE, "vertex count exceeds the id width");
  return guarded([&] {
    fastbcc::EdgeList edges(count);
    for (uint64_t i = 0; i < count; ++i) {
      if (pairs[2 * i] >= n || pairs[2 * i + 1] >= n)
        throw fastbcc::Error(fastbcc::ErrorCode::invalid_argument, "edge " + std::to_string(i) + " has an endpoint >= n");
      edges[i] = {static_cast<fastbcc::vertex_t>(pairs[2 * i]), static_cast<fastbcc::vertex_t>(pairs[2 * i + 1])};
    }
    emit_graph(fastbcc::symmetrize(edges, static_cast<fastbcc::vertex_t>(n)), out);
  });
}

fbcc_status fbcc_gen_grid(uint64_t rows, uint64_t cols, int circular, double keep_prob, uint64_t seed,
                          fbcc_graph** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { emit_graph(fastbcc::gen_grid(rows, cols, circular != 0, keep_prob, seed), out); });
}

fbcc_status fbcc_gen_chain(uint64_t n, fbcc_graph** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { emit_graph(fastbcc::gen_chain(n), out); });
}

fbcc_status fbcc_gen_random(uint64_t n, double p, uint64_t seed, fbcc_graph** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { emit_graph(fastbcc::gen_random(n, p, seed), out); });
}

uint64_t fbcc_graph_num_vertices(const fbcc_graph* g) { return g ? g->g.num_vertices() : 0; }

uint64_t fbcc_graph_num_edges(const fbcc_graph* g) { return g ? g->g.num_edges() : 0; }

void fbcc_graph_free(fbcc_graph* g) { delete g; }

fbcc_status fbcc_set_threads(int threads) {
  if (threads < 0) return fail(FBCC_ERR_INVALID_ARGUMENT, "thread count must be >= 0");
  fastbcc::set_num_workers(threads == 0 ? fastbcc::default_num_workers() : threads);
  return FBCC_OK;
}

int fbcc_get_threads(void) { return fastbcc::num_workers(); }

fbcc_status fbcc_run(const fbcc_graph* g, fbcc_algo algo, fbcc_run_stats* stats) {
  if (!g) return null_argument("graph");
  if (!stats) return null_argument("stats");
  *stats = fbcc_run_stats{};
  return guarded([&] {
    const auto start = std::chrono::steady_clock::now();
    switch (algo) {
      case FBCC_ALGO_FASTBCC: {
        fastbcc::memory::PeakScope scope;
        fastbcc::FastBccResult r = fastbcc::fast_bcc(g->g);
        stats->bcc_count = r.labeling.bcc_count;
        stats->total_seconds = r.timings.total();
        stats->first_cc_seconds = r.timings.first_cc;
        stats->rooting_seconds = r.timings.rooting;
        stats->tagging_seconds = r.timings.tagging;
        stats->last_cc_seconds = r.timings.last_cc;
        stats->peak_aux_words = scope.peak_words();
        return;
      }
      case FBCC_ALGO_HOPCROFT_TARJAN: {
        fastbcc::memory::PeakScope scope;
        fastbcc::BccSets sets = fastbcc::hopcroft_tarjan(g->g);
        stats->total_seconds = seconds_since(start);
        stats->bcc_count = sets.num_blocks();
        stats->peak_aux_words = scope.peak_words();
        return;
      }
      case FBCC_ALGO_TARJAN_VISHKIN: {
        fastbcc::TarjanVishkinResult r = fastbcc::tarjan_vishkin(g->g);
        stats->total_seconds = seconds_since(start);
        stats->bcc_count = r.block_count;
        stats->peak_aux_words = r.memory_words;
        return;
      }
    }
    throw fastbcc::Error(fastbcc::ErrorCode::invalid_argument, "unknown algorithm " + std::to_string(static_cast<int>(algo)));
  });
}

fbcc_status fbcc_blocks_compute(const fbcc_graph* g, fbcc_algo algo, fbcc_blocks** out) {
  if (!g) return null_argument("graph");
  if (!out) return null_argument("out");
  *out = nullptr;
  if (algo != FBCC_ALGO_FASTBCC && algo != FBCC_ALGO_HOPCROFT_TARJAN)
    return fail(FBCC_ERR_INVALID_ARGUMENT, "block sets are available for fastbcc and hopcroft-tarjan only");
  return guarded([&] {
    fastbcc::BccSets sets = compute_sets(g->g, algo, false);
    auto* b = new fbcc_blocks;
    b->offsets.assign(sets.block_offsets.begin(), sets.block_offsets.end());
    b->vertices.assign(sets.block_vertices.begin(), sets.block_vertices.end());
    b->articulation.assign(sets.articulation.begin(), sets.articulation.end());
    *out = b;
  });
}

uint64_t fbcc_blocks_count(const fbcc_blocks* b) { return b ? b->offsets.size() - 1 : 0; }

const uint64_t* fbcc_blocks_get(const fbcc_blocks* b, uint64_t i, uint64_t* size) {
  if (!b || i + 1 >= b->offsets.size()) {
    if (size) *size = 0;
    return nullptr;
  }
  if (size) *size = b->offsets[i + 1] - b->offsets[i];
  return b->vertices.data() + b->offsets[i];
}

uint64_t fbcc_blocks_num_articulation(const fbcc_blocks* b) { return b ? b->articulation.size() : 0; }

const uint64_t* fbcc_blocks_articulation(const fbcc_blocks* b) { return b ? b->articulation.data() : nullptr; }

void fbcc_blocks_free(fbcc_blocks* b) { delete b; }

fbcc_status fbcc_verify(const fbcc_graph* g, int corrupt_for_testing, int* match, char* message, size_t capacity) {
  if (!g) return null_argument("graph");
  if (!match) return null_argument("match");
  *match = 0;
  if (message && capacity > 0) message[0] = '\0';
  return guarded([&] {
    const auto expected = fastbcc::canonical_partition(compute_sets(g->g, FBCC_ALGO_HOPCROFT_TARJAN, false));
    const auto actual = fastbcc::canonical_partition(compute_sets(g->g, FBCC_ALGO_FASTBCC, corrupt_for_testing != 0));
    const auto diff = fastbcc::first_difference(expected, actual);
    *match = diff ? 0 : 1;
    if (diff && message && capacity > 0) {
      const std::size_t len = std::min(capacity - 1, diff->size());
      std::memcpy(message, diff->data(), len);
      message[len] = '\0';
    }
  });
}

}  // extern "C"
