#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fastbcc/fastbcc.h"

namespace {

struct Graph {
  fbcc_graph* g = nullptr;
  ~Graph() { fbcc_graph_free(g); }
};

struct Blocks {
  fbcc_blocks* b = nullptr;
  ~Blocks() { fbcc_blocks_free(b); }
};

std::vector<std::vector<uint64_t>> all_blocks(const fbcc_blocks* b) {
  std::vector<std::vector<uint64_t>> out;
  for (uint64_t i = 0; i < fbcc_blocks_count(b); ++i) {
    uint64_t size = 0;
    const uint64_t* v = fbcc_blocks_get(b, i, &size);
    out.emplace_back(v, v + size);
  }
  return out;
}

}  // namespace

TEST_CASE("graph construction and accessors") {
  Graph g;
  const uint64_t pairs[] = {0, 1, 1, 2, 2, 0, 2, 3};
  REQUIRE(fbcc_graph_from_edges(4, pairs, 4, &g.g) == FBCC_OK);
  CHECK(fbcc_graph_num_vertices(g.g) == 4);
  CHECK(fbcc_graph_num_edges(g.g) == 8);

  Graph bad;
  const uint64_t out_of_range[] = {0, 9};
  CHECK(fbcc_graph_from_edges(4, out_of_range, 1, &bad.g) == FBCC_ERR_INVALID_ARGUMENT);
  CHECK(bad.g == nullptr);
  CHECK(std::string(fbcc_last_error()).size() > 0);
  CHECK(fbcc_gen_chain(10, nullptr) == FBCC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(fbcc_status_string(FBCC_ERR_IO)).size() > 0);

  Graph grid;
  REQUIRE(fbcc_gen_grid(3, 4, 1, 1.0, 1, &grid.g) == FBCC_OK);
  CHECK(fbcc_graph_num_edges(grid.g) == 48);
  Graph rnd;
  CHECK(fbcc_gen_random(100, 1.5, 1, &rnd.g) == FBCC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("blocks and runs") {
  Graph g;
  const uint64_t pairs[] = {0, 1, 1, 2, 2, 0, 2, 3, 3, 4, 4, 2};
  REQUIRE(fbcc_graph_from_edges(5, pairs, 6, &g.g) == FBCC_OK);
  for (fbcc_algo a : {FBCC_ALGO_FASTBCC, FBCC_ALGO_HOPCROFT_TARJAN}) {
    Blocks b;
    REQUIRE(fbcc_blocks_compute(g.g, a, &b.b) == FBCC_OK);
    auto blocks = all_blocks(b.b);
    for (auto& x : blocks) std::sort(x.begin(), x.end());
    std::sort(blocks.begin(), blocks.end());
    CHECK(blocks == std::vector<std::vector<uint64_t>>{{0, 1, 2}, {2, 3, 4}});
    REQUIRE(fbcc_blocks_num_articulation(b.b) == 1);
    CHECK(fbcc_blocks_articulation(b.b)[0] == 2);
    uint64_t size = 7;
    CHECK(fbcc_blocks_get(b.b, 2, &size) == nullptr);
  }
  Blocks tv;
  CHECK(fbcc_blocks_compute(g.g, FBCC_ALGO_TARJAN_VISHKIN, &tv.b) == FBCC_ERR_INVALID_ARGUMENT);
  for (fbcc_algo a : {FBCC_ALGO_FASTBCC, FBCC_ALGO_HOPCROFT_TARJAN, FBCC_ALGO_TARJAN_VISHKIN}) {
    fbcc_run_stats s{};
    REQUIRE(fbcc_run(g.g, a, &s) == FBCC_OK);
    CHECK(s.bcc_count == 2);
    CHECK(s.total_seconds >= 0);
    CHECK(s.peak_aux_words > 0);
  }
  fbcc_run_stats s{};
  CHECK(fbcc_run(g.g, static_cast<fbcc_algo>(9), &s) == FBCC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verify and its negative control") {
  Graph g;
  REQUIRE(fbcc_gen_random(300, 0.01, 4, &g.g) == FBCC_OK);
  int match = 0;
  char message[256];
  REQUIRE(fbcc_verify(g.g, 0, &match, message, sizeof message) == FBCC_OK);
  CHECK(match == 1);
  REQUIRE(fbcc_verify(g.g, 1, &match, message, sizeof message) == FBCC_OK);
  CHECK(match == 0);
  CHECK(std::string(message).size() > 0);
}

TEST_CASE("thread settings") {
  CHECK(fbcc_set_threads(2) == FBCC_OK);
  CHECK(fbcc_get_threads() == 2);
  CHECK(fbcc_set_threads(-1) == FBCC_ERR_INVALID_ARGUMENT);
  CHECK(fbcc_set_threads(0) == FBCC_OK);
  CHECK(fbcc_get_threads() >= 1);
}

TEST_CASE("file round trip and load errors") {
  const auto dir = std::filesystem::temp_directory_path() / "fastbcc_c_api_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "chain.bin").string();
  Graph g;
  REQUIRE(fbcc_gen_chain(50, &g.g) == FBCC_OK);
  REQUIRE(fbcc_graph_write_bin(g.g, path.c_str()) == FBCC_OK);
  Graph back;
  int normalized = -1, legacy = -1;
  REQUIRE(fbcc_graph_load(path.c_str(), &back.g, &normalized, &legacy) == FBCC_OK);
  CHECK(fbcc_graph_num_edges(back.g) == 98);
  CHECK(normalized == 0);
  CHECK(legacy == 0);
  Graph missing;
  CHECK(fbcc_graph_load((dir / "nope.bin").string().c_str(), &missing.g, nullptr, nullptr) == FBCC_ERR_IO);
  std::filesystem::remove_all(dir);
}
