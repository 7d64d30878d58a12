#include <doctest.h>

#include <vector>

#include "fastbcc/baselines.hpp"
#include "fastbcc/fast_bcc.hpp"
#include "fastbcc/memory.hpp"
#include "support.hpp"

using namespace fastbcc;

namespace {

Partition part(std::vector<std::vector<vertex_t>> p) {
  for (auto& b : p) std::sort(b.begin(), b.end());
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

TEST_CASE("hopcroft_tarjan examples") {
  const BccSets c5 = hopcroft_tarjan(fbtest::cycle(5));
  CHECK(canonical_partition(c5) == part({{0, 1, 2, 3, 4}}));
  CHECK(c5.articulation.empty());
  const BccSets ch = hopcroft_tarjan(gen_chain(4));
  CHECK(canonical_partition(ch) == part({{0, 1}, {1, 2}, {2, 3}}));
  CHECK(ch.articulation == std::vector<vertex_t>{1, 2});
  const BccSets fl = hopcroft_tarjan(fbtest::flower(3));
  CHECK(fl.num_blocks() == 4);
  CHECK(fl.articulation == std::vector<vertex_t>{0});
  CHECK(hopcroft_tarjan(Graph{}).num_blocks() == 0);
}

TEST_CASE("hopcroft_tarjan handles a long path without recursion") {
  const BccSets r = hopcroft_tarjan(gen_chain(1000000));
  CHECK(r.num_blocks() == 999999);
  CHECK(r.articulation.size() == 999998);
}

TEST_CASE("brute_force_bcc examples") {
  const BccSets tri = brute_force_bcc(fbtest::cycle(3));
  CHECK(canonical_partition(tri) == part({{0, 1, 2}}));
  CHECK(tri.articulation.empty());
  const BccSets bow = brute_force_bcc(fbtest::bowtie());
  CHECK(canonical_partition(bow) == part({{0, 1, 2}, {2, 3, 4}}));
  CHECK(bow.articulation == std::vector<vertex_t>{2});
  const BccSets k4 = brute_force_bcc(fbtest::complete(4));
  CHECK(canonical_partition(k4) == part({{0, 1, 2, 3}}));
  CHECK_THROWS_AS(brute_force_bcc(gen_chain(13)), Error);
}

TEST_CASE("hopcroft_tarjan agrees with brute force on small graphs") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const vertex_t n = 1 + static_cast<vertex_t>(s % kBruteForceMaxVertices);
    const double p = 0.1 + 0.8 * static_cast<double>((s * 7) % 30) / 30.0;
    const Graph g = gen_random(n, p, 50 + s);
    CAPTURE(s);
    const BccSets bf = brute_force_bcc(g), ht = hopcroft_tarjan(g);
    CHECK(first_difference(canonical_partition(bf), canonical_partition(ht)) == std::nullopt);
    CHECK(ht.articulation == bf.articulation);
    CHECK(ht.articulation == fbtest::removal_articulation(g));
  }
}

TEST_CASE("tarjan_vishkin block count matches fast_bcc") {
  for (const auto& [name, g] : fbtest::corpus()) {
    CAPTURE(name);
    CHECK(tarjan_vishkin(g).block_count == fast_bcc(g).labeling.bcc_count);
    CHECK(tarjan_vishkin(g).skeleton_vertices == g.num_edges() / 2);
  }
  const Graph c = gen_chain(1000);
  const auto r = tarjan_vishkin(c);
  CHECK(r.block_count == 999);
  CHECK(r.skeleton_vertices == 999);
  CHECK(r.skeleton_edges == 0);
  CHECK(tarjan_vishkin(fbtest::cycle(10)).block_count == 1);
}

TEST_CASE("tarjan_vishkin uses more memory than fast_bcc on dense-ish graphs") {
  const vertex_t n = 1u << 14;
  const Graph g = gen_random(n, 16.0 / n, 5);
  std::size_t fast_words = 0;
  {
    memory::PeakScope scope;
    (void)fast_bcc(g);
    fast_words = scope.peak_words();
  }
  const auto tv = tarjan_vishkin(g);
  CAPTURE(fast_words);
  CAPTURE(tv.memory_words);
  CHECK(tv.memory_words >= 2 * fast_words);
}
