#include "fastbcc/euler_tour.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "fastbcc/parallel.hpp"
#include "fastbcc/random.hpp"

namespace fastbcc {

namespace {

constexpr std::uint8_t kPlain = 0;
constexpr std::uint8_t kSample = 1;
constexpr std::uint8_t kHead = 2;

constexpr std::uint64_t kSampleStream = 0x6c69737472616e6b;  // "listrank"

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::invalid_structure, "list ranking: " + why);
}

}  // namespace

void rank_lists(std::span<const tour_t> next, std::span<const tour_t> heads, std::span<tour_t> rank,
                std::span<tour_t> owner) {
  const std::size_t len = next.size();
  if (rank.size() != len || owner.size() != len) throw Error(ErrorCode::invalid_argument, "list ranking: output size mismatch");
  if (len == 0) {
    if (!heads.empty()) malformed("head out of range");
    return;
  }

  aux_vector<std::uint8_t> mark(len, kPlain);
  std::atomic<bool> failed{false};
  const bool concurrent = num_workers() > 1;
  parallel_for(0, heads.size(), [&](std::size_t i) {
    const tour_t h = heads[i];
    if (h >= len || std::atomic_ref<std::uint8_t>(mark[h]).exchange(kHead) == kHead) failed = true;
  });
  if (failed) malformed("head out of range or repeated");

  // About sqrt(len) pseudo-random samples on top of the heads.
  const double rate = 1.0 / std::sqrt(static_cast<double>(len));
  parallel_for(0, len, [&](std::size_t i) {
    if (mark[i] == kPlain && rng::uniform(0, kSampleStream, i) < rate) mark[i] = kSample;
  });
  aux_vector<tour_t> samples;
  pack_indices(len, [&](std::size_t i) { return mark[i] != kPlain; }, samples);
  const std::size_t num_samples = samples.size();
  auto sample_index = [&](tour_t node) {
    return static_cast<std::size_t>(std::lower_bound(samples.begin(), samples.end(), node) - samples.begin());
  };

  // Walk from every sample to the next one.
  aux_vector<tour_t> run_length(num_samples), successor(num_samples);
  parallel_for_dynamic(0, num_samples, [&](std::size_t s) {
    tour_t cur = next[samples[s]];
    std::size_t steps = 1;
    while (cur != kNoVertex && cur < len && mark[cur] == kPlain) {
      if (++steps > len) {
        failed = true;
        break;
      }
      cur = next[cur];
    }
    if (cur != kNoVertex && cur >= len) failed = true;
    run_length[s] = static_cast<tour_t>(steps);
    successor[s] = cur;
  }, 16);
  if (failed) malformed("walk left the node range or exceeded the node count");

  // Chain the samples of every list and assign their offsets.
  aux_vector<tour_t> sample_offset(num_samples), sample_owner(num_samples, kNoVertex);
  parallel_for_dynamic(0, heads.size(), [&](std::size_t hi) {
    const tour_t head = heads[hi];
    std::size_t s = sample_index(head);
    tour_t offset = 0;
    while (true) {
      tour_t expected = kNoVertex;
      if (!compare_and_swap(sample_owner[s], expected, static_cast<tour_t>(hi), concurrent)) {
        failed = true;
        return;
      }
      sample_offset[s] = offset;
      offset += run_length[s];
      const tour_t nx = successor[s];
      if (nx == kNoVertex || nx == head) return;
      if (mark[nx] == kHead) {
        failed = true;
        return;
      }
      s = sample_index(nx);
    }
  }, 16);
  if (failed) malformed("two heads share a list, or a list revisits a node");

  std::fill(owner.begin(), owner.end(), kNoVertex);
  std::size_t written = 0;
  parallel_for_dynamic(0, num_samples, [&](std::size_t s) {
    const tour_t list = sample_owner[s];
    if (list == kNoVertex) return;
    tour_t cur = samples[s];
    tour_t r = sample_offset[s];
    do {
      rank[cur] = r++;
      owner[cur] = list;
      cur = next[cur];
    } while (cur != kNoVertex && mark[cur] == kPlain);
    fetch_add<std::size_t>(written, run_length[s], concurrent);
  }, 16);
  if (written != len || std::find(owner.begin(), owner.end(), kNoVertex) != owner.end())
    malformed("some nodes are not reachable from any head");
}

aux_vector<tour_t> list_ranking(std::span<const tour_t> next, tour_t head) {
  aux_vector<tour_t> rank(next.size()), owner(next.size());
  const tour_t heads[1] = {head};
  rank_lists(next, heads, rank, owner);
  return rank;
}

RootedForest build_euler_tour(vertex_t n, std::span<const Edge> tree_edges, std::span<const vertex_t> roots) {
  auto fail = [](const std::string& why) -> void { throw Error(ErrorCode::invalid_structure, "euler tour: " + why); };
  const std::size_t k = roots.size();
  if (k > n || tree_edges.size() != n - k) fail("tree edges do not form a forest with one tree per root (cycle or missing edge)");

  RootedForest rf;
  rf.roots.assign(roots.begin(), roots.end());
  std::sort(rf.roots.begin(), rf.roots.end());
  if (std::adjacent_find(rf.roots.begin(), rf.roots.end()) != rf.roots.end()) fail("repeated root");
  if (!rf.roots.empty() && rf.roots.back() >= n) fail("root out of range");

  // Semisort the 2(n-k) directed edges by source; each bucket is then sorted
  // by target so the layout is independent of scheduling.
  aux_vector<tour_t> start(static_cast<std::size_t>(n) + 1, 0);
  std::atomic<bool> failed{false};
  const bool concurrent = num_workers() > 1;
  parallel_for(0, tree_edges.size(), [&](std::size_t i) {
    const auto [a, b] = tree_edges[i];
    if (a >= n || b >= n || a == b) {
      failed = true;
      return;
    }
    fetch_add<tour_t>(start[a], 1, concurrent);
    fetch_add<tour_t>(start[b], 1, concurrent);
  });
  if (failed) fail("tree edge endpoint out of range or self loop");
  const std::size_t slots = exclusive_scan_inplace(std::span<tour_t>(start));
  aux_vector<vertex_t> target(slots);
  {
    aux_vector<tour_t> cursor(start.begin(), start.end() - 1);
    parallel_for(0, tree_edges.size(), [&](std::size_t i) {
      const auto [a, b] = tree_edges[i];
      target[fetch_add<tour_t>(cursor[a], 1, concurrent)] = b;
      target[fetch_add<tour_t>(cursor[b], 1, concurrent)] = a;
    });
  }
  parallel_for_dynamic(0, n, [&](std::size_t v) {
    std::sort(target.begin() + start[v], target.begin() + start[v + 1]);
  });
  auto slot_of = [&](vertex_t a, vertex_t b) -> tour_t {
    auto lo = target.begin() + start[a], hi = target.begin() + start[a + 1];
    auto it = std::lower_bound(lo, hi, b);
    if (it == hi || *it != b) return kNoVertex;
    return static_cast<tour_t>(it - target.begin());
  };

  // Euler circuit: the i-th edge entering v continues with v's (i+1)-th
  // outgoing edge; the last entering edge wraps to the first outgoing one.
  aux_vector<tour_t> next(slots);
  parallel_for_dynamic(0, n, [&](std::size_t ai) {
    const auto a = static_cast<vertex_t>(ai);
    for (tour_t s = start[a]; s < start[a + 1]; ++s) {
      const vertex_t b = target[s];
      const tour_t back = slot_of(b, a);
      if (back == kNoVertex) {
        failed = true;
        return;
      }
      const tour_t i = back - start[b];
      const tour_t deg = start[b + 1] - start[b];
      next[s] = start[b] + (i + 1) % deg;
    }
  });
  if (failed) fail("tree edge without its reverse slot");

  // Each root's tour starts at its first outgoing edge; the edge entering the
  // root last closes the circuit and becomes the tail.
  aux_vector<std::size_t> head_tree;
  pack_indices(k, [&](std::size_t t) { return start[rf.roots[t] + 1] != start[rf.roots[t]]; }, head_tree);
  aux_vector<tour_t> heads(head_tree.size());
  parallel_for(0, head_tree.size(), [&](std::size_t h) {
    const vertex_t r = rf.roots[head_tree[h]];
    heads[h] = start[r];
    const vertex_t last_child = target[start[r + 1] - 1];
    next[slot_of(last_child, r)] = kNoVertex;
  });

  aux_vector<tour_t> rank(slots), owner(slots);
  try {
    rank_lists(next, heads, rank, owner);
  } catch (const Error& e) {
    fail(std::string("tree edges are not a forest rooted at the given roots (") + e.what() + ")");
  }
  release(next);

  // Tree sizes, then per-tree position bases in increasing root order.
  aux_vector<tour_t> base(k + 1, 0);
  parallel_for(0, k, [&](std::size_t t) { base[t] = 2; });
  {
    aux_vector<tour_t> tour_len(heads.size(), 0);
    parallel_for(0, slots, [&](std::size_t s) { write_max(tour_len[owner[s]], rank[s] + 1, concurrent); });
    parallel_for(0, heads.size(), [&](std::size_t h) { base[head_tree[h]] = tour_len[h] + 2; });
  }
  exclusive_scan_inplace(std::span<tour_t>(base));

  rf.first.assign(n, kNoVertex);
  rf.last.assign(n, 0);
  aux_vector<vertex_t> tree_of(n, kNoVertex);
  parallel_for(0, k, [&](std::size_t t) { tree_of[rf.roots[t]] = static_cast<vertex_t>(t); });
  // Every vertex entered by a tour edge belongs to that tour's tree; a
  // disagreement means a second root inside a tree.
  parallel_for_dynamic(0, n, [&](std::size_t a) {
    for (tour_t s = start[a]; s < start[a + 1]; ++s) {
      const vertex_t b = target[s];
      const auto t = static_cast<vertex_t>(head_tree[owner[s]]);
      vertex_t expected = kNoVertex;
      if (!compare_and_swap(tree_of[b], expected, t, concurrent) && expected != t) failed = true;
      const tour_t pos = base[t] + rank[s] + 1;
      write_min(rf.first[b], pos, concurrent);
      write_max(rf.last[b], pos, concurrent);
    }
  }, 64);
  if (failed) fail("a tree contains more than one root");
  if (std::find(tree_of.begin(), tree_of.end(), kNoVertex) != tree_of.end()) fail("vertex not connected to any root");
  parallel_for(0, k, [&](std::size_t t) {
    const vertex_t r = rf.roots[t];
    rf.first[r] = base[t];
    rf.last[r] = base[t + 1] - 1;
  });

  rf.parent.resize(n);
  parallel_for(0, k, [&](std::size_t t) { rf.parent[rf.roots[t]] = rf.roots[t]; });
  parallel_for_dynamic(0, n, [&](std::size_t a) {
    for (tour_t s = start[a]; s < start[a + 1]; ++s) {
      const vertex_t b = target[s];
      if (rf.first[a] < rf.first[b]) rf.parent[b] = static_cast<vertex_t>(a);
    }
  }, 64);
  return rf;
}

}  // namespace fastbcc
