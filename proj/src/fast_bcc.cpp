#include "fastbcc/fast_bcc.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>

#include "fastbcc/parallel.hpp"

namespace fastbcc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_labeling(const Graph& g, const BccLabeling& lab) {
  const vertex_t n = g.num_vertices();
  if (lab.label.size() != n || lab.head.size() != n || lab.is_tree_root.size() != n)
    throw Error(ErrorCode::invalid_argument, "labeling does not match the graph size");
  for (vertex_t v = 0; v < n; ++v) {
    const vertex_t l = lab.label[v];
    if (l >= n || lab.label[l] != l) throw Error(ErrorCode::invalid_argument, "inconsistent labeling: bad label at vertex " + std::to_string(v));
    const vertex_t h = lab.head[v];
    if (h != kNoVertex && (h >= n || lab.label[h] == v))
      throw Error(ErrorCode::invalid_argument, "inconsistent labeling: bad head for label " + std::to_string(v));
  }
}

}  // namespace

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::plain_tree: return "plain-tree";
    case EdgeClass::fence_tree: return "fence-tree";
    case EdgeClass::back: return "back";
    case EdgeClass::cross: return "cross";
  }
  return "?";
}

EdgeClass classify_edge(const RootedForest& rf, const VertexTags& tags, vertex_t u, vertex_t v, bool is_tree) {
  if (is_tree) {
    if (rf.parent[u] == v && u != v) std::swap(u, v);
    if (rf.parent[v] != u || u == v)
      throw Error(ErrorCode::invalid_argument,
                  "classify_edge: " + std::to_string(u) + "-" + std::to_string(v) + " is not a tree edge");
    return is_fence(rf, tags, u, v) ? EdgeClass::fence_tree : EdgeClass::plain_tree;
  }
  return rf.is_ancestor(u, v) || rf.is_ancestor(v, u) ? EdgeClass::back : EdgeClass::cross;
}

FastBccResult fast_bcc(const Graph& g, const FastBccOptions& options, FastBccArtifacts* artifacts) {
  const vertex_t n = g.num_vertices();
  FastBccResult result;
  BccLabeling& lab = result.labeling;
  StepTimings& times = result.timings;

  auto t = Clock::now();
  aux_vector<vertex_t> roots;
  RootedForest rf;
  {
    CCResult cc = connected_components(g, KeepAllEdges{}, options.connectivity);
    pack_indices(n, [&](std::size_t v) { return cc.labels[v] == v; }, roots);
    times.first_cc = seconds_since(t);

    t = Clock::now();
    rf = build_euler_tour(n, cc.forest_edges, roots);
    if (artifacts) artifacts->spanning_forest = std::move(cc.forest_edges);
  }
  release(roots);
  times.rooting = seconds_since(t);

  t = Clock::now();
  VertexTags tags;
  compute_w(g, rf, tags.w1, tags.w2, options.w_update);
  compute_low_high(rf, tags);
  if (!artifacts) {
    release(tags.w1);
    release(tags.w2);
  }
  times.tagging = seconds_since(t);

  t = Clock::now();
  CcOptions skeleton_options = options.connectivity;
  skeleton_options.record_forest = false;
  {
    CCResult skeleton = connected_components(g, SkeletonFilter(rf, tags), skeleton_options);
    lab.label = std::move(skeleton.labels);
  }

  // Every fence edge whose endpoints got different labels names the parent
  // as head of the child's label.
  lab.head.assign(n, kNoVertex);
  std::atomic<bool> conflict{false};
  const bool concurrent = num_workers() > 1;
  parallel_for(0, n, [&](std::size_t vi) {
    const auto v = static_cast<vertex_t>(vi);
    const vertex_t u = rf.parent[v];
    if (u == v || lab.label[u] == lab.label[v] || !is_fence(rf, tags, u, v)) return;
    vertex_t expected = kNoVertex;
    if (!compare_and_swap(lab.head[lab.label[v]], expected, u, concurrent) && expected != u) conflict = true;
  });
  if (conflict) throw Error(ErrorCode::internal, "fast_bcc: two different heads for one label");

  lab.is_tree_root.resize(n);
  parallel_for(0, n, [&](std::size_t v) { lab.is_tree_root[v] = rf.parent[v] == v ? 1 : 0; });

  // A label is a block if it has a head or at least two members.
  aux_vector<std::uint8_t> shared(n, 0);
  parallel_for(0, n, [&](std::size_t v) {
    if (lab.label[v] != v) std::atomic_ref<std::uint8_t>(shared[lab.label[v]]).store(1, std::memory_order_relaxed);
  });
  lab.bcc_count = static_cast<vertex_t>(parallel_count(0, n, [&](std::size_t l) {
    return lab.label[l] == l && (lab.head[l] != kNoVertex || shared[l] != 0);
  }));
  times.last_cc = seconds_since(t);

  if (artifacts) {
    artifacts->forest = std::move(rf);
    artifacts->tags = std::move(tags);
  }
  return result;
}

BccSets extract_bccs(const Graph& g, const BccLabeling& lab) {
  check_labeling(g, lab);
  const vertex_t n = g.num_vertices();
  // Bucket vertices by label, heads first.
  std::vector<edge_t> start(static_cast<std::size_t>(n) + 1, 0);
  for (vertex_t v = 0; v < n; ++v) {
    ++start[lab.label[v]];
    if (lab.head[v] != kNoVertex) ++start[v];
  }
  BccSets out;
  std::vector<vertex_t> members;
  std::vector<edge_t> cursor(n + 1, 0);
  edge_t sum = 0;
  for (vertex_t l = 0; l <= n; ++l) {
    const edge_t c = l < n ? start[l] : 0;
    cursor[l] = sum;
    start[l] = sum;
    sum += c;
  }
  members.resize(sum);
  for (vertex_t l = 0; l < n; ++l) {
    if (lab.head[l] != kNoVertex) members[cursor[l]++] = lab.head[l];
  }
  for (vertex_t v = 0; v < n; ++v) members[cursor[lab.label[v]]++] = v;
  for (vertex_t l = 0; l < n; ++l) {
    const edge_t size = start[l + 1] - start[l];
    if (size >= 2) out.add_block(members.begin() + static_cast<std::ptrdiff_t>(start[l]),
                                 members.begin() + static_cast<std::ptrdiff_t>(start[l + 1]));
  }
  return out;
}

std::vector<vertex_t> articulation_points(const Graph& g, const BccLabeling& lab) {
  check_labeling(g, lab);
  const vertex_t n = g.num_vertices();
  std::vector<vertex_t> headed(n, 0);
  for (vertex_t l = 0; l < n; ++l) {
    if (lab.head[l] != kNoVertex) ++headed[lab.head[l]];
  }
  std::vector<vertex_t> out;
  for (vertex_t v = 0; v < n; ++v) {
    if (headed[v] == 0) continue;
    if (!lab.is_tree_root[v] || headed[v] >= 2) out.push_back(v);
  }
  return out;
}

BccSets to_bcc_sets(const Graph& g, const BccLabeling& lab) {
  BccSets sets = extract_bccs(g, lab);
  sets.articulation = articulation_points(g, lab);
  return sets;
}

}  // namespace fastbcc
