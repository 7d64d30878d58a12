#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "fastbcc/graph.hpp"

namespace fastbcc {

namespace {

static_assert(std::endian::native == std::endian::little, ".bin I/O assumes a little-endian host");

constexpr std::uint64_t kHeaderBytes = 3 * 8;
constexpr std::uint64_t kOffsetBytes = 8;
constexpr std::uint64_t kEdgeBytes = 4;

std::uint64_t legacy_bin_file_size(std::uint64_t n, std::uint64_t m) {
  return kHeaderBytes + (n > 0 ? n - 1 : 0) * kOffsetBytes + m * kEdgeBytes;
}

void check_offsets(const aux_vector<edge_t>& offsets, std::uint64_t m, const std::string& where) {
  if (offsets.front() != 0) throw Error(ErrorCode::format, where + ": offset[0] must be 0");
  for (std::size_t i = 1; i < offsets.size(); ++i) {
    if (offsets[i] < offsets[i - 1]) throw Error(ErrorCode::format, where + ": offsets decrease at index " + std::to_string(i));
  }
  if (offsets.back() != m) throw Error(ErrorCode::format, where + ": offset[n] != m");
}

void check_ids(const aux_vector<vertex_t>& edges, std::uint64_t n, const std::string& where) {
  auto bad = std::find_if(edges.begin(), edges.end(), [n](vertex_t v) { return v >= n; });
  if (bad != edges.end())
    throw Error(ErrorCode::format, where + ": neighbor id " + std::to_string(*bad) + " >= n");
}

void read_exact(std::ifstream& in, void* dst, std::uint64_t bytes, const std::string& path) {
  in.read(static_cast<char*>(dst), static_cast<std::streamsize>(bytes));
  if (static_cast<std::uint64_t>(in.gcount()) != bytes) throw Error(ErrorCode::format, path + ": truncated file");
}

}  // namespace

std::uint64_t bin_file_size(std::uint64_t n, std::uint64_t m) {
  return kHeaderBytes + (n + 1) * kOffsetBytes + m * kEdgeBytes;
}

Graph load_bin(const std::filesystem::path& path, LoadInfo* info) {
  const std::string where = path.string();
  std::error_code ec;
  const std::uint64_t actual = std::filesystem::file_size(path, ec);
  if (ec) throw Error(ErrorCode::io, where + ": " + ec.message());
  if (actual < kHeaderBytes) throw Error(ErrorCode::format, where + ": truncated file (shorter than the 24-byte header)");

  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, where + ": cannot open");
  std::uint64_t header[3];
  read_exact(in, header, sizeof(header), where);
  const std::uint64_t n = header[0], m = header[1], size_field = header[2];

  if (n >= actual / kOffsetBytes || m >= actual / kEdgeBytes + 1)
    throw Error(ErrorCode::format, where + ": truncated file (header counts exceed file length)");
  const std::uint64_t expected = bin_file_size(n, m);
  bool legacy = false;
  if (size_field != expected) {
    if (size_field == legacy_bin_file_size(n, m)) {
      legacy = true;
    } else {
      throw Error(ErrorCode::format, where + ": size mismatch (header says " + std::to_string(size_field) +
                                         " bytes, layout needs " + std::to_string(expected) + ")");
    }
  }
  if (actual < expected) throw Error(ErrorCode::format, where + ": truncated file");
  if (actual > expected)
    throw Error(ErrorCode::format, where + ": size mismatch (" + std::to_string(actual - expected) + " trailing bytes)");
  if (n > static_cast<std::uint64_t>(kNoVertex) - 1) throw Error(ErrorCode::too_large, where + ": vertex count exceeds id width");

  aux_vector<edge_t> offsets(n + 1);
  read_exact(in, offsets.data(), (n + 1) * kOffsetBytes, where);
  check_offsets(offsets, m, where);

  aux_vector<vertex_t> edges(m);
  if constexpr (sizeof(vertex_t) == kEdgeBytes) {
    read_exact(in, edges.data(), m * kEdgeBytes, where);
  } else {
    std::vector<std::uint32_t> raw(m);
    read_exact(in, raw.data(), m * kEdgeBytes, where);
    std::copy(raw.begin(), raw.end(), edges.begin());
  }
  check_ids(edges, n, where);
  if (info) info->legacy_size_field = legacy;
  return Graph(std::move(offsets), std::move(edges));
}

void write_bin(const Graph& g, const std::filesystem::path& path) {
  const std::string where = path.string();
  const std::uint64_t n = g.num_vertices(), m = g.num_edges();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, where + ": cannot open for writing");
  const std::uint64_t header[3] = {n, m, bin_file_size(n, m)};
  out.write(reinterpret_cast<const char*>(header), sizeof(header));
  auto offsets = g.offsets();
  out.write(reinterpret_cast<const char*>(offsets.data()), static_cast<std::streamsize>(offsets.size_bytes()));
  auto edges = g.edges();
  if constexpr (sizeof(vertex_t) == kEdgeBytes) {
    out.write(reinterpret_cast<const char*>(edges.data()), static_cast<std::streamsize>(edges.size_bytes()));
  } else {
    std::vector<std::uint32_t> raw(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] > UINT32_MAX) throw Error(ErrorCode::too_large, where + ": vertex id does not fit the 32-bit edge field");
      raw[i] = static_cast<std::uint32_t>(edges[i]);
    }
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size() * kEdgeBytes));
  }
  out.flush();
  if (!out) throw Error(ErrorCode::io, where + ": write failed");
}

Graph load_adj(const std::filesystem::path& path) {
  const std::string where = path.string();
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, where + ": cannot open");
  std::string header;
  if (!(in >> header) || header != "AdjacencyGraph")
    throw Error(ErrorCode::format, where + ": missing AdjacencyGraph header");
  std::uint64_t n = 0, m = 0;
  if (!(in >> n >> m)) throw Error(ErrorCode::format, where + ": missing vertex/edge counts");
  if (n > static_cast<std::uint64_t>(kNoVertex) - 1) throw Error(ErrorCode::too_large, where + ": vertex count exceeds id width");

  aux_vector<edge_t> offsets(n + 1);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!(in >> offsets[i])) throw Error(ErrorCode::format, where + ": count mismatch (expected " + std::to_string(n) + " offsets)");
  }
  offsets[n] = m;
  aux_vector<vertex_t> edges(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t v;
    if (!(in >> v)) throw Error(ErrorCode::format, where + ": count mismatch (expected " + std::to_string(m) + " edges)");
    if (v >= n) throw Error(ErrorCode::format, where + ": neighbor id " + std::to_string(v) + " >= n");
    edges[i] = static_cast<vertex_t>(v);
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::format, where + ": count mismatch (trailing values)");
  check_offsets(offsets, m, where);
  return Graph(std::move(offsets), std::move(edges));
}

void write_adj(const Graph& g, const std::filesystem::path& path) {
  const std::string where = path.string();
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, where + ": cannot open for writing");
  out << "AdjacencyGraph\n" << g.num_vertices() << '\n' << g.num_edges() << '\n';
  auto offsets = g.offsets();
  for (vertex_t v = 0; v < g.num_vertices(); ++v) out << offsets[v] << '\n';
  for (vertex_t v : g.edges()) out << v << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::io, where + ": write failed");
}

Graph load_graph(const std::filesystem::path& path, LoadInfo* info) {
  const auto ext = path.extension().string();
  if (ext == ".bin") return load_bin(path, info);
  if (ext == ".adj") return load_adj(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, path.string() + ": cannot open");
  char magic[14] = {};
  in.read(magic, sizeof(magic));
  if (in.gcount() == sizeof(magic) && std::memcmp(magic, "AdjacencyGraph", sizeof(magic)) == 0) return load_adj(path);
  return load_bin(path, info);
}

}  // namespace fastbcc
