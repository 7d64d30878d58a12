#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fastbcc/fastbcc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

constexpr const char* kCsvHeader =
    "name,algo,n,m,bcc_count,total_seconds,first_cc,rooting,tagging,last_cc,rounds,threads,peak_aux_words,status";

struct Failure {
  std::string message;
};

void check(fbcc_status s, const std::string& context) {
  if (s != FBCC_OK) throw Failure{context + ": " + fbcc_status_string(s) + ": " + fbcc_last_error()};
}

struct GraphHandle {
  fbcc_graph* g = nullptr;
  GraphHandle() = default;
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  ~GraphHandle() { fbcc_graph_free(g); }
};

void load(const std::string& path, GraphHandle& out) {
  int normalized = 0, legacy = 0;
  check(fbcc_graph_load(path.c_str(), &out.g, &normalized, &legacy), "loading " + path);
  if (legacy) std::cerr << "warning: " << path << ": header uses the legacy (n-1) size formula\n";
  if (normalized) std::cerr << "warning: " << path << ": input was not a simple symmetric graph; normalized\n";
}

std::optional<fbcc_algo> parse_algo(const std::string& name) {
  if (name == "fastbcc") return FBCC_ALGO_FASTBCC;
  if (name == "hopcroft-tarjan") return FBCC_ALGO_HOPCROFT_TARJAN;
  if (name == "tarjan-vishkin") return FBCC_ALGO_TARJAN_VISHKIN;
  return std::nullopt;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : (v[k - 1] + v[k]) / 2;
}

struct Report {
  std::string name;
  std::string algo;
  std::uint64_t n = 0, m = 0;
  fbcc_run_stats median_stats{};
  int rounds = 0;
  int threads = 0;
};

Report measure(const fbcc_graph* g, const std::string& name, const std::string& algo_name, int rounds) {
  const auto algo = parse_algo(algo_name);
  if (!algo) throw Failure{"unknown algorithm '" + algo_name + "'"};
  Report r{name, algo_name, fbcc_graph_num_vertices(g), fbcc_graph_num_edges(g), {}, rounds, fbcc_get_threads()};
  std::vector<double> total, first_cc, rooting, tagging, last_cc;
  for (int i = 0; i < rounds; ++i) {
    fbcc_run_stats s{};
    check(fbcc_run(g, *algo, &s), algo_name + " on " + name);
    total.push_back(s.total_seconds);
    first_cc.push_back(s.first_cc_seconds);
    rooting.push_back(s.rooting_seconds);
    tagging.push_back(s.tagging_seconds);
    last_cc.push_back(s.last_cc_seconds);
    r.median_stats.bcc_count = s.bcc_count;
    r.median_stats.peak_aux_words = std::max(r.median_stats.peak_aux_words, s.peak_aux_words);
  }
  r.median_stats.total_seconds = median(total);
  r.median_stats.first_cc_seconds = median(first_cc);
  r.median_stats.rooting_seconds = median(rooting);
  r.median_stats.tagging_seconds = median(tagging);
  r.median_stats.last_cc_seconds = median(last_cc);
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string csv_row(const Report& r) {
  const auto& s = r.median_stats;
  char buf[512];
  std::snprintf(buf, sizeof buf, "%llu,%llu,%llu,%.6f,%.6f,%.6f,%.6f,%.6f,%d,%d,%llu,ok",
                static_cast<unsigned long long>(r.n), static_cast<unsigned long long>(r.m),
                static_cast<unsigned long long>(s.bcc_count), s.total_seconds, s.first_cc_seconds,
                s.rooting_seconds, s.tagging_seconds, s.last_cc_seconds, r.rounds, r.threads,
                static_cast<unsigned long long>(s.peak_aux_words));
  return csv_field(r.name) + "," + csv_field(r.algo) + "," + buf;
}

std::string csv_error_row(const std::string& name, const std::string& algo, int rounds, int threads,
                          const std::string& message) {
  return csv_field(name) + "," + csv_field(algo) + ",,,,,,,,," + std::to_string(rounds) + "," +
         std::to_string(threads) + ",," + csv_field("error: " + message);
}

void print_report(const Report& r) {
  const auto& s = r.median_stats;
  std::printf("graph: %s\nalgo: %s\nn: %llu\nm: %llu\nbcc_count: %llu\nrounds: %d\nthreads: %d\n", r.name.c_str(),
              r.algo.c_str(), static_cast<unsigned long long>(r.n), static_cast<unsigned long long>(r.m),
              static_cast<unsigned long long>(s.bcc_count), r.rounds, r.threads);
  std::printf("total_seconds: %.6f\n", s.total_seconds);
  if (r.algo == "fastbcc") {
    std::printf("first_cc: %.6f\nrooting: %.6f\ntagging: %.6f\nlast_cc: %.6f\n", s.first_cc_seconds,
                s.rooting_seconds, s.tagging_seconds, s.last_cc_seconds);
  }
  std::printf("peak_aux_words: %llu\n", static_cast<unsigned long long>(s.peak_aux_words));
}

void set_threads(int threads) {
  if (threads < 0) throw Failure{"--threads must be >= 0"};
  check(fbcc_set_threads(threads), "setting threads");
}

void append_csv(const std::string& path, const std::vector<std::string>& rows, bool truncate) {
  const bool fresh = truncate || !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, truncate ? std::ios::trunc : std::ios::app);
  if (!out) throw Failure{"cannot open " + path + " for writing"};
  if (fresh) out << kCsvHeader << '\n';
  for (const auto& row : rows) out << row << '\n';
  if (!out) throw Failure{"write to " + path + " failed"};
}

int cmd_run(const std::string& path, const std::string& algo, int rounds, int threads, const std::string& out) {
  set_threads(threads);
  GraphHandle g;
  load(path, g);
  const Report r = measure(g.g, std::filesystem::path(path).filename().string(), algo, rounds);
  print_report(r);
  if (!out.empty()) append_csv(out, {csv_row(r)}, false);
  return kExitOk;
}

std::uint64_t to_count(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    if (!s.empty() && s[0] == '-') throw std::invalid_argument(s);
    const auto v = std::stoull(s, &pos, 0);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Failure{std::string("invalid ") + what + " '" + s + "'"};
  }
}

double to_probability(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size() || !(v >= 0.0 && v <= 1.0)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Failure{std::string("invalid ") + what + " '" + s + "' (expected a number in [0, 1])"};
  }
}

int cmd_gen(const std::string& kind, const std::vector<std::string>& params, bool circular, double keep,
            std::uint64_t seed, const std::string& out) {
  if (out.empty()) throw Failure{"gen requires --out"};
  GraphHandle g;
  if (kind == "chain") {
    if (params.size() != 1) throw Failure{"usage: gen chain <n> --out FILE"};
    check(fbcc_gen_chain(to_count(params[0], "n"), &g.g), "gen chain");
  } else if (kind == "grid") {
    if (params.size() != 2) throw Failure{"usage: gen grid <rows> <cols> [--circular] [--keep P] [--seed S] --out FILE"};
    check(fbcc_gen_grid(to_count(params[0], "rows"), to_count(params[1], "cols"), circular ? 1 : 0, keep, seed, &g.g),
          "gen grid");
  } else if (kind == "random") {
    if (params.size() != 2) throw Failure{"usage: gen random <n> <p> [--seed S] --out FILE"};
    check(fbcc_gen_random(to_count(params[0], "n"), to_probability(params[1], "p"), seed, &g.g), "gen random");
  } else {
    throw Failure{"unknown graph kind '" + kind + "' (expected grid, chain or random)"};
  }
  check(fbcc_graph_write_bin(g.g, out.c_str()), "writing " + out);
  std::printf("n: %llu\nm: %llu\n", static_cast<unsigned long long>(fbcc_graph_num_vertices(g.g)),
              static_cast<unsigned long long>(fbcc_graph_num_edges(g.g)));
  return kExitOk;
}

int cmd_verify(const std::string& path, int threads, bool corrupt) {
  set_threads(threads);
  GraphHandle g;
  load(path, g);
  int match = 0;
  char message[1024];
  check(fbcc_verify(g.g, corrupt ? 1 : 0, &match, message, sizeof message), "verify");
  if (!match) {
    std::printf("MISMATCH: %s\n", message);
    return kExitMismatch;
  }
  fbcc_blocks* blocks = nullptr;
  check(fbcc_blocks_compute(g.g, FBCC_ALGO_HOPCROFT_TARJAN, &blocks), "verify");
  const auto count = fbcc_blocks_count(blocks);
  fbcc_blocks_free(blocks);
  std::printf("OK: %llu blocks match\n", static_cast<unsigned long long>(count));
  return kExitOk;
}

struct ManifestEntry {
  std::string name;
  std::string path;
};

int cmd_bench(const std::string& manifest_path, const std::string& out, int rounds_flag, int threads) {
  if (out.empty()) throw Failure{"bench requires --out"};
  set_threads(threads);
  std::ifstream in(manifest_path);
  if (!in) throw Failure{"cannot open manifest " + manifest_path};
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Failure{"manifest " + manifest_path + ": " + e.what()};
  }
  std::vector<ManifestEntry> graphs;
  std::vector<std::string> algos;
  int rounds = rounds_flag;
  const auto base = std::filesystem::path(manifest_path).parent_path();
  try {
    for (const auto& item : doc.at("graphs")) {
      ManifestEntry e;
      if (item.is_string()) {
        e.path = item.get<std::string>();
      } else {
        e.path = item.at("path").get<std::string>();
        e.name = item.value("name", "");
      }
      if (std::filesystem::path(e.path).is_relative()) e.path = (base / e.path).string();
      if (e.name.empty()) e.name = std::filesystem::path(e.path).filename().string();
      graphs.push_back(std::move(e));
    }
    algos = doc.at("algorithms").get<std::vector<std::string>>();
    if (doc.contains("rounds") && rounds_flag <= 0) rounds = doc.at("rounds").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw Failure{"manifest " + manifest_path + ": " + e.what()};
  }
  if (rounds <= 0) rounds = 10;
  for (const auto& a : algos) {
    if (!parse_algo(a)) throw Failure{"manifest " + manifest_path + ": unknown algorithm '" + a + "'"};
  }

  std::vector<std::string> rows;
  for (const auto& entry : graphs) {
    GraphHandle g;
    std::string load_error;
    try {
      load(entry.path, g);
    } catch (const Failure& f) {
      load_error = f.message;
      std::cerr << "error: " << f.message << '\n';
    }
    for (const auto& algo : algos) {
      if (!load_error.empty()) {
        rows.push_back(csv_error_row(entry.name, algo, rounds, fbcc_get_threads(), load_error));
        continue;
      }
      try {
        rows.push_back(csv_row(measure(g.g, entry.name, algo, rounds)));
      } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        rows.push_back(csv_error_row(entry.name, algo, rounds, fbcc_get_threads(), f.message));
      }
    }
  }
  append_csv(out, rows, true);
  std::printf("wrote %zu rows to %s\n", rows.size(), out.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fastbcc: parallel biconnected components with baselines and benchmarks"};
  app.require_subcommand(1);

  int threads = 0;
  int rounds = 10;
  std::string algo = "fastbcc";
  std::string out;
  std::string path;

  auto* run = app.add_subcommand("run", "Run one algorithm on a graph file and report median timings");
  run->add_option("graph", path, "Graph file (.bin or .adj)")->required();
  run->add_option("--algo", algo, "fastbcc | hopcroft-tarjan | tarjan-vishkin")
      ->check(CLI::IsMember({"fastbcc", "hopcroft-tarjan", "tarjan-vishkin"}));
  run->add_option("--rounds", rounds, "Repetitions; the median is reported")->check(CLI::PositiveNumber);
  run->add_option("--threads", threads, "Worker threads (0 = auto)");
  run->add_option("--out", out, "Append a CSV row to this file");

  std::string kind;
  std::vector<std::string> params;
  bool circular = false;
  double keep = 1.0;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic graph as .bin");
  gen->add_option("kind", kind, "grid | chain | random")->required();
  gen->add_option("params", params, "grid: ROWS COLS; chain: N; random: N P");
  gen->add_flag("--circular", circular, "grid: wrap rows and columns");
  gen->add_option("--keep", keep, "grid: probability of keeping each edge")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out, "Output .bin path")->required();

  bool corrupt = false;
  auto* verify = app.add_subcommand("verify", "Compare fastbcc against Hopcroft-Tarjan block by block");
  verify->add_option("graph", path, "Graph file (.bin or .adj)")->required();
  verify->add_option("--threads", threads, "Worker threads (0 = auto)");
  verify->add_flag("--corrupt-for-testing", corrupt)->group("");

  std::string manifest;
  int bench_rounds = 0;
  auto* bench = app.add_subcommand("bench", "Run every (graph, algorithm) pair of a JSON manifest into a CSV");
  bench->add_option("manifest", manifest, "Manifest file")->required();
  bench->add_option("--out", out, "CSV output path")->required();
  bench->add_option("--rounds", bench_rounds, "Repetitions (overrides the manifest; default 10)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--threads", threads, "Worker threads (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) return cmd_run(path, algo, rounds, threads, out);
    if (*gen) return cmd_gen(kind, params, circular, keep, seed, out);
    if (*verify) return cmd_verify(path, threads, corrupt);
    if (*bench) return cmd_bench(manifest, out, bench_rounds, threads);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
