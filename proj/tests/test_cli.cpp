#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "fastbcc/graph.hpp"

#ifndef FASTBCC_CLI_PATH
#error "FASTBCC_CLI_PATH must name the CLI binary"
#endif

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result cli(const std::string& args) {
  const std::string cmd = std::string(FASTBCC_CLI_PATH) + " " + args + " 2>&1";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t k = std::fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), k);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("fastbcc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          cell += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += c;
      }
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("gen writes the requested graphs") {
  TempDir tmp;
  auto r = cli("gen chain 1000 --out " + (tmp / "c.bin"));
  CHECK(r.code == 0);
  CHECK(r.out.find("m: 1998") != std::string::npos);
  const auto chain = fastbcc::load_graph(tmp / "c.bin");
  CHECK(chain.num_vertices() == 1000);
  CHECK(chain.num_edges() == 1998);

  r = cli("gen grid 6 7 --circular --out " + (tmp / "g.bin"));
  CHECK(r.code == 0);
  const auto grid = fastbcc::load_graph(tmp / "g.bin");
  bool four = true;
  for (fastbcc::vertex_t v = 0; v < grid.num_vertices(); ++v) four = four && grid.degree(v) == 4;
  CHECK(grid.num_vertices() == 42);
  CHECK(four);

  CHECK(cli("gen random 2000 0.003 --seed 9 --out " + (tmp / "r1.bin")).code == 0);
  CHECK(cli("gen random 2000 0.003 --seed 9 --out " + (tmp / "r2.bin")).code == 0);
  CHECK(read_file(tmp / "r1.bin") == read_file(tmp / "r2.bin"));
  CHECK(cli("gen random 2000 0.003 --seed 10 --out " + (tmp / "r3.bin")).code == 0);
  CHECK(read_file(tmp / "r1.bin") != read_file(tmp / "r3.bin"));
}

TEST_CASE("run reports the block count") {
  TempDir tmp;
  REQUIRE(cli("gen chain 100000 --out " + (tmp / "c.bin")).code == 0);
  for (const char* algo : {"fastbcc", "hopcroft-tarjan", "tarjan-vishkin"}) {
    const auto r = cli("run " + (tmp / "c.bin") + " --algo " + algo + " --rounds 1 --out " + (tmp / "runs.csv"));
    CHECK(r.code == 0);
    CHECK(r.out.find("bcc_count: 99999") != std::string::npos);
  }
  const auto rows = read_csv(tmp / "runs.csv");
  REQUIRE(rows.size() == 4);
  CHECK(rows[0][0] == "name");
}

TEST_CASE("verify exit codes") {
  TempDir tmp;
  REQUIRE(cli("gen random 500 0.01 --out " + (tmp / "r.bin")).code == 0);
  auto r = cli("verify " + (tmp / "r.bin"));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("OK", 0) == 0);
  r = cli("verify " + (tmp / "r.bin") + " --corrupt-for-testing");
  CHECK(r.code == 1);
  CHECK(r.out.find("MISMATCH") != std::string::npos);
  fastbcc::write_bin(fastbcc::Graph{}, tmp / "e.bin");
  CHECK(cli("verify " + (tmp / "e.bin")).code == 0);
}

TEST_CASE("bench writes one row per pair") {
  TempDir tmp;
  REQUIRE(cli("gen chain 500 --out " + (tmp / "a.bin")).code == 0);
  REQUIRE(cli("gen grid 10 10 --out " + (tmp / "b.bin")).code == 0);
  {
    std::ofstream m(tmp / "m.json");
    m << R"({"graphs": ["a.bin", {"name": "grid", "path": "b.bin"}], "algorithms": ["fastbcc", "hopcroft-tarjan"]})";
  }
  auto r = cli("bench " + (tmp / "m.json") + " --rounds 2 --out " + (tmp / "out.csv"));
  CHECK(r.code == 0);
  auto rows = read_csv(tmp / "out.csv");
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"name", "algo", "n", "m", "bcc_count", "total_seconds", "first_cc",
                                            "rooting", "tagging", "last_cc", "rounds", "threads", "peak_aux_words",
                                            "status"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 14);
    CHECK(rows[i][13] == "ok");
    CHECK(rows[i][10] == "2");
    CHECK(std::stod(rows[i][5]) >= 0.0);
  }
  CHECK(rows[1][0] == "a.bin");
  CHECK(rows[1][4] == "499");
  CHECK(rows[3][0] == "grid");
  CHECK(rows[3][4] == "1");

  {
    std::ofstream m(tmp / "bad.json");
    m << R"({"graphs": ["missing.bin"], "algorithms": ["fastbcc"]})";
  }
  r = cli("bench " + (tmp / "bad.json") + " --out " + (tmp / "bad.csv"));
  CHECK(r.code == 0);
  rows = read_csv(tmp / "bad.csv");
  REQUIRE(rows.size() == 2);
  REQUIRE(rows[1].size() == 14);
  CHECK(rows[1][13].rfind("error:", 0) == 0);
  CHECK(rows[1][4].empty());
}

TEST_CASE("usage errors exit with 2") {
  TempDir tmp;
  CHECK(cli("").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("gen chain --out " + (tmp / "x.bin")).code == 2);
  CHECK(cli("gen chain 10").code == 2);
  CHECK(cli("gen blob 10 --out " + (tmp / "x.bin")).code == 2);
  CHECK(cli("gen random 10 2.0 --out " + (tmp / "x.bin")).code == 2);
  CHECK(cli("run " + (tmp / "missing.bin")).code == 2);
  CHECK(cli("run " + (tmp / "missing.bin") + " --algo nope").code == 2);
  CHECK(cli("bench " + (tmp / "missing.json") + " --out " + (tmp / "o.csv")).code == 2);
}
