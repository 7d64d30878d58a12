#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "fastbcc/parallel.hpp"
#include "fastbcc/random.hpp"

using namespace fastbcc;

TEST_CASE("exclusive scan matches a sequential prefix sum for several worker counts") {
  for (int workers : {1, 2, 4}) {
    ScopedWorkers scope(workers);
    for (std::size_t n : {0u, 1u, 7u, 10000u, 100003u}) {
      std::vector<std::uint64_t> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = rng::hash(3, 0, i) % 100;
      std::vector<std::uint64_t> expected(n);
      std::exclusive_scan(v.begin(), v.end(), expected.begin(), std::uint64_t{0});
      const std::uint64_t total = std::accumulate(v.begin(), v.end(), std::uint64_t{0});
      CHECK(exclusive_scan_inplace(std::span<std::uint64_t>(v)) == total);
      CHECK(v == expected);
    }
  }
}

TEST_CASE("counting sort is stable and bucketed") {
  for (int workers : {1, 3}) {
    ScopedWorkers scope(workers);
    const std::size_t n = 50000, keys = 37;
    auto key = [](std::size_t i) { return static_cast<std::size_t>(rng::hash(9, 1, i) % 37); };
    std::vector<std::uint32_t> order;
    std::vector<std::size_t> start;
    counting_sort_indices(n, keys, key, order, start);
    std::vector<std::uint32_t> expected(n);
    std::iota(expected.begin(), expected.end(), 0u);
    std::stable_sort(expected.begin(), expected.end(), [&](auto a, auto b) { return key(a) < key(b); });
    CHECK(order == expected);
    REQUIRE(start.size() == keys + 1);
    for (std::size_t k = 0; k < keys; ++k) {
      for (std::size_t i = start[k]; i < start[k + 1]; ++i) CHECK(key(order[i]) == k);
    }
  }
}

TEST_CASE("pack_indices keeps matching indices in order") {
  for (int workers : {1, 4}) {
    ScopedWorkers scope(workers);
    std::vector<std::uint32_t> out;
    pack_indices(100000, [](std::size_t i) { return i % 7 == 3; }, out);
    std::vector<std::uint32_t> expected;
    for (std::uint32_t i = 3; i < 100000; i += 7) expected.push_back(i);
    CHECK(out == expected);
  }
}

TEST_CASE("atomic min/max helpers under contention") {
  ScopedWorkers scope(4);
  std::uint32_t lo = ~0u, hi = 0;
  parallel_for(0, 200000, [&](std::size_t i) {
    const auto x = static_cast<std::uint32_t>(rng::hash(5, 2, i) % 1000000 + 7);
    write_min(lo, x);
    write_max(hi, x);
  });
  std::uint32_t elo = ~0u, ehi = 0;
  for (std::size_t i = 0; i < 200000; ++i) {
    const auto x = static_cast<std::uint32_t>(rng::hash(5, 2, i) % 1000000 + 7);
    elo = std::min(elo, x);
    ehi = std::max(ehi, x);
  }
  CHECK(lo == elo);
  CHECK(hi == ehi);
  std::size_t count = 0;
  parallel_for(0, 100000, [&](std::size_t) { fetch_add<std::size_t>(count, 1); });
  CHECK(count == 100000);
}

TEST_CASE("worker count control") {
  const int before = num_workers();
  {
    ScopedWorkers scope(3);
    CHECK(num_workers() == 3);
  }
  CHECK(num_workers() == before);
  CHECK(default_num_workers() >= 1);
}

TEST_CASE("rng is counter based and uniform in [0, 1)") {
  CHECK(rng::hash(1, 2, 3) == rng::hash(1, 2, 3));
  CHECK(rng::hash(1, 2, 3) != rng::hash(1, 2, 4));
  double sum = 0;
  for (std::size_t i = 0; i < 100000; ++i) {
    const double u = rng::uniform(42, 7, i);
    CHECK_UNARY(u >= 0.0);
    CHECK_UNARY(u < 1.0);
    sum += u;
  }
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
}
