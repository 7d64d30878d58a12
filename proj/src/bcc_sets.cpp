#include "fastbcc/bcc_sets.hpp"

#include <algorithm>
#include <sstream>

namespace fastbcc {

Partition canonical_partition(const BccSets& sets) {
  Partition out(sets.num_blocks());
  for (std::size_t i = 0; i < sets.num_blocks(); ++i) {
    auto b = sets.block(i);
    out[i].assign(b.begin(), b.end());
    std::sort(out[i].begin(), out[i].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string describe(const std::vector<vertex_t>& block) {
  std::ostringstream s;
  s << '{';
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i == 8 && block.size() > 10) {
      s << ", ... (" << block.size() << " vertices)";
      break;
    }
    s << (i ? ", " : "") << block[i];
  }
  s << '}';
  return s.str();
}

}  // namespace

std::optional<std::string> first_difference(const Partition& expected, const Partition& actual) {
  std::size_t i = 0, j = 0;
  while (i < expected.size() && j < actual.size()) {
    if (expected[i] == actual[j]) {
      ++i;
      ++j;
    } else if (expected[i] < actual[j]) {
      return "block " + describe(expected[i]) + " is missing";
    } else {
      return "unexpected block " + describe(actual[j]);
    }
  }
  if (i < expected.size()) return "block " + describe(expected[i]) + " is missing";
  if (j < actual.size()) return "unexpected block " + describe(actual[j]);
  return std::nullopt;
}

}  // namespace fastbcc
