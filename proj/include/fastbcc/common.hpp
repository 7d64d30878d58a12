#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace fastbcc {

#ifdef FASTBCC_VERTEX64
using vertex_t = std::uint64_t;
#else
using vertex_t = std::uint32_t;
#endif

// Index into a graph's edge array (directed slots).
using edge_t = std::uint64_t;

// Position in a (globally offset) Euler tour. Tours use 2n positions in total.
using tour_t = vertex_t;

inline constexpr vertex_t kNoVertex = std::numeric_limits<vertex_t>::max();

enum class ErrorCode {
  io,
  format,
  invalid_argument,
  invalid_structure,
  too_large,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fastbcc
