#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degencount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Vertex subsets of pattern-sized graphs.
using VertexMask = std::uint64_t;
inline constexpr int kMaskBits = 64;

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }
inline int popcount(VertexMask m) { return __builtin_popcountll(m); }
inline int lowest(VertexMask m) { return __builtin_ctzll(m); }

std::vector<Vertex> mask_to_vector(VertexMask m);
VertexMask vector_to_mask(const std::vector<Vertex>& vs);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for malformed graphs, out-of-range vertices and similar input faults.
class GraphError : public Error {
 public:
  using Error::Error;
};

class SelfLoopError : public GraphError {
 public:
  using GraphError::GraphError;
};

class SizeBoundError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class SingularSystemError : public Error {
 public:
  using Error::Error;
};

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

}  // namespace degencount
