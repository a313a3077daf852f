#include "degencount/types.hpp"

namespace degencount {

std::vector<Vertex> mask_to_vector(VertexMask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(lowest(m));
    m &= m - 1;
  }
  return out;
}

VertexMask vector_to_mask(const std::vector<Vertex>& vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
  auto num = boost::multiprecision::numerator(x);
  auto den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace degencount
