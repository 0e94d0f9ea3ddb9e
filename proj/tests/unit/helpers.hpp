#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "sqm/complex.hpp"
#include "sqm/presentation.hpp"

namespace testing {

// Σ(2 - deg) and Σ(deg - 1) recounted from the walks, without edge_degrees().
inline std::pair<int, int> degree_sums(const sqm::SquareComplex& x) {
  std::map<int, int> deg;
  for (std::size_t e = 0; e < x.edges.size(); ++e) deg[static_cast<int>(e)] = 0;
  for (const auto& f : x.faces)
    for (const auto& s : f.walk) ++deg[s.edge];
  int boundary = 0, cancel = 0;
  for (const auto& [e, d] : deg) {
    boundary += 2 - d;
    cancel += d - 1;
  }
  return {boundary, cancel};
}

// A square cut along a bent diagonal: faces (b,c,m,f) and (c,g,f,m) share
// c-m and m-f.
struct Pair {
  int first, second;
};
inline Pair strong_pair(sqm::ComplexBuilder& b, int l1, int l2) {
  const int B = b.vertex(), C = b.vertex(), F = b.vertex(), G = b.vertex(), M = b.vertex();
  return {b.square(B, C, M, F, l1), b.square(C, G, F, M, l2)};
}

inline sqm::Word w(const char* text) { return sqm::parse_word(text); }

inline sqm::Relator rel(const char* text) {
  const sqm::Word x = sqm::parse_word(text);
  sqm::Relator r;
  std::copy(x.begin(), x.end(), r.letters.begin());
  return r;
}

}  // namespace testing
