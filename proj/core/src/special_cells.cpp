#include <algorithm>

#include "sqm/enumeration.hpp"

namespace sqm {

namespace {

Letter at(const Relator& r, int i) { return r.letters[((i % 4) + 4) % 4]; }

bool matches(const Relator& a, int ia, const Relator& b, int ib, int length) {
  for (int t = 0; t < length; ++t)
    if (!(at(a, ia + t) == at(b, ib + t))) return false;
  return true;
}

Word slice(const Relator& r, int from, int length) {
  Word w;
  for (int t = 0; t < length; ++t) w.push_back(at(r, from + t));
  return w;
}

}  // namespace

std::size_t SpecialCellsReport::cross_relator_witnesses() const { return three_shared_cross.size(); }

SpecialCellsReport check_special_cells(const std::vector<Relator>& r) {
  SpecialCellsReport rep;
  const int n = static_cast<int>(r.size());
  std::vector<Relator> inv(r.size());
  for (int i = 0; i < n; ++i) inv[i] = r[i].inverse();

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int flip = 0; flip < 2; ++flip) {
        const Relator& second = flip ? inv[j] : r[j];
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) {
            if (i == j && !flip && a == b) continue;  // the cell itself
            if (matches(r[i], a, second, b, 3)) {
              PathMatch m{i, j, a, b, flip == 1, 3, slice(r[i], a, 3)};
              if (i != j) {
                rep.three_shared_cross.push_back(m);
              } else if (flip || a < b) {
                rep.three_shared_same.push_back(m);
              }
            }
            // Strong adjacency: a maximal 2-letter match.
            if (i == j && !flip && a >= b) continue;
            if (matches(r[i], a, second, b, 2) && !(at(r[i], a + 2) == at(second, b + 2)) &&
                !(at(r[i], a - 1) == at(second, b - 1)))
              rep.strongly_adjacent.push_back({i, j, a, b, flip == 1, 2, slice(r[i], a, 2)});
          }
      }

  for (const PathMatch& pair : rep.strongly_adjacent) {
    const Relator& d = r[pair.first];
    const Relator& e = pair.second_inverted ? inv[pair.second] : r[pair.second];
    // Union boundary: D past the shared path, then E walked back to its start.
    const Relator u{{at(d, pair.first_offset + 2), at(d, pair.first_offset + 3),
                     at(e, pair.second_offset + 3).inverse(), at(e, pair.second_offset + 2).inverse()}};
    const Word boundary(u.letters.begin(), u.letters.end());
    for (int k = 0; k < n; ++k)
      for (int flip = 0; flip < 2; ++flip) {
        const Relator& f = flip ? inv[k] : r[k];
        for (int c = 0; c < 4; ++c)
          for (int uo = 0; uo < 4; ++uo) {
            if (!matches(f, c, u, uo, 2)) continue;
            const bool is_d = k == pair.first && !flip && uo == 0 && c == (pair.first_offset + 2) % 4;
            const bool is_e = k == pair.second && flip != pair.second_inverted && uo == 2 &&
                              c == (4 - pair.second_offset) % 4;
            if (is_d || is_e) continue;
            rep.third_cells.push_back({pair, k, c, flip == 1, uo, boundary});
          }
      }
  }
  return rep;
}

}  // namespace sqm
