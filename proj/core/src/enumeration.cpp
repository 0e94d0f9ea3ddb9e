#include "sqm/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "sqm/parallel.hpp"

namespace sqm {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

struct Traversal {
  std::vector<int> code;
  std::vector<int> order;  // new face index -> old face
  std::vector<int> rot;    // per old face: old slot at new position 0
};

Traversal traverse(const Shape& s, int f0, int rho, bool reflect) {
  const int dl = reflect ? -1 : 1;
  Traversal t;
  std::vector<int> id(s.faces, -1);
  t.rot.assign(s.faces, 0);
  id[f0] = 0;
  t.rot[f0] = rho;
  t.order.push_back(f0);
  t.code.reserve(4 * s.faces);
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    const int f = t.order[i];
    for (int p = 0; p < 4; ++p) {
      const int other = s.partner[4 * f + mod4(t.rot[f] + dl * p)];
      if (other < 0) {
        t.code.push_back(-1);
        continue;
      }
      const int g = other / 4, l = other % 4;
      if (id[g] < 0) {
        id[g] = static_cast<int>(t.order.size());
        t.rot[g] = l;
        t.order.push_back(g);
      }
      t.code.push_back(4 * id[g] + mod4(dl * (l - t.rot[g])));
    }
  }
  return t;
}

std::vector<std::array<int, 3>> minimal_traversals(const Shape& s) {
  std::vector<int> best;
  std::vector<std::array<int, 3>> out;
  for (int f = 0; f < s.faces; ++f)
    for (int rho = 0; rho < 4; ++rho)
      for (int r = 0; r < 2; ++r) {
        auto code = traverse(s, f, rho, r == 1).code;
        if (out.empty() || code < best) {
          best = std::move(code);
          out.assign(1, {f, rho, r});
        } else if (code == best) {
          out.push_back({f, rho, r});
        }
      }
  return out;
}

int slot_position(const Decoration& d, int f, int k) {
  return d.orient[f] > 0 ? mod4(k - d.start[f]) : mod4(d.start[f] - k);
}

std::vector<int> decorated_code(const Shape& s, const Decoration& d,
                                const std::vector<std::array<int, 3>>& traversals) {
  std::vector<int> best;
  for (const auto& [f0, rho, r] : traversals) {
    const Traversal t = traverse(s, f0, rho, r == 1);
    const int dl = r == 1 ? -1 : 1;
    std::vector<int> rename(s.faces + 1, 0);
    int next_label = 0;
    std::vector<int> code = t.code;
    for (int f : t.order) {
      int& l = rename[d.label[f]];
      if (l == 0) l = ++next_label;
      code.push_back(l);
      code.push_back(mod4(dl * (d.start[f] - t.rot[f])));
      code.push_back(dl * d.orient[f] > 0 ? 1 : 0);
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::string key_of(const std::vector<int>& code) {
  std::string k;
  k.reserve(code.size());
  for (int x : code) k.push_back(static_cast<char>(x + 1));
  return k;
}

// Attach one new face to every canonical shape of the previous level.
void grow(const Shape& base, std::map<std::vector<int>, Shape>& out) {
  Shape s = base;
  const int first = 4 * s.faces;
  ++s.faces;
  s.partner.resize(first + 4, -1);
  std::vector<int> free_old;
  for (int i = 0; i < first; ++i)
    if (s.partner[i] < 0) free_old.push_back(i);
  std::vector<bool> taken(free_old.size(), false);

  auto rec = [&](auto&& self, int j, int glued_old) -> void {
    if (j == 4) {
      if (base.faces == 0 || glued_old > 0) {
        const auto trav = minimal_traversals(s);
        const Traversal c = traverse(s, trav[0][0], trav[0][1], trav[0][2] == 1);
        if (!out.count(c.code)) out.emplace(c.code, Shape{s.faces, c.code});
      }
      return;
    }
    const int slot = first + j;
    if (s.partner[slot] >= 0) {
      self(self, j + 1, glued_old);
      return;
    }
    self(self, j + 1, glued_old);  // free
    for (std::size_t i = 0; i < free_old.size(); ++i) {
      if (taken[i]) continue;
      taken[i] = true;
      s.partner[slot] = free_old[i];
      s.partner[free_old[i]] = slot;
      self(self, j + 1, glued_old + 1);
      s.partner[free_old[i]] = -1;
      s.partner[slot] = -1;
      taken[i] = false;
    }
    for (int k = j + 1; k < 4; ++k) {
      const int other = first + k;
      if (s.partner[other] >= 0) continue;
      s.partner[slot] = other;
      s.partner[other] = slot;
      self(self, j + 1, glued_old);
      s.partner[slot] = -1;
      s.partner[other] = -1;
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<int> traversal_code(const Shape& s, int f0, int rho, bool reflect) {
  return traverse(s, f0, rho, reflect).code;
}

bool is_connected(const Shape& s) {
  return s.faces == 0 || static_cast<int>(traverse(s, 0, 0, false).order.size()) == s.faces;
}

std::vector<int> canonical_code(const Shape& s) {
  if (!is_connected(s)) throw std::invalid_argument("shape is not connected");
  const auto t = minimal_traversals(s);
  return traverse(s, t[0][0], t[0][1], t[0][2] == 1).code;
}

Shape canonical_shape(const Shape& s) { return {s.faces, canonical_code(s)}; }

std::vector<int> canonical_decorated_code(const Shape& s, const Decoration& d) {
  if (!is_connected(s)) throw std::invalid_argument("shape is not connected");
  return decorated_code(s, d, minimal_traversals(s));
}

bool locally_injective(const Shape& s, const Decoration& d) {
  for (int a = 0; a < 4 * s.faces; ++a) {
    const int b = s.partner[a];
    if (b <= a) continue;
    if (d.label[a / 4] == d.label[b / 4] && slot_position(d, a / 4, a % 4) == slot_position(d, b / 4, b % 4))
      return false;
  }
  return true;
}

SquareComplex to_complex(const Shape& s, const Decoration* deco) {
  const int corners = 4 * s.faces;
  std::vector<int> parent(corners);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  auto corner = [](int slot, int step) { return 4 * (slot / 4) + (slot % 4 + step) % 4; };
  for (int a = 0; a < corners; ++a) {
    const int b = s.partner[a];
    if (b < 0) continue;
    unite(corner(a, 0), corner(b, 1));
    unite(corner(a, 1), corner(b, 0));
  }
  SquareComplex y;
  std::vector<int> vertex_of_root(corners, -1);
  std::vector<int> vertex(corners);
  for (int c = 0; c < corners; ++c) {
    int& v = vertex_of_root[find(c)];
    if (v < 0) v = y.add_vertex();
    vertex[c] = v;
  }
  std::vector<Slot> slot_of(corners);
  for (int a = 0; a < corners; ++a) {
    const int b = s.partner[a];
    if (b >= 0 && b < a) continue;
    const int e = y.add_edge(vertex[corner(a, 0)], vertex[corner(a, 1)]);
    slot_of[a] = {e, 1};
    if (b >= 0) slot_of[b] = {e, -1};
  }
  for (int f = 0; f < s.faces; ++f) {
    Face face;
    for (int k = 0; k < 4; ++k) face.walk[k] = slot_of[4 * f + k];
    if (deco) {
      face.label = deco->label[f];
      face.start = deco->start[f];
      face.orient = deco->orient[f];
    } else {
      face.label = 1;
    }
    y.faces.push_back(face);
  }
  return y;
}

std::vector<Shape> shapes_with_faces(int k) {
  if (k < 1 || k > 5) throw std::invalid_argument("face count must lie in 1..5");
  static std::mutex mutex;
  static std::vector<std::vector<Shape>> levels{{Shape{}}};
  std::lock_guard lock(mutex);
  while (static_cast<int>(levels.size()) <= k) {
    std::map<std::vector<int>, Shape> next;
    for (const Shape& s : levels.back()) grow(s, next);
    std::vector<Shape> level;
    level.reserve(next.size());
    for (auto& [code, s] : next) level.push_back(std::move(s));
    levels.push_back(std::move(level));
  }
  return levels[k];
}

EnumerationCursor::EnumerationCursor(int max_faces, EnumerationMode mode, std::function<bool(const Shape&)> keep)
    : max_faces_(max_faces), mode_(mode) {
  if (max_faces < 1 || max_faces > 5) throw std::invalid_argument("max_faces must lie in 1..5");
  for (int k = 1; k <= max_faces; ++k)
    for (Shape& s : shapes_with_faces(k))
      if (!keep || keep(s)) shapes_.push_back(std::move(s));
}

void EnumerationCursor::reset_decoration() {
  const int f = shapes_[shape_index_].faces;
  deco_.label.assign(f, 1);
  deco_.start.assign(f, 0);
  deco_.orient.assign(f, 1);
  seen_.clear();
  traversals_ = minimal_traversals(shapes_[shape_index_]);
}

bool EnumerationCursor::advance_decoration() {
  const int f = static_cast<int>(deco_.label.size());
  for (int i = f - 1; i >= 0; --i) {
    if (deco_.orient[i] > 0) {
      deco_.orient[i] = -1;
      return true;
    }
    deco_.orient[i] = 1;
    if (deco_.start[i] < 3) {
      ++deco_.start[i];
      return true;
    }
    deco_.start[i] = 0;
  }
  // Labels run through restricted growth strings: label[i] <= 1 + max(label[<i]).
  for (int i = f - 1; i >= 1; --i) {
    const int prefix_max = *std::max_element(deco_.label.begin(), deco_.label.begin() + i);
    if (deco_.label[i] <= prefix_max) {
      ++deco_.label[i];
      std::fill(deco_.label.begin() + i + 1, deco_.label.end(), 1);
      return true;
    }
  }
  return false;
}

std::optional<AbstractComplex> EnumerationCursor::next() {
  for (;;) {
    if (!started_) {
      if (shapes_.empty()) return std::nullopt;
      started_ = true;
      reset_decoration();
    } else if (shape_index_ >= shapes_.size()) {
      return std::nullopt;
    } else if (mode_ == EnumerationMode::shapes || !advance_decoration()) {
      if (++shape_index_ >= shapes_.size()) return std::nullopt;
      reset_decoration();
    }
    const Shape& s = shapes_[shape_index_];
    if (mode_ == EnumerationMode::decorated) {
      if (!locally_injective(s, deco_)) continue;
      if (!seen_.insert(key_of(decorated_code(s, deco_, traversals_))).second) continue;
    }
    return make_abstract(to_complex(s, &deco_));
  }
}

std::vector<AbstractComplex> enumerate_abstract_complexes(int max_faces, EnumerationMode mode) {
  EnumerationCursor cursor(max_faces, mode);
  std::vector<AbstractComplex> out;
  while (auto y = cursor.next()) out.push_back(std::move(*y));
  return out;
}

int single_face_shape_count_oracle() {
  std::vector<std::array<int, 4>> pairings;
  std::array<int, 4> p{-1, -1, -1, -1};
  auto rec = [&](auto&& self, int i) -> void {
    if (i == 4) {
      pairings.push_back(p);
      return;
    }
    if (p[i] >= 0) return self(self, i + 1);
    self(self, i + 1);
    for (int j = i + 1; j < 4; ++j)
      if (p[j] < 0) {
        p[i] = j;
        p[j] = i;
        self(self, i + 1);
        p[i] = p[j] = -1;
      }
  };
  rec(rec, 0);
  std::vector<std::array<int, 4>> classes;
  for (const auto& q : pairings) {
    std::array<int, 4> best{};
    bool first = true;
    for (int r = 0; r < 4; ++r)
      for (int flip = 0; flip < 2; ++flip) {
        auto sigma = [&](int k) { return flip ? mod4(r - k) : mod4(k + r); };
        std::array<int, 4> img{};
        for (int k = 0; k < 4; ++k) img[sigma(k)] = q[k] < 0 ? -1 : sigma(q[k]);
        if (first || img < best) best = img;
        first = false;
      }
    if (std::find(classes.begin(), classes.end(), best) == classes.end()) classes.push_back(best);
  }
  return static_cast<int>(classes.size());
}

SquareComplex random_complex(int faces, std::mt19937_64& rng) {
  SquareComplex y;
  const int pool = std::max(2, faces + 2);
  for (int v = 0; v < pool; ++v) y.add_vertex();
  std::uniform_int_distribution<int> vertex(0, pool - 1), coin(0, 1), label(1, std::max(1, faces));
  for (int f = 0; f < faces; ++f) {
    std::array<int, 4> c{};
    for (int& x : c) x = vertex(rng);
    std::array<Slot, 4> walk{};
    for (int k = 0; k < 4; ++k) {
      const int u = c[k], v = c[(k + 1) % 4];
      int found = -1;
      if (coin(rng))
        for (std::size_t e = 0; e < y.edges.size() && found < 0; ++e) {
          if (y.edges[e].src == u && y.edges[e].dst == v) walk[k] = {static_cast<int>(e), 1}, found = 1;
          else if (y.edges[e].src == v && y.edges[e].dst == u) walk[k] = {static_cast<int>(e), -1}, found = 1;
        }
      if (found < 0) walk[k] = {y.add_edge(u, v), 1};
    }
    y.add_face(walk, label(rng), vertex(rng) % 4, coin(rng) ? 1 : -1);
  }
  return y;
}

std::vector<AbstractComplex> local_iso_candidates(int max_faces, const IsoParams& p) {
  auto exceeds = [&](const Shape& s) {
    int pairs = 0;
    for (int a = 0; a < 4 * s.faces; ++a)
      if (s.partner[a] > a) ++pairs;
    return pairs > 4.0 * (p.d + p.eps) * s.faces;
  };
  EnumerationCursor cursor(max_faces, EnumerationMode::decorated, exceeds);
  std::vector<AbstractComplex> out;
  while (auto y = cursor.next()) out.push_back(std::move(*y));
  return out;
}

std::vector<LocalIsoViolation> scan_local_iso(const std::vector<Relator>& r, int max_faces, const IsoParams& p) {
  return scan_local_iso(r, local_iso_candidates(max_faces, p), p);
}

std::vector<LocalIsoViolation> scan_local_iso(const std::vector<Relator>& r,
                                              const std::vector<AbstractComplex>& candidates, const IsoParams& p,
                                              int threads) {
  std::vector<std::optional<LocalIsoViolation>> found(candidates.size());
  parallel_for(candidates.size(), threads, [&](std::size_t i) {
    const AbstractComplex& y = candidates[i];
    const auto report = check_generalized_iso(y.base, p);
    if (!report.violation) return;
    if (auto w = fulfill_search(y, r)) found[i] = LocalIsoViolation{y, std::move(*w), report};
  });
  std::vector<LocalIsoViolation> out;
  for (auto& v : found)
    if (v) out.push_back(std::move(*v));
  return out;
}

}  // namespace sqm
