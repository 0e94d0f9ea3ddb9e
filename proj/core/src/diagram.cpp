#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "sqm/complex.hpp"

namespace sqm {

namespace {

std::vector<std::vector<Slot>> trace_facial_walks(const SquareComplex& y,
                                                   const std::vector<std::vector<Slot>>& rotation) {
  // position of each dart inside its vertex rotation
  std::map<std::pair<int, int>, std::pair<int, int>> where;
  for (int v = 0; v < y.num_vertices; ++v)
    for (std::size_t i = 0; i < rotation[v].size(); ++i) {
      const Slot& d = rotation[v][i];
      if (y.tail(d) != v) throw std::invalid_argument("rotation lists a dart at the wrong vertex");
      where[{d.edge, d.dir}] = {v, static_cast<int>(i)};
    }
  if (where.size() != 2 * y.edges.size()) throw std::invalid_argument("rotation system misses darts");

  std::set<std::pair<int, int>> used;
  std::vector<std::vector<Slot>> walks;
  for (const auto& [key, unused] : where) {
    if (used.count(key)) continue;
    std::vector<Slot> walk;
    Slot d{key.first, key.second};
    while (!used.count({d.edge, d.dir})) {
      used.insert({d.edge, d.dir});
      walk.push_back(d);
      const auto [v, i] = where.at({d.edge, -d.dir});
      const auto& ring = rotation[v];
      d = ring[(i + 1) % ring.size()];
    }
    walks.push_back(std::move(walk));
  }
  return walks;
}

std::vector<int> sorted_edges(const std::vector<Slot>& walk) {
  std::vector<int> e;
  for (const Slot& s : walk) e.push_back(s.edge);
  std::sort(e.begin(), e.end());
  return e;
}

bool connected(const SquareComplex& y) {
  if (y.num_vertices == 0) return true;
  std::vector<std::vector<int>> adj(y.num_vertices);
  for (const Edge& e : y.edges) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  std::vector<bool> seen(y.num_vertices, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push_back(w);
      }
  }
  return count == y.num_vertices;
}

}  // namespace

Diagram Diagram::from_rotation(SquareComplex y, std::vector<std::vector<Slot>> rotation) {
  if (auto err = y.validate(); !err.empty()) throw std::invalid_argument(err);
  if (static_cast<int>(rotation.size()) != y.num_vertices)
    throw std::invalid_argument("rotation system size does not match vertex count");
  if (!connected(y)) throw std::invalid_argument("diagram 1-skeleton is not connected");

  auto walks = trace_facial_walks(y, rotation);
  std::vector<bool> matched(walks.size(), false);
  for (const Face& f : y.faces) {
    const auto want = sorted_edges({f.walk.begin(), f.walk.end()});
    bool found = false;
    for (std::size_t i = 0; i < walks.size() && !found; ++i)
      if (!matched[i] && walks[i].size() == 4 && sorted_edges(walks[i]) == want) {
        matched[i] = true;
        found = true;
      }
    if (!found) throw std::invalid_argument("a square face is not a facial walk of the embedding");
  }
  std::vector<Slot> outer;
  int unmatched = 0;
  for (std::size_t i = 0; i < walks.size(); ++i)
    if (!matched[i]) {
      ++unmatched;
      outer = walks[i];
    }
  const int euler = y.num_vertices - static_cast<int>(y.edges.size()) + static_cast<int>(walks.size());
  if (unmatched != 1 || euler != 2) throw std::invalid_argument("embedding is not a planar disc");

  // Start the boundary walk at its smallest dart for a stable presentation.
  auto smallest = std::min_element(outer.begin(), outer.end(), [](const Slot& a, const Slot& b) {
    return std::pair{a.edge, a.dir} < std::pair{b.edge, b.dir};
  });
  std::rotate(outer.begin(), smallest, outer.end());

  Diagram d;
  d.complex = std::move(y);
  d.rotation = std::move(rotation);
  d.boundary = std::move(outer);
  return d;
}

Diagram Diagram::from_embedding(SquareComplex y, const std::vector<std::pair<double, double>>& xy) {
  if (static_cast<int>(xy.size()) != y.num_vertices)
    throw std::invalid_argument("coordinate count does not match vertex count");
  std::vector<std::vector<Slot>> rotation(y.num_vertices);
  for (std::size_t e = 0; e < y.edges.size(); ++e) {
    const Edge& x = y.edges[e];
    if (x.src == x.dst) throw std::invalid_argument("straight-line drawings cannot contain loops");
    rotation[x.src].push_back({static_cast<int>(e), 1});
    rotation[x.dst].push_back({static_cast<int>(e), -1});
  }
  // Rotations alone miss crossings between edges with no common vertex.
  auto orient = [&](int a, int b, int c) {
    const double v = (xy[b].first - xy[a].first) * (xy[c].second - xy[a].second) -
                     (xy[b].second - xy[a].second) * (xy[c].first - xy[a].first);
    return (v > 1e-12) - (v < -1e-12);
  };
  for (std::size_t e = 0; e < y.edges.size(); ++e)
    for (std::size_t f = e + 1; f < y.edges.size(); ++f) {
      const Edge &a = y.edges[e], &b = y.edges[f];
      if (a.src == b.src || a.src == b.dst || a.dst == b.src || a.dst == b.dst) continue;
      if (orient(a.src, a.dst, b.src) * orient(a.src, a.dst, b.dst) < 0 &&
          orient(b.src, b.dst, a.src) * orient(b.src, b.dst, a.dst) < 0)
        throw std::invalid_argument("edges cross in the drawing");
    }
  for (int v = 0; v < y.num_vertices; ++v) {
    auto angle = [&](const Slot& s) {
      const int w = y.head(s);
      return std::atan2(xy[w].second - xy[v].second, xy[w].first - xy[v].first);
    };
    std::sort(rotation[v].begin(), rotation[v].end(),
              [&](const Slot& a, const Slot& b) { return angle(a) < angle(b); });
  }
  return from_rotation(std::move(y), std::move(rotation));
}

std::optional<BalancedCut> find_balanced_cut(const Diagram& d, double c_prime) {
  const SquareComplex& y = d.complex;
  const int faces = face_count(y);
  if (faces < 2) return std::nullopt;
  const int length = d.boundary_length();
  const double bound = 4.0 + 8.0 * std::log(static_cast<double>(faces)) / c_prime;

  std::vector<int> bvert(length);
  std::vector<bool> on_boundary(y.num_vertices, false), boundary_edge(y.edges.size(), false);
  for (int i = 0; i < length; ++i) {
    bvert[i] = y.tail(d.boundary[i]);
    on_boundary[bvert[i]] = true;
    boundary_edge[d.boundary[i].edge] = true;
  }
  std::vector<std::vector<std::pair<int, int>>> adj(y.num_vertices);
  for (std::size_t e = 0; e < y.edges.size(); ++e) {
    if (boundary_edge[e]) continue;
    adj[y.edges[e].src].push_back({y.edges[e].dst, static_cast<int>(e)});
    adj[y.edges[e].dst].push_back({y.edges[e].src, static_cast<int>(e)});
  }

  struct Best {
    int len, balance, i, j;
    std::vector<int> verts, edges;
  };
  std::optional<Best> best;
  for (int i = 0; i < length; ++i) {
    // BFS through interior vertices only; boundary vertices end a path.
    const int s = bvert[i];
    std::vector<int> dist(y.num_vertices, -1), prev_v(y.num_vertices, -1), prev_e(y.num_vertices, -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      if (v != s && on_boundary[v]) continue;
      for (auto [w, e] : adj[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          prev_v[w] = v;
          prev_e[w] = e;
          queue.push_back(w);
        }
    }
    for (int j = i + 1; j < length; ++j) {
      const int t = bvert[j];
      if (t == s || dist[t] <= 0 || dist[t] > bound) continue;
      const int arc = j - i, other = length - arc;
      if (4 * arc < length || 4 * other < length) continue;
      const int balance = std::min(arc, other);
      const bool better = !best || dist[t] < best->len || (dist[t] == best->len && balance > best->balance);
      if (!better) continue;
      Best b{dist[t], balance, i, j, {}, {}};
      for (int v = t; v != s; v = prev_v[v]) {
        b.verts.push_back(v);
        b.edges.push_back(prev_e[v]);
      }
      b.verts.push_back(s);
      std::reverse(b.verts.begin(), b.verts.end());
      std::reverse(b.edges.begin(), b.edges.end());
      best = std::move(b);
    }
  }
  if (!best) return std::nullopt;
  BalancedCut cut;
  cut.vertices = std::move(best->verts);
  cut.edges = std::move(best->edges);
  cut.side_a = best->j - best->i;
  cut.side_b = length - cut.side_a;
  cut.length_bound = bound;
  return cut;
}

}  // namespace sqm
