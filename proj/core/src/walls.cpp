#include "sqm/walls.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "sqm/fulfill.hpp"
#include "sqm/parallel.hpp"

namespace sqm {

std::string to_string(HypergraphKind k) {
  switch (k) {
    case HypergraphKind::standard: return "standard";
    case HypergraphKind::red: return "red";
    case HypergraphKind::blue: return "blue";
  }
  return "standard";
}

HypergraphKind parse_kind(const std::string& s) {
  if (s == "standard") return HypergraphKind::standard;
  if (s == "red") return HypergraphKind::red;
  if (s == "blue") return HypergraphKind::blue;
  throw std::invalid_argument("unknown hypergraph kind: " + s);
}

namespace {

int slot_of_edge(const Face& f, int edge) {
  for (int k = 0; k < 4; ++k)
    if (f.walk[k].edge == edge) return k;
  return -1;
}

std::tuple<int, int, int> key_of(const Face& f) { return {f.label, f.start, f.orient}; }

}  // namespace

PaintedComplex paint(SquareComplex x) {
  if (auto err = x.validate(); !err.empty()) throw std::invalid_argument(err);
  PaintedComplex p;
  const auto adjacency = find_strongly_adjacent(x);
  if (!adjacency.violations.empty())
    throw PaintingConflict("faces " + std::to_string(adjacency.violations[0].first) + " and " +
                           std::to_string(adjacency.violations[0].second) + " share three or more edges");
  const int n = static_cast<int>(x.faces.size());
  p.partner.assign(n, -1);
  p.first_shared.assign(n, -1);
  for (Face& f : x.faces) f.color = Color::regular;

  std::map<int, Color> label_color;
  std::map<int, std::pair<int, int>> label_positions;  // distinguished relator positions per label
  auto claim = [&](int face, Color c) {
    Face& f = x.faces[face];
    f.color = c;
    if (f.label == 0) return;
    auto [it, fresh] = label_color.emplace(f.label, c);
    if (!fresh && it->second != c)
      throw PaintingConflict("label " + std::to_string(f.label) + " would be both red and blue");
  };

  for (const StrongPair& pair : adjacency.pairs) {
    for (int f : {pair.first, pair.second})
      if (p.partner[f] >= 0)
        throw PaintingConflict("face " + std::to_string(f) + " is strongly adjacent to two faces");
    p.partner[pair.first] = pair.second;
    p.partner[pair.second] = pair.first;
    for (int f : {pair.first, pair.second}) {
      const int s1 = slot_of_edge(x.faces[f], pair.shared_edges[0]);
      const int s2 = slot_of_edge(x.faces[f], pair.shared_edges[1]);
      if ((s1 - s2 + 4) % 4 == 2)
        throw PaintingConflict("distinguished edges of face " + std::to_string(f) + " are opposite");
      p.first_shared[f] = (s1 + 1) % 4 == s2 ? s1 : s2;
    }
    const Face& a = x.faces[pair.first];
    const Face& b = x.faces[pair.second];
    if (key_of(a) == key_of(b))
      throw PaintingConflict("faces " + std::to_string(pair.first) + " and " + std::to_string(pair.second) +
                             " carry equal keys");
    const bool first_red = key_of(a) < key_of(b);
    claim(first_red ? pair.first : pair.second, Color::red);
    claim(first_red ? pair.second : pair.first, Color::blue);
    for (int f : {pair.first, pair.second}) {
      const Face& face = x.faces[f];
      if (face.label == 0) continue;
      const int a0 = position_of_slot(face, p.first_shared[f]);
      const int a1 = position_of_slot(face, (p.first_shared[f] + 1) % 4);
      const std::pair<int, int> pos{std::min(a0, a1), std::max(a0, a1)};
      auto [it, fresh] = label_positions.emplace(face.label, pos);
      if (!fresh && it->second != pos)
        throw PaintingConflict("label " + std::to_string(face.label) + " is distinguished along two edge pairs");
    }
  }
  // Translates without their partner inside the finite piece inherit the
  // colour and distinguished positions of their label.
  for (int f = 0; f < n; ++f) {
    Face& face = x.faces[f];
    if (p.partner[f] >= 0 || face.label == 0) continue;
    auto it = label_color.find(face.label);
    if (it == label_color.end()) continue;
    face.color = it->second;
    const auto [q0, q1] = label_positions.at(face.label);
    const int s0 = placement(face, q0).slot, s1 = placement(face, q1).slot;
    p.first_shared[f] = (s0 + 1) % 4 == s1 ? s0 : s1;
  }
  p.base = std::move(x);
  p.pairs = adjacency.pairs;
  return p;
}

std::vector<GammaEdge> face_gamma_edges(const PaintedComplex& x, int face, HypergraphKind kind) {
  const Face& f = x.base.faces[face];
  const bool turns = x.first_shared[face] >= 0 && ((kind == HypergraphKind::red && f.color == Color::red) ||
                                                   (kind == HypergraphKind::blue && f.color == Color::blue));
  auto make = [&](int s, int t) {
    return GammaEdge{f.walk[s].edge, f.walk[t].edge, face, s, t};
  };
  if (!turns) return {make(0, 2), make(1, 3)};
  const int a = x.first_shared[face];
  auto sorted = [&](int s, int t) { return s < t ? make(s, t) : make(t, s); };
  std::vector<GammaEdge> out{sorted(a, (a + 3) % 4), sorted((a + 1) % 4, (a + 2) % 4)};
  std::sort(out.begin(), out.end(), [](const GammaEdge& l, const GammaEdge& r) { return l.slot_a < r.slot_a; });
  return out;
}

std::vector<Hypergraph> trace_hypergraphs(const PaintedComplex& x, HypergraphKind kind) {
  const int m = static_cast<int>(x.base.edges.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<GammaEdge> all;
  for (int f = 0; f < static_cast<int>(x.base.faces.size()); ++f)
    for (const GammaEdge& g : face_gamma_edges(x, f, kind)) {
      all.push_back(g);
      parent[find(g.a)] = find(g.b);
    }
  std::vector<int> index_of_root(m, -1);
  std::vector<Hypergraph> out;
  for (int e = 0; e < m; ++e) {
    int& idx = index_of_root[find(e)];
    if (idx < 0) {
      idx = static_cast<int>(out.size());
      out.push_back({kind, {}, {}, {}});
    }
    out[idx].vertices.push_back(e);
  }
  for (const GammaEdge& g : all) {
    Hypergraph& h = out[index_of_root[find(g.a)]];
    h.edges.push_back(g);
    h.carrier.push_back(g.face);
  }
  for (Hypergraph& h : out) {
    h.carrier.erase(std::unique(h.carrier.begin(), h.carrier.end()), h.carrier.end());
  }
  return out;
}

std::vector<int> gamma_path(const Hypergraph& h, int from, int to) {
  std::map<int, std::vector<int>> at;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    at[h.edges[i].a].push_back(static_cast<int>(i));
    if (h.edges[i].b != h.edges[i].a) at[h.edges[i].b].push_back(static_cast<int>(i));
  }
  std::vector<int> prev(h.edges.size(), -2);
  std::deque<int> queue{from};
  prev[from] = -1;
  while (!queue.empty()) {
    const int g = queue.front();
    queue.pop_front();
    if (g == to) break;
    for (int v : {h.edges[g].a, h.edges[g].b})
      for (int n : at[v])
        if (prev[n] == -2) {
          prev[n] = g;
          queue.push_back(n);
        }
  }
  if (prev[to] == -2) return {};
  std::vector<int> path;
  for (int g = to; g != -1; g = prev[g]) path.push_back(g);
  std::reverse(path.begin(), path.end());
  return path;
}

TreeCheck is_embedded_tree(const Hypergraph& h) {
  TreeCheck out;
  std::map<int, int> local;
  for (int v : h.vertices) local.emplace(v, static_cast<int>(local.size()));
  const int nv = static_cast<int>(local.size());
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (neighbour, Γ-edge)
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const int a = local.at(h.edges[i].a), b = local.at(h.edges[i].b);
    adj[a].push_back({b, static_cast<int>(i)});
    if (a != b) adj[b].push_back({a, static_cast<int>(i)});
  }
  // Iterative DFS; the first non-tree edge closes a cycle.
  std::vector<int> depth(nv, -1), via(nv, -1), up(nv, -1);
  for (int root = 0; root < nv && out.cycle.empty(); ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    while (!stack.empty() && out.cycle.empty()) {
      auto& [v, i] = stack.back();
      if (i == adj[v].size()) {
        stack.pop_back();
        continue;
      }
      const auto [w, g] = adj[v][i++];
      if (g == via[v]) continue;
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        via[w] = g;
        up[w] = v;
        stack.push_back({w, 0});
      } else if (depth[w] <= depth[v]) {
        // back edge g from v to its ancestor w (or a loop when v == w)
        std::vector<int> cyc{g};
        for (int u = v; u != w; u = up[u]) cyc.push_back(via[u]);
        std::reverse(cyc.begin(), cyc.end());
        out.cycle = std::move(cyc);
      }
    }
  }
  if (!out.cycle.empty()) {
    out.tree = false;
    out.witness = TreeCheck::Witness::cycle;
    // Start the cycle at its smallest Γ-edge for a stable witness.
    auto first = std::min_element(out.cycle.begin(), out.cycle.end());
    std::rotate(out.cycle.begin(), first, out.cycle.end());
    return out;
  }
  std::map<int, std::vector<int>> by_face;
  for (std::size_t i = 0; i < h.edges.size(); ++i) by_face[h.edges[i].face].push_back(static_cast<int>(i));
  for (const auto& [face, list] : by_face)
    if (list.size() > 1) {
      out.tree = false;
      out.witness = TreeCheck::Witness::repeated_face;
      out.repeated_face = face;
      out.repeated_path = gamma_path(h, list[0], list[1]);
      return out;
    }
  return out;
}

Components complement_components(const SquareComplex& x, const Hypergraph& h) {
  std::vector<bool> removed(x.edges.size(), false);
  for (int e : h.vertices) removed[e] = true;
  std::vector<std::vector<int>> adj(x.num_vertices);
  for (std::size_t e = 0; e < x.edges.size(); ++e) {
    if (removed[e]) continue;
    adj[x.edges[e].src].push_back(x.edges[e].dst);
    adj[x.edges[e].dst].push_back(x.edges[e].src);
  }
  Components c;
  c.side.assign(x.num_vertices, -1);
  for (int s = 0; s < x.num_vertices; ++s) {
    if (c.side[s] >= 0) continue;
    c.side[s] = c.count;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adj[v])
        if (c.side[w] < 0) {
          c.side[w] = c.count;
          queue.push_back(w);
        }
    }
    ++c.count;
  }
  for (int e : h.vertices)
    if (!x.vertex_complete(x.edges[e].src) && !x.vertex_complete(x.edges[e].dst)) c.boundary_open = true;
  return c;
}

WallDecomposition build_walls(const PaintedComplex& x, const std::vector<HypergraphKind>& kinds, int threads) {
  WallDecomposition w;
  std::set<std::pair<std::vector<int>, std::vector<std::tuple<int, int, int>>>> seen;
  for (HypergraphKind kind : kinds)
    for (Hypergraph& h : trace_hypergraphs(x, kind)) {
      std::vector<std::tuple<int, int, int>> key;
      for (const GammaEdge& g : h.edges) key.emplace_back(g.face, g.slot_a, g.slot_b);
      if (seen.emplace(h.vertices, std::move(key)).second) w.walls.push_back(std::move(h));
    }
  w.sides.resize(w.walls.size());
  parallel_for(w.walls.size(), threads, [&](std::size_t i) { w.sides[i] = complement_components(x.base, w.walls[i]); });
  w.walls_of_edge.resize(x.base.edges.size());
  for (std::size_t i = 0; i < w.walls.size(); ++i)
    for (int e : w.walls[i].vertices) w.walls_of_edge[e].push_back(static_cast<int>(i));
  return w;
}

int wall_distance(const WallDecomposition& w, int x, int y) {
  int d = 0;
  for (const Components& c : w.sides)
    if (c.side[x] != c.side[y]) ++d;
  return d;
}

std::string hypergraphs_dot(const std::vector<Hypergraph>& hs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const Hypergraph& h = hs[i];
    const char* colour = h.kind == HypergraphKind::red ? "red" : h.kind == HypergraphKind::blue ? "blue" : "black";
    out << "graph h" << i << " {\n  label=\"" << to_string(h.kind) << "\";\n";
    for (int v : h.vertices) out << "  e" << v << ";\n";
    for (const GammaEdge& g : h.edges)
      out << "  e" << g.a << " -- e" << g.b << " [label=\"f" << g.face << "\", color=" << colour << "];\n";
    out << "}\n";
  }
  return out.str();
}

}  // namespace sqm
