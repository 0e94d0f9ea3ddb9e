#include "sqm/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sqm {

std::string to_string(Color c) {
  switch (c) {
    case Color::red: return "red";
    case Color::blue: return "blue";
    default: return "regular";
  }
}

Color parse_color(const std::string& s) {
  if (s == "red") return Color::red;
  if (s == "blue") return Color::blue;
  if (s == "regular" || s.empty()) return Color::regular;
  throw std::invalid_argument("unknown color: " + s);
}

int SquareComplex::add_edge(int src, int dst) {
  edges.push_back({src, dst});
  return static_cast<int>(edges.size()) - 1;
}

int SquareComplex::add_face(const std::array<Slot, 4>& walk, int label, int start, int orient) {
  Face f;
  f.walk = walk;
  f.label = label;
  f.start = start;
  f.orient = orient;
  faces.push_back(f);
  return static_cast<int>(faces.size()) - 1;
}

std::vector<int> SquareComplex::edge_degrees() const {
  std::vector<int> deg(edges.size(), 0);
  for (const Face& f : faces)
    for (const Slot& s : f.walk) ++deg[s.edge];
  return deg;
}

std::string SquareComplex::validate() const {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& x = edges[e];
    if (x.src < 0 || x.src >= num_vertices || x.dst < 0 || x.dst >= num_vertices)
      return "edge " + std::to_string(e) + " has an endpoint out of range";
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const Face& f = faces[i];
    for (const Slot& s : f.walk) {
      if (s.edge < 0 || s.edge >= static_cast<int>(edges.size()))
        return "face " + std::to_string(i) + " references a missing edge";
      if (s.dir != 1 && s.dir != -1) return "face " + std::to_string(i) + " has a bad slot direction";
    }
    for (int k = 0; k < 4; ++k)
      if (head(f.walk[k]) != tail(f.walk[(k + 1) % 4]))
        return "face " + std::to_string(i) + " has an attaching walk that is not closed";
    if (f.start < 0 || f.start > 3) return "face " + std::to_string(i) + " has start outside 0..3";
    if (f.orient != 1 && f.orient != -1) return "face " + std::to_string(i) + " has bad orientation";
    if (f.label < 0) return "face " + std::to_string(i) + " has a negative label";
  }
  if (!complete.empty() && static_cast<int>(complete.size()) != num_vertices)
    return "completeness flags do not match the vertex count";
  return {};
}

int ComplexBuilder::edge(int u, int v) {
  for (std::size_t e = 0; e < complex_.edges.size(); ++e) {
    const Edge& x = complex_.edges[e];
    if ((x.src == u && x.dst == v) || (x.src == v && x.dst == u)) return static_cast<int>(e);
  }
  return complex_.add_edge(u, v);
}

int ComplexBuilder::square(int a, int b, int c, int d, int label) {
  const int corners[4] = {a, b, c, d};
  std::array<Slot, 4> walk{};
  for (int k = 0; k < 4; ++k) {
    const int u = corners[k], v = corners[(k + 1) % 4];
    const int e = edge(u, v);
    walk[k] = {e, complex_.edges[e].src == u ? 1 : -1};
  }
  return complex_.add_face(walk, label);
}

int face_count(const SquareComplex& y) { return static_cast<int>(y.faces.size()); }

int generalized_boundary_length(const SquareComplex& y) {
  int total = 0;
  for (int deg : y.edge_degrees()) total += 2 - deg;
  return total;
}

int cancellation(const SquareComplex& y) {
  int total = 0;
  for (int deg : y.edge_degrees()) total += deg - 1;
  return total;
}

IsoReport check_isoperimetric(const Diagram& d, const IsoParams& p) {
  IsoReport r;
  r.boundary = d.boundary_length();
  r.faces = face_count(d.complex);
  r.threshold = 4.0 * (1.0 - 2.0 * p.d - p.eps) * r.faces;
  r.pass = r.boundary >= r.threshold;
  return r;
}

GeneralizedIsoReport check_generalized_iso(const SquareComplex& y, const IsoParams& p) {
  GeneralizedIsoReport r;
  r.faces = face_count(y);
  r.cancel = cancellation(y);
  r.generalized_boundary = generalized_boundary_length(y);
  r.cancel_threshold = 4.0 * (p.d + p.eps) * r.faces;
  r.boundary_threshold = 4.0 * (1.0 - 2.0 * p.d - p.eps) * r.faces;
  r.violation = r.cancel > r.cancel_threshold;
  r.boundary_form_violation = r.generalized_boundary < r.boundary_threshold;
  return r;
}

SubComplex extract_faces(const SquareComplex& x, const std::vector<int>& faces) {
  SubComplex out;
  std::map<int, int> vmap, emap;
  auto vertex = [&](int v) {
    auto [it, fresh] = vmap.emplace(v, static_cast<int>(out.vertex_of.size()));
    if (fresh) out.vertex_of.push_back(v);
    return it->second;
  };
  for (int f : faces) {
    const Face& src = x.faces[f];
    Face copy = src;
    for (int k = 0; k < 4; ++k) {
      const int e = src.walk[k].edge;
      auto it = emap.find(e);
      if (it == emap.end()) {
        const int a = vertex(x.edges[e].src), b = vertex(x.edges[e].dst);
        it = emap.emplace(e, out.complex.add_edge(a, b)).first;
        out.edge_of.push_back(e);
      }
      copy.walk[k].edge = it->second;
    }
    out.complex.faces.push_back(copy);
    out.face_of.push_back(f);
  }
  out.complex.num_vertices = static_cast<int>(out.vertex_of.size());
  if (!x.complete.empty()) {
    out.complex.complete.resize(out.vertex_of.size());
    for (std::size_t v = 0; v < out.vertex_of.size(); ++v)
      out.complex.complete[v] = x.complete[out.vertex_of[v]];
  }
  return out;
}

StrongAdjacency find_strongly_adjacent(const SquareComplex& x) {
  std::vector<std::vector<int>> faces_at(x.edges.size());
  for (std::size_t f = 0; f < x.faces.size(); ++f)
    for (const Slot& s : x.faces[f].walk) {
      auto& list = faces_at[s.edge];
      if (list.empty() || list.back() != static_cast<int>(f)) list.push_back(static_cast<int>(f));
    }
  std::map<std::pair<int, int>, std::set<int>> shared;
  for (std::size_t e = 0; e < faces_at.size(); ++e) {
    auto& list = faces_at[e];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j)
        shared[{list[i], list[j]}].insert(static_cast<int>(e));
  }
  StrongAdjacency out;
  for (const auto& [key, edges] : shared) {
    if (edges.size() < 2) continue;
    StrongPair p{key.first, key.second, std::vector<int>(edges.begin(), edges.end())};
    (edges.size() == 2 ? out.pairs : out.violations).push_back(std::move(p));
  }
  return out;
}

namespace {

bool faces_connected(const SquareComplex& x, const std::vector<int>& faces) {
  if (faces.empty()) return false;
  std::vector<int> parent(x.num_vertices);
  for (int v = 0; v < x.num_vertices; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int f : faces)
    for (const Slot& s : x.faces[f].walk) parent[find(x.tail(s))] = find(x.head(s));
  const int root = find(x.tail(x.faces[faces.front()].walk[0]));
  for (int f : faces)
    if (find(x.tail(x.faces[f].walk[0])) != root) return false;
  return true;
}

std::set<int> vertices_of(const SquareComplex& x, const std::vector<int>& faces) {
  std::set<int> out;
  for (int f : faces)
    for (const Slot& s : x.faces[f].walk) out.insert(x.tail(s));
  return out;
}

}  // namespace

std::vector<std::string> validate_legs(const DiagramWithLegs& d) {
  std::vector<std::string> problems;
  const SquareComplex& x = d.ambient;
  std::vector<int> deg(x.edges.size(), 0);
  for (int f : d.disc_faces)
    for (const Slot& s : x.faces[f].walk) ++deg[s.edge];
  std::set<int> external;
  for (int f : d.disc_faces)
    for (const Slot& s : x.faces[f].walk)
      if (deg[s.edge] == 1) {
        external.insert(x.edges[s.edge].src);
        external.insert(x.edges[s.edge].dst);
      }
  std::vector<int> legs_on_edge(x.edges.size(), 0);
  for (std::size_t i = 0; i < d.legs.size(); ++i) {
    const auto& leg = d.legs[i];
    const std::string tag = "leg " + std::to_string(i);
    if (static_cast<int>(leg.size()) > d.k) problems.push_back(tag + " exceeds the size bound");
    if (!faces_connected(x, leg)) problems.push_back(tag + " is not connected");
    const auto verts = vertices_of(x, leg);
    if (std::none_of(verts.begin(), verts.end(), [&](int v) { return external.count(v) > 0; }))
      problems.push_back(tag + " contains no external vertex of the disc basis");
    std::set<int> edges;
    for (int f : leg)
      for (const Slot& s : x.faces[f].walk) edges.insert(s.edge);
    for (int e : edges) ++legs_on_edge[e];
  }
  for (std::size_t e = 0; e < legs_on_edge.size(); ++e)
    if (legs_on_edge[e] > 2) problems.push_back("edge " + std::to_string(e) + " lies in more than two legs");
  return problems;
}

DiagramWithHorns add_horns(const SquareComplex& x, const std::vector<int>& base_faces) {
  const StrongAdjacency adj = find_strongly_adjacent(x);
  std::set<int> base(base_faces.begin(), base_faces.end());
  for (const StrongPair& v : adj.violations)
    if (base.count(v.first) || base.count(v.second))
      throw HornError("faces " + std::to_string(v.first) + " and " + std::to_string(v.second) +
                      " share three or more edges");

  std::map<int, int> partner;
  for (const StrongPair& p : adj.pairs) {
    for (auto [a, b] : {std::pair{p.first, p.second}, std::pair{p.second, p.first}}) {
      auto [it, fresh] = partner.emplace(a, b);
      if (!fresh && it->second != b)
        throw HornError("face " + std::to_string(a) + " is strongly adjacent to two faces");
    }
  }

  std::vector<int> deg(x.edges.size(), 0);
  for (int f : base_faces)
    for (const Slot& s : x.faces[f].walk) ++deg[s.edge];

  DiagramWithHorns out;
  out.base_faces = base_faces;
  std::set<int> horn_edges;
  for (int f : base_faces) {
    auto it = partner.find(f);
    if (it == partner.end() || base.count(it->second)) continue;
    const bool on_boundary = std::any_of(x.faces[f].walk.begin(), x.faces[f].walk.end(),
                                         [&](const Slot& s) { return deg[s.edge] == 1; });
    if (!on_boundary) continue;
    const int g = it->second;
    if (std::any_of(out.horns.begin(), out.horns.end(), [&](const Horn& h) { return h.face == g; }))
      continue;
    std::set<int> edges;
    for (const Slot& s : x.faces[g].walk) edges.insert(s.edge);
    for (int e : edges)
      if (horn_edges.count(e))
        throw HornError("horns " + std::to_string(g) + " and another share edge " + std::to_string(e));
    horn_edges.insert(edges.begin(), edges.end());
    out.horns.push_back({g, f});
  }

  std::vector<int> all = base_faces;
  for (const Horn& h : out.horns) all.push_back(h.face);
  out.result = extract_faces(x, all);
  if (!find_strongly_adjacent(out.result.complex).violations.empty())
    throw HornError("gluing horns produced faces sharing three or more edges");
  return out;
}

}  // namespace sqm
