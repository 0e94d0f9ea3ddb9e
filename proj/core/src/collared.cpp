#include <algorithm>
#include <map>
#include <set>

#include "sqm/walls.hpp"

namespace sqm {

namespace {

bool share_vertex(const GammaEdge& g, const GammaEdge& h) {
  return g.a == h.a || g.a == h.b || g.b == h.a || g.b == h.b;
}

// Faces of `faces` holding an edge of degree one inside the face set.
std::set<int> external_faces(const SquareComplex& x, const std::vector<int>& faces) {
  std::map<int, int> deg;
  for (int f : faces)
    for (const Slot& s : x.faces[f].walk) ++deg[s.edge];
  std::set<int> out;
  for (int f : faces)
    for (const Slot& s : x.faces[f].walk)
      if (deg[s.edge] == 1) out.insert(f);
  return out;
}

std::vector<int> faces_of(const std::vector<GammaEdge>& seg) {
  std::vector<int> out;
  for (const GammaEdge& g : seg) out.push_back(g.face);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::string to_string(CarrierClass c) {
  switch (c) {
    case CarrierClass::regular_tile: return "regular_tile";
    case CarrierClass::divided_tile: return "divided_tile";
    case CarrierClass::isolated_distinguished: return "isolated_distinguished";
  }
  return "regular_tile";
}

CollaredDiagram extract_collared_diagram(const PaintedComplex& x, const Hypergraph& h, const TreeCheck& witness) {
  if (witness.tree) throw std::invalid_argument("collared diagrams come from non-tree hypergraphs");
  CollaredDiagram out;
  const bool cycle = witness.witness == TreeCheck::Witness::cycle;
  const std::vector<int>& ids = cycle ? witness.cycle : witness.repeated_path;
  if (ids.size() < 2) throw ExtractionFailed("witness segment has fewer than two Γ-edges");
  for (int i : ids) {
    if (i < 0 || i >= static_cast<int>(h.edges.size())) throw ExtractionFailed("witness names an unknown Γ-edge");
    out.segment.push_back(h.edges[i]);
  }
  for (std::size_t i = 0; i + 1 < out.segment.size(); ++i)
    if (!share_vertex(out.segment[i], out.segment[i + 1])) throw ExtractionFailed("witness segment is not connected");
  if (cycle) {
    if (!share_vertex(out.segment.back(), out.segment.front())) throw ExtractionFailed("witness cycle does not close");
    out.cornerless = true;
    out.corner = out.segment.front().face;
  } else {
    out.corner = witness.repeated_face;
    if (out.segment.front().face != out.corner || out.segment.back().face != out.corner)
      throw ExtractionFailed("repeated-face path does not start and end in the repeated face");
  }

  out.base_faces = faces_of(out.segment);
  out.k = static_cast<int>(out.segment.size());
  try {
    out.horned = add_horns(x.base, out.base_faces);
  } catch (const HornError& e) {
    throw ExtractionFailed(std::string("adding horns failed: ") + e.what());
  }
  out.k_prime = static_cast<int>(out.horned.horns.size());
  out.generalized_boundary = generalized_boundary_length(out.horned.result.complex);

  const std::set<int> external = external_faces(x.base, out.base_faces);
  std::map<int, int> visits;
  for (const GammaEdge& g : out.segment) ++visits[g.face];
  if (!external.count(out.corner)) out.broken.push_back("(1) corner is not external");
  if (out.k < 2) out.broken.push_back("(2) segment shorter than 2");
  const int corner_visits = visits[out.corner];
  if (corner_visits != (out.cornerless ? 1 : 2)) out.broken.push_back("(3) corner holds a middle Γ-edge");
  for (int f : external)
    if (f != out.corner && visits[f] != 1) out.broken.push_back("(4) external face " + std::to_string(f) + " not passed once");
  for (const auto& [f, n] : visits)
    if (!external.count(f)) out.broken.push_back("(5) segment passes internal face " + std::to_string(f));
  return out;
}

std::vector<CarrierClass> classify_carrier(const PaintedComplex& x, const std::vector<GammaEdge>& segment) {
  std::set<int> on;
  for (const GammaEdge& g : segment) on.insert(g.face);
  std::vector<CarrierClass> out;
  for (const GammaEdge& g : segment) {
    const int p = x.partner[g.face];
    if (p < 0) out.push_back(CarrierClass::regular_tile);
    else if (on.count(p)) out.push_back(CarrierClass::divided_tile);
    else out.push_back(CarrierClass::isolated_distinguished);
  }
  return out;
}

std::vector<HouseMatch> find_house_diagrams(const PaintedComplex& x, const std::vector<Slot>& path, const Hypergraph& h) {
  const SquareComplex& c = x.base;
  std::set<int> car_vertices, car_edges;
  for (int f : h.carrier)
    for (const Slot& s : c.faces[f].walk) {
      car_vertices.insert(c.tail(s));
      car_edges.insert(s.edge);
    }
  const std::set<int> dual(h.vertices.begin(), h.vertices.end());
  std::vector<std::set<int>> faces_at(c.edges.size());
  for (std::size_t f = 0; f < c.faces.size(); ++f)
    for (const Slot& s : c.faces[f].walk) faces_at[s.edge].insert(static_cast<int>(f));
  const std::set<int> carrier(h.carrier.begin(), h.carrier.end());

  std::vector<int> on;  // path positions whose vertex lies in the carrier
  for (std::size_t i = 0; i <= path.size(); ++i) {
    const int v = i < path.size() ? c.tail(path[i]) : c.head(path.back());
    if (car_vertices.count(v)) on.push_back(static_cast<int>(i));
  }
  std::vector<HouseMatch> out;
  for (std::size_t t = 0; t + 1 < on.size(); ++t) {
    const int i = on[t], j = on[t + 1];
    if (j - i == 1 && car_edges.count(path[i].edge)) continue;
    HouseMatch m{i, j - i, false, -1, -1, -1};
    if (m.length == 2) {
      const int e0 = path[i].edge, e1 = path[i + 1].edge;
      for (int roof : faces_at[e0]) {
        if (!faces_at[e1].count(roof) || m.conforming) continue;
        std::vector<int> rest;
        for (const Slot& s : c.faces[roof].walk)
          if (s.edge != e0 && s.edge != e1) rest.push_back(s.edge);
        if (rest.size() != 2) continue;
        // The leg next to the path start goes to the left cell.
        const int v0 = c.tail(path[i]);
        if (c.edges[rest[0]].src != v0 && c.edges[rest[0]].dst != v0) std::swap(rest[0], rest[1]);
        for (int a : faces_at[rest[0]]) {
          if (!carrier.count(a) || m.conforming) continue;
          for (int b : faces_at[rest[1]]) {
            if (b == a || !carrier.count(b)) continue;
            bool shared = false;
            for (const Slot& s : c.faces[a].walk)
              shared = shared || (dual.count(s.edge) && faces_at[s.edge].count(b));
            if (!shared) continue;
            m.roof = roof;
            m.left = a;
            m.right = b;
            m.conforming = x.partner[roof] < 0 && x.partner[a] < 0 && x.partner[b] < 0;
            if (m.conforming) break;
          }
        }
      }
    }
    out.push_back(m);
  }
  return out;
}

std::vector<TwoCollared> find_two_collared(const PaintedComplex& x, const Hypergraph& h1, const Hypergraph& h2) {
  if (h1.vertices == h2.vertices && h1.edges == h2.edges)
    throw std::invalid_argument("two-collared search needs distinct hypergraphs");
  constexpr std::size_t kMaxFaces = 16;
  std::vector<int> common;
  std::set_intersection(h1.carrier.begin(), h1.carrier.end(), h2.carrier.begin(), h2.carrier.end(),
                        std::back_inserter(common));

  auto shortest = [](const Hypergraph& h, int f1, int f2) {
    std::vector<int> best;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      if (h.edges[i].face != f1) continue;
      for (std::size_t j = 0; j < h.edges.size(); ++j) {
        if (h.edges[j].face != f2) continue;
        std::vector<int> p = gamma_path(h, static_cast<int>(i), static_cast<int>(j));
        if (!p.empty() && (best.empty() || p.size() < best.size())) best = std::move(p);
      }
    }
    std::vector<GammaEdge> seg;
    for (int g : best) seg.push_back(h.edges[g]);
    return seg;
  };

  std::vector<TwoCollared> out;
  for (std::size_t i = 0; i < common.size(); ++i)
    for (std::size_t j = i + 1; j < common.size(); ++j) {
      const int c1 = common[i], c2 = common[j];
      TwoCollared w;
      w.corners = {c1, c2};
      w.segment1 = shortest(h1, c1, c2);
      w.segment2 = shortest(h2, c1, c2);
      if (w.segment1.empty() || w.segment2.empty()) continue;
      const std::vector<int> f1 = faces_of(w.segment1), f2 = faces_of(w.segment2);
      std::set_union(f1.begin(), f1.end(), f2.begin(), f2.end(), std::back_inserter(w.faces));
      if (w.faces.size() > kMaxFaces) continue;
      const std::set<int> external = external_faces(x.base, w.faces);
      if (!external.count(c1) || !external.count(c2)) continue;
      if (!std::all_of(w.faces.begin(), w.faces.end(), [&](int f) { return external.count(f) > 0; })) continue;
      std::vector<int> both;
      std::set_intersection(f1.begin(), f1.end(), f2.begin(), f2.end(), std::back_inserter(both));
      if (both != w.corners) continue;
      w.strongly_adjacent_pair = w.faces.size() == 2 && x.partner[c1] == c2;
      out.push_back(std::move(w));
    }
  return out;
}

}  // namespace sqm
