#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sqm/fixtures.hpp"
#include "sqm/walls.hpp"

using namespace sqm;

namespace {

std::pair<long, long> coords(const Word& w) {
  long x = 0, y = 0;
  for (const Letter& l : w) (l.gen == 1 ? x : y) += l.sign;
  return {x, y};
}

// The dual line of an edge: horizontal edges (x, y)-(x+1, y) lie on the line
// "x = c + 1/2", keyed (0, c); vertical ones on "y = c + 1/2", keyed (1, c).
std::pair<int, long> line_of(const Fixture& f, int e) {
  const auto a = coords(f.representative[f.complex.edges[e].src]);
  const auto b = coords(f.representative[f.complex.edges[e].dst]);
  if (a.second == b.second) return {0, std::min(a.first, b.first)};
  return {1, std::min(a.second, b.second)};
}

const Hypergraph& through(const std::vector<Hypergraph>& hs, int edge) {
  for (const Hypergraph& h : hs)
    if (std::binary_search(h.vertices.begin(), h.vertices.end(), edge)) return h;
  throw std::logic_error("edge not on any hypergraph");
}

std::set<int> named(const Fixture& f, std::initializer_list<const char*> names) {
  std::set<int> out;
  for (const char* n : names) out.insert(f.edges.at(n));
  return out;
}

std::set<std::tuple<int, int, int>> gamma_set(const Hypergraph& h) {
  std::set<std::tuple<int, int, int>> out;
  for (const GammaEdge& g : h.edges) out.insert({std::min(g.a, g.b), std::max(g.a, g.b), g.face});
  return out;
}

// First Γ-edge of h with the X-edge e as an end.
int touching(const Hypergraph& h, int e) {
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    if (h.edges[i].a == e || h.edges[i].b == e) return static_cast<int>(i);
  throw std::logic_error("edge not on the hypergraph");
}

const Fixture& z2() {
  static const Fixture f = z2_fixture(5);
  return f;
}

}  // namespace

TEST_CASE("painting") {
  const PaintedComplex plain = paint(z2().complex);
  for (const Face& f : plain.base.faces) CHECK(f.color == Color::regular);
  CHECK(plain.pairs.empty());
  CHECK(find_strongly_adjacent(z2().complex).pairs.empty());

  const Fixture sp = special_pairs_fixture();
  const PaintedComplex p = paint(sp.complex);
  CHECK(p.base.faces[sp.faces.at("pair3")].color == Color::red);
  CHECK(p.base.faces[sp.faces.at("pair7")].color == Color::blue);
  CHECK(p.base.faces[sp.faces.at("loose3")].color == Color::red);
  CHECK(p.base.faces[sp.faces.at("loose7")].color == Color::blue);
  CHECK(p.partner[sp.faces.at("pair3")] == sp.faces.at("pair7"));
  CHECK(p.partner[sp.faces.at("loose3")] == -1);

  // 7 is blue in the first pair and red in the second
  ComplexBuilder b;
  testing::strong_pair(b, 3, 7);
  testing::strong_pair(b, 7, 9);
  CHECK_THROWS_AS(paint(b.take()), PaintingConflict);

  // equal keys
  ComplexBuilder e;
  testing::strong_pair(e, 4, 4);
  SquareComplex same = e.take();
  same.faces[1].start = same.faces[0].start;
  CHECK_THROWS_AS(paint(same), PaintingConflict);

  // two copies of the (3,7) pair are consistent
  ComplexBuilder ok;
  testing::strong_pair(ok, 3, 7);
  testing::strong_pair(ok, 3, 7);
  CHECK_NOTHROW(paint(ok.take()));
}

TEST_CASE("gamma edges per face") {
  const Fixture f = comparison_fixture();
  const PaintedComplex p = paint(f.complex);
  for (HypergraphKind k : {HypergraphKind::standard, HypergraphKind::red, HypergraphKind::blue})
    for (std::size_t face = 0; face < p.base.faces.size(); ++face) {
      const auto es = face_gamma_edges(p, static_cast<int>(face), k);
      REQUIRE(es.size() == 2);
      std::set<int> slots{es[0].slot_a, es[0].slot_b, es[1].slot_a, es[1].slot_b};
      CHECK(slots.size() == 4);
      const Face& fc = p.base.faces[face];
      const bool turns = (k == HypergraphKind::red && fc.color == Color::red) ||
                         (k == HypergraphKind::blue && fc.color == Color::blue);
      for (const GammaEdge& g : es) {
        const int gap = (g.slot_b - g.slot_a + 4) % 4;
        if (turns)
          CHECK(gap % 2 == 1);  // adjacent sides
        else
          CHECK(gap == 2);  // opposite sides
      }
    }
}

TEST_CASE("comparison fixture: hypergraphs through the left square") {
  const Fixture f = comparison_fixture();
  const PaintedComplex p = paint(f.complex);
  CHECK(p.base.faces[f.faces.at("red")].color == Color::red);
  CHECK(p.base.faces[f.faces.at("blue")].color == Color::blue);
  const int L0 = f.edges.at("L0");

  const auto std_h = through(trace_hypergraphs(p, HypergraphKind::standard), L0);
  const auto red_h = through(trace_hypergraphs(p, HypergraphKind::red), L0);
  const auto blue_h = through(trace_hypergraphs(p, HypergraphKind::blue), L0);
  auto as_set = [](const Hypergraph& h) { return std::set<int>(h.vertices.begin(), h.vertices.end()); };
  CHECK(as_set(std_h) == named(f, {"L0", "Rl", "D1", "Bt", "top"}));
  CHECK(as_set(red_h) == named(f, {"L0", "Rl", "D2", "Br", "Rfar"}));
  CHECK(as_set(blue_h) == named(f, {"L0", "Rl", "D1", "Br", "Rfar"}));

  // the red hypergraph turns inside the red cell onto the distinguished D2
  const int L = f.faces.at("L"), red = f.faces.at("red"), blue = f.faces.at("blue"), R = f.faces.at("R");
  auto e = [&](const char* a, const char* b, int face) {
    const int x = f.edges.at(a), y = f.edges.at(b);
    return std::tuple{std::min(x, y), std::max(x, y), face};
  };
  CHECK(gamma_set(red_h) == std::set{e("L0", "Rl", L), e("Rl", "D2", red), e("D2", "Br", blue), e("Br", "Rfar", R)});
  CHECK(gamma_set(blue_h) == std::set{e("L0", "Rl", L), e("Rl", "D1", red), e("D1", "Br", blue), e("Br", "Rfar", R)});
  const int T = f.faces.at("T");
  CHECK(gamma_set(std_h) == std::set{e("L0", "Rl", L), e("Rl", "D1", red), e("D1", "Bt", blue), e("Bt", "top", T)});
}

TEST_CASE("single square") {
  ComplexBuilder b;
  b.square(b.vertex(), b.vertex(), b.vertex(), b.vertex());
  const PaintedComplex p = paint(b.take());
  const auto hs = trace_hypergraphs(p, HypergraphKind::standard);
  REQUIRE(hs.size() == 2);
  for (const Hypergraph& h : hs) {
    CHECK(is_embedded_tree(h).tree);
    const Components c = complement_components(p.base, h);
    CHECK(c.count == 2);
    CHECK_FALSE(c.boundary_open);
  }
}

TEST_CASE("Z2 hypergraphs are coordinate lines") {
  const Fixture& f = z2();
  CHECK(f.complex.num_vertices == 61);
  const PaintedComplex p = paint(f.complex);
  const auto hs = trace_hypergraphs(p, HypergraphKind::standard);
  CHECK(hs.size() == 20);
  std::set<std::pair<int, long>> lines;
  std::vector<int> hits(f.complex.edges.size(), 0);
  for (const Hypergraph& h : hs) {
    const auto line = line_of(f, h.vertices.front());
    for (int e : h.vertices) {
      CHECK(line_of(f, e) == line);
      ++hits[e];
    }
    lines.insert(line);
    CHECK(is_embedded_tree(h).tree);
    // side map agrees with the coordinate predicate
    const Components c = complement_components(p.base, h);
    CHECK(c.count == 2);
    CHECK(c.boundary_open);
    for (int v = 0; v < f.complex.num_vertices; ++v)
      for (int u = 0; u < f.complex.num_vertices; ++u) {
        const auto a = coords(f.representative[v]), b = coords(f.representative[u]);
        const long ca = line.first == 0 ? a.first : a.second, cb = line.first == 0 ? b.first : b.second;
        CHECK((c.side[v] == c.side[u]) == ((ca <= line.second) == (cb <= line.second)));
      }
  }
  CHECK(lines.size() == hs.size());
  for (int h : hits) CHECK(h == 1);  // every edge dual to exactly one line

  // Γ-vertex degree = number of incident faces
  const auto deg = f.complex.edge_degrees();
  for (const Hypergraph& h : hs)
    for (int e : h.vertices) {
      int d = 0;
      for (const GammaEdge& g : h.edges) d += (g.a == e) + (g.b == e);
      CHECK(d == deg[e]);
    }

  for (HypergraphKind k : {HypergraphKind::red, HypergraphKind::blue}) {
    const auto ks = trace_hypergraphs(p, k);
    REQUIRE(ks.size() == hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) CHECK(gamma_set(ks[i]) == gamma_set(hs[i]));
  }
}

TEST_CASE("Z2 wall distance is the l1 distance") {
  const Fixture& f = z2();
  const PaintedComplex p = paint(f.complex);
  const WallDecomposition w = build_walls(p);
  CHECK(w.walls.size() == 20);
  const int o = f.vertices.at("(0,0)"), t = f.vertices.at("(3,2)");
  CHECK(wall_distance(w, o, t) == 5);
  CHECK(wall_distance(w, t, t) == 0);
  for (int v = 0; v < f.complex.num_vertices; ++v)
    for (int u = 0; u < f.complex.num_vertices; ++u) {
      const auto a = coords(f.representative[v]), b = coords(f.representative[u]);
      CHECK(wall_distance(w, v, u) == std::abs(a.first - b.first) + std::abs(a.second - b.second));
    }
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < f.complex.num_vertices; ++v)
    for (int u = v + 1; u < f.complex.num_vertices; ++u) pairs.push_back({v, u});
  const LowerBoundReport r = check_wall_lower_bound(w, p.base, pairs);
  CHECK(r.failed == 0);
  CHECK(r.indeterminate == 0);
  for (const LowerBoundRow& row : r.rows) {
    CHECK(row.d_wall == row.d_edge);
    CHECK(row.bound == row.d_edge / 15);
  }
  const std::string csv = lower_bound_csv(r);
  CHECK(csv.rfind("x,y,d_edge,d_wall,bound,status\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(pairs.size()) + 1);

  // threads do not change the decomposition
  const WallDecomposition w4 = build_walls(p, {HypergraphKind::standard, HypergraphKind::red, HypergraphKind::blue}, 4);
  REQUIRE(w4.walls.size() == w.walls.size());
  for (std::size_t i = 0; i < w.walls.size(); ++i) CHECK(w4.walls[i].vertices == w.walls[i].vertices);
}

TEST_CASE("Z2 windows pass on every geodesic of length 21") {
  const Fixture f = z2_fixture(11);
  const PaintedComplex p = paint(f.complex);
  const WallDecomposition w = build_walls(p, {HypergraphKind::standard});
  const int a = f.vertices.at("(-5,-5)"), b = f.vertices.at("(5,6)");
  const auto path = shortest_path(p.base, a, b);
  REQUIRE(path.size() == 21);
  const WindowReport rep = check_window_crossing(p.base, w, path);
  CHECK(rep.pass);
  CHECK(rep.windows.size() == 7);
  const WindowSweep s = sweep_window_crossing(p.base, w, a, b);
  CHECK(s.geodesics == 352716);  // C(21, 10)
  CHECK(s.failing == 0);
  CHECK(s.indeterminate == 0);
  CHECK_THROWS_AS(check_window_crossing(p.base, w, shortest_path(p.base, a, f.vertices.at("(5,5)"))),
                  std::invalid_argument);
}

TEST_CASE("staircase: standard walls do not separate the ends") {
  const Fixture f = staircase_fixture(20);
  const PaintedComplex p = paint(f.complex);
  const WallDecomposition w = build_walls(p, {HypergraphKind::standard});
  const int x = f.vertices.at("x"), y = f.vertices.at("y");
  CHECK(bfs_distances(p.base, x)[y] == 20);
  CHECK(wall_distance(w, x, y) == 0);
  const LowerBoundReport r = check_wall_lower_bound(w, p.base, {{x, y}});
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].status == Verdict::fail);
  CHECK(r.rows[0].bound == 1);
  // every standard wall meets the path twice or not at all
  for (const Hypergraph& h : w.walls) {
    int crossings = 0;
    for (const Slot& s : f.path) crossings += std::binary_search(h.vertices.begin(), h.vertices.end(), s.edge);
    CHECK(crossings % 2 == 0);
  }

  const Fixture g = staircase_fixture(22);
  const PaintedComplex q = paint(g.complex);
  const WallDecomposition wg = build_walls(q, {HypergraphKind::standard});
  const WindowReport rep = check_window_crossing(q.base, wg, g.path);
  CHECK_FALSE(rep.pass);
  CHECK(rep.failed == static_cast<int>(rep.windows.size()));

  // colored walls do separate the ends
  const WallDecomposition all = build_walls(p);
  CHECK(wall_distance(all, x, y) > 0);
}

TEST_CASE("annulus: cycle witness and cornerless collared diagram") {
  const Fixture f = annulus_fixture(4);
  const PaintedComplex p = paint(f.complex);
  const auto hs = trace_hypergraphs(p, HypergraphKind::standard);
  const Hypergraph& ring = through(hs, f.edges.at("s0"));
  const TreeCheck t = is_embedded_tree(ring);
  CHECK_FALSE(t.tree);
  CHECK(t.witness == TreeCheck::Witness::cycle);
  CHECK(t.cycle.size() == 4);
  const CollaredDiagram d = extract_collared_diagram(p, ring, t);
  CHECK(d.cornerless);
  CHECK(d.base_faces.size() == 4);
  CHECK(d.k == 4);
  CHECK(d.generalized_boundary % 2 == 0);
  CHECK(d.generalized_boundary == 8);
  CHECK(d.broken.empty());
  const Components c = complement_components(p.base, ring);
  CHECK(c.count == 2);
  CHECK(c.side[f.vertices.at("inner")] != c.side[f.vertices.at("outer")]);

  int trees = 0;
  for (const Hypergraph& h : hs) {
    const TreeCheck tc = is_embedded_tree(h);
    if (!tc.tree) continue;
    ++trees;
    CHECK_THROWS_AS(extract_collared_diagram(p, h, tc), std::invalid_argument);
  }
  CHECK(trees == 4);  // the radial hypergraphs
}

TEST_CASE("repeated face: cornered collared diagram") {
  const Fixture f = repeated_face_fixture();
  const PaintedComplex p = paint(f.complex);
  const Hypergraph h = through(trace_hypergraphs(p, HypergraphKind::standard), f.edges.at("left"));
  const TreeCheck t = is_embedded_tree(h);
  CHECK_FALSE(t.tree);
  CHECK(t.witness == TreeCheck::Witness::repeated_face);
  CHECK(t.repeated_face == f.faces.at("F0"));
  const CollaredDiagram d = extract_collared_diagram(p, h, t);
  CHECK_FALSE(d.cornerless);
  CHECK(d.corner == f.faces.at("F0"));
  CHECK(d.generalized_boundary % 2 == 0);
}

TEST_CASE("carrier classes") {
  const Fixture f = comparison_fixture();
  const PaintedComplex p = paint(f.complex);
  const int L0 = f.edges.at("L0"), red = f.faces.at("red");

  const Hypergraph r = through(trace_hypergraphs(p, HypergraphKind::red), L0);
  const auto rc = classify_carrier(p, r.edges);
  for (std::size_t i = 0; i < r.edges.size(); ++i)
    if (r.edges[i].face == red) CHECK(rc[i] == CarrierClass::divided_tile);

  // standard tracing goes straight through both cells of the pair
  const Hypergraph s = through(trace_hypergraphs(p, HypergraphKind::standard), L0);
  const auto path = gamma_path(s, touching(s, L0), touching(s, f.edges.at("top")));
  std::vector<GammaEdge> seg;
  for (int i : path) seg.push_back(s.edges[i]);
  const auto sc = classify_carrier(p, seg);
  int divided = 0;
  for (CarrierClass c : sc) divided += c == CarrierClass::divided_tile;
  CHECK(divided == 2);

  // a red segment that stops inside the red cell leaves its partner untouched
  int in_red = -1;
  for (std::size_t i = 0; i < r.edges.size(); ++i)
    if (r.edges[i].face == red) in_red = static_cast<int>(i);
  const auto upto = gamma_path(r, touching(r, L0), in_red);
  std::vector<GammaEdge> short_seg;
  for (int i : upto) short_seg.push_back(r.edges[i]);
  const auto sh = classify_carrier(p, short_seg);
  CHECK(sh.back() == CarrierClass::isolated_distinguished);
  CHECK(sh.front() == CarrierClass::regular_tile);

  // all-regular carriers
  const PaintedComplex z = paint(z2().complex);
  const auto hs = trace_hypergraphs(z, HypergraphKind::standard);
  for (CarrierClass c : classify_carrier(z, hs[0].edges)) CHECK(c == CarrierClass::regular_tile);
}

TEST_CASE("house diagrams") {
  const Fixture f = house_fixture();
  const PaintedComplex p = paint(f.complex);
  const Hypergraph h = through(trace_hypergraphs(p, HypergraphKind::standard), f.edges.at("wall"));
  const auto m = find_house_diagrams(p, f.path, h);
  REQUIRE(m.size() == 1);
  CHECK(m[0].length == 2);
  CHECK(m[0].conforming);
  CHECK(m[0].roof == f.faces.at("roof"));
  CHECK(std::set{m[0].left, m[0].right} == std::set{f.faces.at("A"), f.faces.at("B")});

  const Fixture g = nonconforming_house_fixture();
  const PaintedComplex q = paint(g.complex);
  const Hypergraph hg = through(trace_hypergraphs(q, HypergraphKind::standard), g.edges.at("wall"));
  const auto mg = find_house_diagrams(q, g.path, hg);
  REQUIRE(mg.size() == 1);
  CHECK(mg[0].length == 3);
  CHECK_FALSE(mg[0].conforming);

  // a path along the carrier boundary never leaves it
  std::vector<Slot> lo;
  int at = g.vertices.at("x");
  for (int step = 0; step < 3; ++step)
    for (std::size_t e = 0; e < q.base.edges.size(); ++e) {
      const Edge& ed = q.base.edges[e];
      const int other = ed.src == at ? ed.dst : ed.dst == at ? ed.src : -1;
      // along the tops of the squares: the next vertex is a square corner
      if (other != g.vertices.at("x") && other >= 0 && other < 8 && other > at) {
        lo.push_back({static_cast<int>(e), ed.src == at ? 1 : -1});
        at = other;
        break;
      }
    }
  REQUIRE(at == g.vertices.at("y"));
  CHECK(find_house_diagrams(q, lo, hg).empty());
}

TEST_CASE("two-collared diagrams") {
  const PaintedComplex z = paint(z2().complex);
  const auto hs = trace_hypergraphs(z, HypergraphKind::standard);
  for (std::size_t i = 0; i + 1 < hs.size(); i += 3) CHECK(find_two_collared(z, hs[i], hs[i + 1]).empty());
  CHECK_THROWS_AS(find_two_collared(z, hs[0], hs[0]), std::invalid_argument);

  const Fixture f = special_pairs_fixture();
  const PaintedComplex p = paint(f.complex);
  const int D1 = f.edges.at("D1");
  const Hypergraph r = through(trace_hypergraphs(p, HypergraphKind::red), D1);
  const Hypergraph b = through(trace_hypergraphs(p, HypergraphKind::blue), D1);
  const auto found = find_two_collared(p, r, b);
  REQUIRE_FALSE(found.empty());
  for (const TwoCollared& t : found) {
    CHECK(t.strongly_adjacent_pair);
    CHECK(std::set<int>(t.faces.begin(), t.faces.end()) == std::set{f.faces.at("pair3"), f.faces.at("pair7")});
  }
}

TEST_CASE("DOT export") {
  const PaintedComplex p = paint(comparison_fixture().complex);
  const std::string dot = hypergraphs_dot(trace_hypergraphs(p, HypergraphKind::red));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("red") != std::string::npos);
}
