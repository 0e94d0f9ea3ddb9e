#include "sqm/fixtures.hpp"

#include <stdexcept>

namespace sqm {

namespace {

Slot dart(ComplexBuilder& b, int u, int v) {
  const int e = b.edge(u, v);
  return {e, b.complex().edges[e].src == u ? 1 : -1};
}

std::string grid_name(long x, long y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

}  // namespace

Fixture z2_fixture(int radius) {
  Fixture f;
  f.name = "z2";
  f.presentation = torus_presentation();
  CayleyBall ball = build_ball(*f.presentation, radius, default_budget(*f.presentation));
  f.complex = std::move(ball.base);
  f.representative = std::move(ball.representative);
  for (std::size_t v = 0; v < f.representative.size(); ++v) {
    long x = 0, y = 0;
    for (const Letter& l : f.representative[v]) (l.gen == 1 ? x : y) += l.sign;
    f.vertices[grid_name(x, y)] = static_cast<int>(v);
  }
  return f;
}

Fixture staircase_fixture(int length) {
  if (length < 2 || length % 2 != 0) throw std::invalid_argument("staircase length must be even and positive");
  Fixture f;
  f.name = "staircase";
  ComplexBuilder b;
  const int squares = length / 2;
  int corner = b.vertex();
  f.vertices["x"] = corner;
  for (int i = 0; i < squares; ++i) {
    const int right = b.vertex(), top = b.vertex(), mid = b.vertex(), next = b.vertex();
    f.faces["lower" + std::to_string(i)] = b.square(corner, right, mid, top, 1);
    f.faces["upper" + std::to_string(i)] = b.square(right, next, top, mid, 2);
    f.path.push_back(dart(b, corner, right));
    f.path.push_back(dart(b, right, next));
    corner = next;
  }
  f.vertices["y"] = corner;
  f.complex = b.take();
  return f;
}

Fixture comparison_fixture() {
  Fixture f;
  f.name = "comparison";
  ComplexBuilder b;
  const int A = b.vertex(), B = b.vertex(), C = b.vertex(), D = b.vertex();
  const int E = b.vertex(), F = b.vertex(), G = b.vertex(), H = b.vertex();
  const int M = b.vertex(), I = b.vertex(), J = b.vertex();
  f.faces["L"] = b.square(A, B, F, E);
  f.faces["red"] = b.square(B, C, M, F, 1);
  f.faces["blue"] = b.square(C, G, F, M, 2);
  f.faces["R"] = b.square(C, D, H, G);
  f.faces["T"] = b.square(F, G, J, I);
  f.edges["L0"] = b.edge(E, A);
  f.edges["Rl"] = b.edge(B, F);
  f.edges["D1"] = b.edge(C, M);
  f.edges["D2"] = b.edge(M, F);
  f.edges["Br"] = b.edge(C, G);
  f.edges["Bt"] = b.edge(G, F);
  f.edges["Rfar"] = b.edge(D, H);
  f.edges["top"] = b.edge(J, I);
  f.vertices["centre"] = M;
  f.complex = b.take();
  return f;
}

Fixture annulus_fixture(int k) {
  if (k < 3) throw std::invalid_argument("annulus needs at least 3 squares");
  Fixture f;
  f.name = "annulus";
  ComplexBuilder b;
  std::vector<int> inner(k), outer(k);
  for (int j = 0; j < k; ++j) inner[j] = b.vertex();
  for (int j = 0; j < k; ++j) outer[j] = b.vertex();
  for (int j = 0; j < k; ++j) {
    const int n = (j + 1) % k;
    f.faces["F" + std::to_string(j)] = b.square(inner[j], inner[n], outer[n], outer[j]);
  }
  for (int j = 0; j < k; ++j) f.edges["s" + std::to_string(j)] = b.edge(inner[j], outer[j]);
  f.vertices["inner"] = inner[0];
  f.vertices["outer"] = outer[0];
  f.complex = b.take();
  return f;
}

Fixture repeated_face_fixture() {
  Fixture f;
  f.name = "repeated-face";
  ComplexBuilder b;
  int bot[4], top[4];
  for (int& v : bot) v = b.vertex();
  for (int& v : top) v = b.vertex();
  // Column 4 is identified with the top side of F0: bottom-right = t0, top-right = t1.
  f.faces["F0"] = b.square(bot[0], bot[1], top[1], top[0]);
  f.faces["F1"] = b.square(bot[1], bot[2], top[2], top[1]);
  f.faces["F2"] = b.square(bot[2], bot[3], top[3], top[2]);
  f.faces["F3"] = b.square(bot[3], top[0], top[1], top[3]);
  f.edges["left"] = b.edge(top[0], bot[0]);
  f.edges["glued"] = b.edge(top[0], top[1]);
  f.complex = b.take();
  return f;
}

Fixture house_fixture() {
  Fixture f;
  f.name = "house";
  ComplexBuilder b;
  const int p00 = b.vertex(), p10 = b.vertex(), p20 = b.vertex();
  const int p01 = b.vertex(), p11 = b.vertex(), p21 = b.vertex(), apex = b.vertex();
  f.faces["A"] = b.square(p00, p10, p11, p01);
  f.faces["B"] = b.square(p10, p20, p21, p11);
  f.faces["roof"] = b.square(p01, p11, p21, apex);
  f.path = {dart(b, p01, apex), dart(b, apex, p21)};
  f.edges["wall"] = b.edge(p10, p11);
  f.vertices["x"] = p01;
  f.vertices["y"] = p21;
  f.complex = b.take();
  return f;
}

Fixture nonconforming_house_fixture() {
  Fixture f;
  f.name = "house-nonconforming";
  ComplexBuilder b;
  int lo[4], hi[4];
  for (int& v : lo) v = b.vertex();
  for (int& v : hi) v = b.vertex();
  for (int i = 0; i < 3; ++i) f.faces["S" + std::to_string(i)] = b.square(lo[i], lo[i + 1], hi[i + 1], hi[i]);
  const int q1 = b.vertex(), q2 = b.vertex();
  f.path = {dart(b, hi[0], q1), dart(b, q1, q2), dart(b, q2, hi[3])};
  f.edges["wall"] = b.edge(lo[0], hi[0]);
  f.vertices["x"] = hi[0];
  f.vertices["y"] = hi[3];
  f.complex = b.take();
  return f;
}

Fixture special_pairs_fixture() {
  Fixture f;
  f.name = "special-pairs";
  ComplexBuilder b;
  const int B = b.vertex(), C = b.vertex(), F = b.vertex(), G = b.vertex(), M = b.vertex();
  f.faces["pair3"] = b.square(B, C, M, F, 3);
  f.faces["pair7"] = b.square(C, G, F, M, 7);
  int s[4], t[4];
  for (int& v : s) v = b.vertex();
  for (int& v : t) v = b.vertex();
  f.faces["loose3"] = b.square(s[0], s[1], s[2], s[3], 3);
  f.faces["loose7"] = b.square(t[0], t[1], t[2], t[3], 7);
  f.edges["D1"] = b.edge(C, M);
  f.edges["D2"] = b.edge(M, F);
  f.complex = b.take();
  return f;
}

std::vector<std::string> fixture_names() {
  return {"z2", "staircase", "comparison", "annulus", "repeated-face", "house", "house-nonconforming", "special-pairs"};
}

Fixture make_fixture(const std::string& name, const FixtureParams& params) {
  if (name == "z2") return z2_fixture(params.radius);
  if (name == "staircase") return staircase_fixture(params.length);
  if (name == "comparison") return comparison_fixture();
  if (name == "annulus") return annulus_fixture(params.k);
  if (name == "repeated-face") return repeated_face_fixture();
  if (name == "house") return house_fixture();
  if (name == "house-nonconforming") return nonconforming_house_fixture();
  if (name == "special-pairs") return special_pairs_fixture();
  throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<PlanarFixture> planar_fixtures() {
  // '#' marks a unit cell; the first row is the top.
  const std::vector<std::pair<std::string, std::vector<std::string>>> shapes = {
      {"monomino", {"#"}},
      {"domino", {"##"}},
      {"bar3", {"###"}},
      {"bar5", {"#####"}},
      {"square2", {"##", "##"}},
      {"rect2x3", {"###", "###"}},
      {"square3", {"###", "###", "###"}},
      {"rect4x2", {"##", "##", "##", "##"}},
      {"L3", {"#.", "#.", "##"}},
      {"L4", {"#..", "#..", "###"}},
      {"J", {".#", ".#", "##"}},
      {"T", {"###", ".#."}},
      {"plus", {".#.", "###", ".#."}},
      {"S", {".##", "##."}},
      {"Z", {"##.", ".##"}},
      {"U", {"#.#", "###"}},
      {"stairs", {"#..", "##.", "###"}},
      {"comb", {"#.#.#", "#####"}},
      {"spiral", {"####", "...#", "##.#", "#..#", "####"}},
      {"thick-L", {"##..", "##..", "####", "####"}},
  };
  std::vector<PlanarFixture> out;
  for (const auto& [name, rows] : shapes) {
    ComplexBuilder b;
    std::map<std::pair<int, int>, int> at;
    std::vector<std::pair<double, double>> xy;
    auto vertex = [&](int x, int y) {
      auto [it, fresh] = at.emplace(std::pair{x, y}, 0);
      if (fresh) {
        it->second = b.vertex();
        xy.emplace_back(x, y);
      }
      return it->second;
    };
    const int h = static_cast<int>(rows.size());
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < static_cast<int>(rows[r].size()); ++c) {
        if (rows[r][c] != '#') continue;
        const int y = h - 1 - r;
        b.square(vertex(c, y), vertex(c + 1, y), vertex(c + 1, y + 1), vertex(c, y + 1));
      }
    out.push_back({name, Diagram::from_embedding(b.take(), xy)});
  }
  return out;
}

}  // namespace sqm
