#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "helpers.hpp"
#include "sqm/cayley.hpp"
#include "sqm/fixtures.hpp"
#include "sqm/walls.hpp"

using namespace sqm;
using testing::rel;
using testing::w;

namespace {

// Cyclic reduction then least rotation, written out from scratch.
Word reference_canonical(Word x) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
      if (x[i].gen == x[i + 1].gen && x[i].sign == -x[i + 1].sign) {
        x.erase(x.begin() + i, x.begin() + i + 2);
        changed = true;
        break;
      }
    if (!changed && x.size() >= 2 && x.front().gen == x.back().gen && x.front().sign == -x.back().sign) {
      x.erase(x.begin());
      x.pop_back();
      changed = true;
    }
  }
  Word best = x;
  for (std::size_t r = 1; r < x.size(); ++r) {
    Word y(x.begin() + r, x.end());
    y.insert(y.end(), x.begin(), x.begin() + r);
    if (std::lexicographical_compare(y.begin(), y.end(), best.begin(), best.end())) best = y;
  }
  return best;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Replays a derivation without apply_step: each step's piece must occur at its
// position, the replacement is the inverted rest of the relator form, and the
// chain ends in the empty word.
bool verify_derivation(const Presentation& p, const Word& u, const Word& v, const WordProblemResult& r) {
  Word cur = reference_canonical(concat(u, inverse(v)));
  if (cur != r.boundary) return false;
  for (const RewriteStep& s : r.derivation) {
    if (s.before != cur) return false;
    Word form = p.relators.at(s.relator).word();
    if (s.inverted) form = inverse(form);
    std::rotate(form.begin(), form.begin() + s.rotation, form.end());
    const int n = static_cast<int>(cur.size());
    if (s.length < 1 || s.length > 4 || s.length > n) return false;
    for (int t = 0; t < s.length; ++t)
      if (cur[(s.position + t) % n] != form[t]) return false;
    Word next;
    for (int t = s.length; t < n; ++t) next.push_back(cur[(s.position + t) % n]);
    for (int t = 3; t >= s.length; --t) next.push_back(form[t].inverse());
    cur = reference_canonical(next);
  }
  return cur.empty();
}

std::pair<long, long> coords(const Word& x) {
  long a = 0, b = 0;
  for (const Letter& l : x) (l.gen == 1 ? a : b) += l.sign;
  return {a, b};
}

}  // namespace

TEST_CASE("canonical cyclic words") {
  CHECK(canonical_cyclic(w("a2 a1 a2^-1")) == w("a1"));
  CHECK(canonical_cyclic(w("a1 a1^-1")).empty());
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    Word x;
    const int len = static_cast<int>(rng() % 9);
    for (int k = 0; k < len; ++k) x.push_back(Letter::from_code(static_cast<int>(rng() % 6)));
    CHECK(canonical_cyclic(x) == reference_canonical(x));
  }
}

TEST_CASE("word problem examples") {
  const Presentation t = torus_presentation();
  const auto ab = words_equal(t, w("a1 a2"), w("a2 a1"), default_budget(t));
  CHECK(ab.status == WordProblemResult::Status::equal);
  CHECK(ab.derivation.size() == 1);
  CHECK(verify_derivation(t, w("a1 a2"), w("a2 a1"), ab));

  const auto same = words_equal(t, w("a1 a2 a1"), w("a1 a2 a1"));
  CHECK(same.status == WordProblemResult::Status::equal);
  CHECK(same.derivation.empty());

  const auto ab_dist = words_equal(t, w("a1"), w("a2"), default_budget(t));
  CHECK(ab_dist.status == WordProblemResult::Status::distinct);
  const Abelianization abel(t);
  CHECK(abel.image(w("a1")) != abel.image(w("a2")));
  CHECK(abel.image(w("a1 a2")) == abel.image(w("a2 a1")));
  CHECK(to_string(WordProblemResult::Status::undecided) == "undecided");
}

TEST_CASE("derivations re-check independently") {
  const Presentation t = torus_presentation();
  const WordProblemBudget b = default_budget(t);
  std::mt19937_64 rng(8);
  int equal = 0;
  for (int i = 0; i < 60; ++i) {
    // a word and a random shuffle of it are equal in Z^2
    Word u;
    for (int k = 0; k < 4; ++k) u.push_back(Letter::from_code(static_cast<int>(rng() % 4)));
    u = free_reduce(u);
    Word v = u;
    std::shuffle(v.begin(), v.end(), rng);
    v = free_reduce(v);
    const auto r = words_equal(t, u, v, b);
    REQUIRE(r.status == WordProblemResult::Status::equal);
    CHECK(verify_derivation(t, u, v, r));
    for (const RewriteStep& s : r.derivation) CHECK_NOTHROW(apply_step(t, s));
    ++equal;
  }
  CHECK(equal == 60);

  // a presentation with genuine cancellation between relators
  Presentation p;
  p.rank = 3;
  p.density = 0.3;  // area cap 2 for boundary 2
  p.relators = {rel("a1 a2 a3 a1"), rel("a1 a2 a3 a2")};
  const auto r = words_equal(p, w("a1"), w("a2"));
  REQUIRE(r.status == WordProblemResult::Status::equal);
  CHECK(verify_derivation(p, w("a1"), w("a2"), r));

  RewriteStep bad = r.derivation.front();
  bad.position = (bad.position + 1) % static_cast<int>(bad.before.size());
  if (bad.before.size() > 1 && bad.before[0] != bad.before[1]) CHECK_THROWS(apply_step(p, bad));
}

TEST_CASE("budget") {
  WordProblemBudget b;
  CHECK(b.area_cap(8, 0.2) == static_cast<int>(std::ceil(8 / (4 * (1 - 0.4 - 0.05)))));
  CHECK_THROWS(b.area_cap(8, 0.48));
  b.area = WordProblemBudget::Area::quadratic;
  CHECK(b.area_cap(8, 0.0) == 4);
  CHECK(default_budget(torus_presentation()).area == WordProblemBudget::Area::quadratic);
  CHECK(default_budget(sample_presentation(3, 0.2, 1)).area == WordProblemBudget::Area::linear);
}

TEST_CASE("Z2 balls") {
  const Presentation t = torus_presentation();
  CHECK(build_ball(t, 0, default_budget(t)).base.num_vertices == 1);
  CHECK(build_ball(t, 0, default_budget(t)).base.faces.empty());
  CayleyBall prev;
  for (int r = 0; r <= 6; ++r) {
    const CayleyBall ball = build_ball(t, r, default_budget(t));
    CAPTURE(r);
    CHECK(ball.base.num_vertices == 2 * r * r + 2 * r + 1);
    CHECK(ball.undecided == 0);
    // grid oracle: vertices, unit edges and unit squares inside |x|+|y| <= r
    std::set<std::pair<long, long>> pts;
    for (const Word& rep : ball.representative) pts.insert(coords(rep));
    CHECK(pts.size() == ball.representative.size());
    int edges = 0, squares = 0;
    for (auto [x, y] : pts) {
      edges += pts.count({x + 1, y}) + pts.count({x, y + 1});
      squares += pts.count({x + 1, y}) && pts.count({x, y + 1}) && pts.count({x + 1, y + 1});
    }
    CHECK(static_cast<int>(ball.base.edges.size()) == edges);
    CHECK(static_cast<int>(ball.base.faces.size()) == squares);
    for (std::size_t v = 0; v < ball.representative.size(); ++v) {
      const auto [x, y] = coords(ball.representative[v]);
      CHECK(static_cast<long>(ball.representative[v].size()) == std::abs(x) + std::abs(y));
      CHECK(ball.distance[v] == std::abs(x) + std::abs(y));
      CHECK(ball.base.vertex_complete(static_cast<int>(v)) == (ball.distance[v] <= r - 2));
    }
    // edge v -> v·a_g
    for (std::size_t e = 0; e < ball.base.edges.size(); ++e) {
      const auto a = coords(ball.representative[ball.base.edges[e].src]);
      const auto b = coords(ball.representative[ball.base.edges[e].dst]);
      if (ball.generator_of_edge[e] == 1)
        CHECK(b == std::pair{a.first + 1, a.second});
      else
        CHECK(b == std::pair{a.first, a.second + 1});
    }
    // every face reads a relator form from its start
    for (const Face& f : ball.base.faces) {
      const Relator& rl = t.relators.at(f.label - 1);
      for (int j = 0; j < 4; ++j) {
        const int slot = f.orient > 0 ? (f.start + j) % 4 : ((f.start - j) % 4 + 4) % 4;
        const Slot& s = f.walk[slot];
        const int g = ball.generator_of_edge[s.edge];
        const int sign = s.dir * f.orient;
        CHECK(rl.letters[j] == Letter{g, sign});
      }
    }
    // monotone: the previous ball's representatives come first and unchanged
    if (r > 0)
      for (std::size_t v = 0; v < prev.representative.size(); ++v)
        CHECK(ball.representative[v] == prev.representative[v]);
    prev = ball;
  }
}

TEST_CASE("free ball") {
  for (int n = 1; n <= 3; ++n) {
    Presentation free;
    free.rank = n;
    const CayleyBall ball = build_ball(free, 2);
    CHECK(ball.base.num_vertices == 1 + 2 * n + 2 * n * (2 * n - 1));
    CHECK(ball.base.faces.empty());
  }
  // one relator of length 4 cannot close inside radius 2 unless it fits
  Presentation p;
  p.rank = 3;
  p.density = 0.1;
  p.relators = {rel("a1 a2 a3 a2")};
  const CayleyBall ball = build_ball(p, 2);
  // each rotation splits the relator into two halves of length 2, merging
  // four pairs of length-2 words; the four faces all pass through the identity
  CHECK(ball.base.num_vertices == 1 + 6 + 30 - 4);
  CHECK(ball.base.faces.size() == 4);
}

TEST_CASE("sampled balls are deterministic across thread counts") {
  const Presentation p = sample_presentation(3, 0.2, 2);
  const CayleyBall a = build_ball(p, 3, {}, 1), b = build_ball(p, 3, {}, 4);
  CHECK(a.representative == b.representative);
  CHECK(a.base.faces.size() == b.base.faces.size());
  CHECK(a.base.validate().empty());
  for (std::size_t v = 0; v < a.representative.size(); ++v)
    CHECK(static_cast<int>(a.representative[v].size()) == a.distance[v]);
}

TEST_CASE("geodesics") {
  const Fixture f = z2_fixture(4);
  const int o = f.vertices.at("(0,0)");
  const GeodesicSet g = geodesics(f.complex, o, f.vertices.at("(2,1)"));
  CHECK(g.distance == 3);
  CHECK(g.count == 3);
  CHECK(g.paths.size() == 3);
  CHECK_FALSE(g.truncated);
  for (const auto& path : g.paths) {
    int at = o;
    for (const Slot& s : path) {
      CHECK(f.complex.tail(s) == at);
      at = f.complex.head(s);
    }
    CHECK(at == f.vertices.at("(2,1)"));
  }
  const GeodesicSet self = geodesics(f.complex, o, o);
  CHECK(self.distance == 0);
  CHECK(self.count == 1);
  REQUIRE(self.paths.size() == 1);
  CHECK(self.paths[0].empty());
  CHECK(geodesics(f.complex, o, f.vertices.at("(1,0)")).distance == 1);

  const GeodesicSet many = geodesics(f.complex, f.vertices.at("(-2,-2)"), f.vertices.at("(2,2)"), 10);
  CHECK(many.count == 70);  // C(8, 4)
  CHECK(many.paths.size() == 10);
  CHECK(many.truncated);
  std::uint64_t visited = 0;
  for_each_geodesic(f.complex, f.vertices.at("(-2,-2)"), f.vertices.at("(2,2)"), [&](const std::vector<Slot>&) {
    ++visited;
    return true;
  });
  CHECK(visited == 70);
}
