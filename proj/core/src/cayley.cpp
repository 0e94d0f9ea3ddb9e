#include "sqm/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "sqm/parallel.hpp"

namespace sqm {

int WordProblemBudget::area_cap(int boundary, double density) const {
  if (area == Area::quadratic) return (boundary * boundary + 15) / 16;
  const double slack = 1.0 - 2.0 * density - eps0;
  if (slack <= 0) throw std::invalid_argument("area cap needs d + eps0 < 1/2");
  return static_cast<int>(std::ceil(boundary / (4.0 * slack) - 1e-9));
}

WordProblemBudget default_budget(const Presentation& p) {
  WordProblemBudget b;
  if (p.relators == torus_presentation().relators) b.area = WordProblemBudget::Area::quadratic;
  return b;
}

std::string to_string(WordProblemResult::Status s) {
  switch (s) {
    case WordProblemResult::Status::equal: return "equal";
    case WordProblemResult::Status::distinct: return "distinct";
    case WordProblemResult::Status::undecided: return "undecided";
  }
  return "undecided";
}

Word canonical_cyclic(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  r = Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
  Word best = r;
  for (std::size_t k = 1; k < r.size(); ++k) {
    Word rot(r.begin() + static_cast<std::ptrdiff_t>(k), r.end());
    rot.insert(rot.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k));
    if (rot < best) best = std::move(rot);
  }
  return best;
}

namespace {

Relator form_of(const Presentation& p, int relator, bool inverted, int rotation) {
  const Relator& r = p.relators.at(relator);
  return (inverted ? r.inverse() : r).rotated(rotation);
}

// The word left after replacing the piece of length `length` at `position`
// with the inverted rest of `form`, before cyclic reduction.
Word substitute(const Word& w, const Relator& form, int position, int length) {
  const int n = static_cast<int>(w.size());
  Word out;
  for (int t = length; t < n; ++t) out.push_back(w[(position + t) % n]);
  for (int t = 3; t >= length; --t) out.push_back(form.letters[t].inverse());
  return out;
}

bool piece_matches(const Word& w, const Relator& form, int position, int length) {
  const int n = static_cast<int>(w.size());
  if (length > n) return false;
  for (int t = 0; t < length; ++t)
    if (!(w[(position + t) % n] == form.letters[t])) return false;
  return true;
}

std::string key_of(const Word& w) {
  std::string s(w.size(), '\0');
  for (std::size_t i = 0; i < w.size(); ++i) s[i] = static_cast<char>(w[i].code() + 1);
  return s;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Word apply_step(const Presentation& p, const RewriteStep& s) {
  const Relator form = form_of(p, s.relator, s.inverted, s.rotation);
  if (s.length < 1 || s.length > 4 || !piece_matches(s.before, form, s.position, s.length))
    throw std::invalid_argument("rewrite step does not match its word");
  return canonical_cyclic(substitute(s.before, form, s.position, s.length));
}

Abelianization::Abelianization(const Presentation& p) : rank_(p.rank) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const Relator& r : p.relators) {
    std::vector<std::int64_t> v(rank_, 0);
    for (const Letter& x : r.letters) v[x.gen - 1] += x.sign;
    rows.push_back(v);
  }
  std::size_t top = 0;
  for (int col = 0; col < rank_ && top < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        const std::int64_t q = rows[i][col] / rows[top][col];
        for (int c = 0; c < rank_; ++c) rows[i][c] -= q * rows[top][c];
        clean = clean && rows[i][col] == 0;
      }
      if (clean) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0)
      for (auto& x : rows[top]) x = -x;
    for (std::size_t i = 0; i < top; ++i) {
      const std::int64_t q = floor_div(rows[i][col], rows[top][col]);
      for (int c = 0; c < rank_; ++c) rows[i][c] -= q * rows[top][c];
    }
    pivot_.push_back(col);
    ++top;
  }
  rows.resize(top);
  rows_ = std::move(rows);
}

std::vector<std::int64_t> Abelianization::image(const Word& w) const {
  std::vector<std::int64_t> v(rank_, 0);
  for (const Letter& x : w) v[x.gen - 1] += x.sign;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int p = pivot_[i];
    const std::int64_t q = floor_div(v[p], rows_[i][p]);
    if (q == 0) continue;
    for (int c = 0; c < rank_; ++c) v[c] -= q * rows_[i][c];
  }
  return v;
}

WordProblemResult words_equal(const Presentation& p, const Word& u, const Word& v, const WordProblemBudget& budget) {
  WordProblemResult res;
  Word joined = u;
  const Word vi = inverse(v);
  joined.insert(joined.end(), vi.begin(), vi.end());
  res.boundary = canonical_cyclic(joined);
  if (res.boundary.empty()) {
    res.status = WordProblemResult::Status::equal;
    return res;
  }
  const Abelianization ab(p);
  if (ab.image(res.boundary) != std::vector<std::int64_t>(p.rank, 0)) {
    res.status = WordProblemResult::Status::distinct;
    return res;
  }
  const int cap = budget.area_cap(static_cast<int>(u.size() + v.size()), p.density);

  struct Form {
    Relator letters;
    int relator;
    bool inverted;
    int rotation;
  };
  std::vector<Form> forms;
  for (int i = 0; i < static_cast<int>(p.relators.size()); ++i)
    for (bool inv : {false, true})
      for (int k = 0; k < 4; ++k) forms.push_back({form_of(p, i, inv, k), i, inv, k});

  struct Node {
    Word word;
    int depth;
    std::string parent;
    RewriteStep step;
    bool expanded;
  };
  std::unordered_map<std::string, Node> seen;
  // Greedy order: shortest words first, then shallowest, then lexicographic.
  std::set<std::tuple<std::size_t, int, std::string>> open;
  const std::string root = key_of(res.boundary);
  seen.emplace(root, Node{res.boundary, 0, {}, {}, false});
  open.insert({res.boundary.size(), 0, root});

  auto unwind = [&](std::string key) {
    std::vector<RewriteStep> steps;
    while (key != root) {
      const Node& n = seen.at(key);
      steps.push_back(n.step);
      key = n.parent;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
  };

  while (!open.empty()) {
    const auto [len, depth, key] = *open.begin();
    open.erase(open.begin());
    Node& node = seen.at(key);
    node.expanded = true;
    const Word w = node.word;
    // One face closes a cyclically reduced word only when it reads a relator.
    if (depth + 1 == cap && w.size() != 4) continue;
    for (int pos = 0; pos < static_cast<int>(w.size()); ++pos)
      for (const Form& f : forms)
        for (int length = 1; length <= 4; ++length) {
          if (!piece_matches(w, f.letters, pos, length)) break;
          Word next = canonical_cyclic(substitute(w, f.letters, pos, length));
          const RewriteStep step{w, f.relator, f.inverted, f.rotation, pos, length};
          if (next.empty()) {
            res.derivation = unwind(key);
            res.derivation.push_back(step);
            res.status = WordProblemResult::Status::equal;
            res.states = seen.size();
            return res;
          }
          if (depth + 1 >= cap) continue;
          std::string nk = key_of(next);
          auto it = seen.find(nk);
          if (it == seen.end()) {
            if (seen.size() >= budget.hard_cap) {
              res.states = seen.size();
              res.status = WordProblemResult::Status::undecided;
              return res;
            }
            open.insert({next.size(), depth + 1, nk});
            seen.emplace(std::move(nk), Node{std::move(next), depth + 1, key, step, false});
          } else if (it->second.depth > depth + 1) {
            if (!it->second.expanded) open.erase({it->second.word.size(), it->second.depth, nk});
            it->second.depth = depth + 1;
            it->second.parent = key;
            it->second.step = step;
            it->second.expanded = false;
            open.insert({it->second.word.size(), depth + 1, nk});
          }
        }
  }
  res.states = seen.size();
  res.status = WordProblemResult::Status::distinct;
  return res;
}

CayleyBall build_ball(const Presentation& p, int r, const WordProblemBudget& budget, int threads) {
  if (r < 0) throw std::invalid_argument("radius must be non-negative");
  budget.area_cap(1, p.density);  // validates d + eps0 < 1/2
  const int letters = 2 * p.rank;
  const Abelianization ab(p);

  CayleyBall ball;
  ball.radius = r;
  std::vector<std::vector<int>> nbr;
  std::vector<bool> flagged;
  auto new_vertex = [&](Word w, int dist) {
    ball.representative.push_back(std::move(w));
    ball.distance.push_back(dist);
    nbr.emplace_back(letters, -1);
    flagged.push_back(false);
    return static_cast<int>(nbr.size()) - 1;
  };
  new_vertex({}, 0);

  std::vector<int> layer{0};
  for (int k = 1; k <= r; ++k) {
    std::vector<int> next;
    std::map<std::vector<std::int64_t>, std::vector<int>> by_image;
    for (int v : layer)
      for (int c = 0; c < letters; ++c) {
        if (nbr[v][c] >= 0) continue;
        // Relators have even length, so the Cayley graph is bipartite and an
        // unlinked neighbour of a layer-(k-1) vertex lies in layer k.
        Word w = ball.representative[v];
        w.push_back(Letter::from_code(c));
        const std::vector<std::int64_t> img = ab.image(w);
        std::vector<int>& same = by_image[img];
        std::vector<WordProblemResult::Status> verdict(same.size());
        parallel_for(same.size(), threads, [&](std::size_t i) {
          verdict[i] = words_equal(p, w, ball.representative[same[i]], budget).status;
        });
        ball.merge_checks += same.size();
        int match = -1;
        bool unsure = false;
        for (std::size_t i = 0; i < same.size() && match < 0; ++i) {
          if (verdict[i] == WordProblemResult::Status::equal) match = same[i];
          if (verdict[i] == WordProblemResult::Status::undecided) {
            unsure = true;
            ++ball.undecided;
            flagged[same[i]] = true;
          }
        }
        if (match < 0) {
          match = new_vertex(std::move(w), k);
          same.push_back(match);
          next.push_back(match);
        }
        if (nbr[match][c ^ 1] >= 0 && nbr[match][c ^ 1] != v) {
          // v and another vertex share this neighbour, so they are equal but
          // were kept apart: the capped search missed a derivation.
          ++ball.undecided;
          flagged[v] = flagged[match] = flagged[nbr[match][c ^ 1]] = true;
          continue;
        }
        if (unsure) {
          flagged[match] = true;
          flagged[v] = true;
        }
        nbr[v][c] = match;
        nbr[match][c ^ 1] = v;
      }
    layer = std::move(next);
  }
  if (ball.merge_checks > 0 &&
      static_cast<double>(ball.undecided) > budget.undecided_fraction * static_cast<double>(ball.merge_checks))
    throw BudgetExhausted(std::to_string(ball.undecided) + " of " + std::to_string(ball.merge_checks) +
                          " merge checks undecided");

  SquareComplex& x = ball.base;
  x.num_vertices = static_cast<int>(nbr.size());
  std::vector<std::vector<int>> edge_at(nbr.size(), std::vector<int>(letters, -1));
  for (int v = 0; v < x.num_vertices; ++v)
    for (int c = 1; c < letters; c += 2)
      if (nbr[v][c] >= 0) {
        const int e = x.add_edge(v, nbr[v][c]);
        edge_at[v][c] = e;
        edge_at[nbr[v][c]][c ^ 1] = e;
        ball.generator_of_edge.push_back(c / 2 + 1);
      }

  std::set<std::vector<std::pair<int, int>>> signatures;
  for (int v = 0; v < x.num_vertices; ++v)
    for (int i = 0; i < static_cast<int>(p.relators.size()); ++i)
      for (bool inv : {false, true})
        for (int k = 0; k < 4; ++k) {
          const Relator form = form_of(p, i, inv, k);
          std::array<Slot, 4> walk{};
          int at = v;
          bool closed = true;
          for (int j = 0; j < 4 && closed; ++j) {
            const int c = form.letters[j].code();
            if (edge_at[at][c] < 0) {
              closed = false;
              break;
            }
            walk[j] = {edge_at[at][c], (c & 1) ? 1 : -1};
            at = nbr[at][c];
          }
          if (!closed || at != v) continue;
          std::vector<std::pair<int, int>> best;
          for (int rev = 0; rev < 2; ++rev)
            for (int s = 0; s < 4; ++s) {
              std::vector<std::pair<int, int>> sig;
              for (int j = 0; j < 4; ++j) {
                const Slot& sl = rev ? walk[(s + 4 - j) % 4] : walk[(s + j) % 4];
                sig.push_back({sl.edge, rev ? -sl.dir : sl.dir});
              }
              if (best.empty() || sig < best) best = std::move(sig);
            }
          if (!signatures.insert(best).second) continue;
          // Slot j reads form letter j = relator letter (j + k) mod 4, or its
          // inverse letter 3 - (j + k) mod 4 when inverted.
          const int start = inv ? (3 - k + 4) % 4 : (4 - k) % 4;
          x.add_face(walk, i + 1, start, inv ? -1 : 1);
        }

  x.complete.assign(x.num_vertices, false);
  for (int v = 0; v < x.num_vertices; ++v) x.complete[v] = ball.distance[v] <= r - 2 && !flagged[v];
  return ball;
}

namespace {

struct GeodesicDag {
  int distance = -1;
  std::vector<std::vector<Slot>> forward;
};

GeodesicDag geodesic_dag(const SquareComplex& x, int from, int to) {
  auto bfs = [&](int s) {
    std::vector<std::vector<int>> adj(x.num_vertices);
    for (const Edge& e : x.edges) {
      adj[e.src].push_back(e.dst);
      adj[e.dst].push_back(e.src);
    }
    std::vector<int> d(x.num_vertices, -1);
    d[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      for (int w : adj[u])
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          q.push_back(w);
        }
    }
    return d;
  };
  const std::vector<int> df = bfs(from), dt = bfs(to);
  GeodesicDag g;
  g.distance = df[to];
  g.forward.resize(x.num_vertices);
  if (g.distance < 0) return g;
  for (std::size_t e = 0; e < x.edges.size(); ++e)
    for (int dir : {1, -1}) {
      const Slot s{static_cast<int>(e), dir};
      const int u = x.tail(s), w = x.head(s);
      if (df[u] >= 0 && dt[w] >= 0 && df[u] + 1 + dt[w] == g.distance) g.forward[u].push_back(s);
    }
  return g;
}

}  // namespace

void for_each_geodesic(const SquareComplex& x, int from, int to,
                       const std::function<bool(const std::vector<Slot>&)>& visit) {
  const GeodesicDag g = geodesic_dag(x, from, to);
  if (g.distance < 0) return;
  std::vector<Slot> path;
  bool go = true;
  auto dfs = [&](auto&& self, int v) -> void {
    if (!go) return;
    if (v == to) {
      go = visit(path);
      return;
    }
    for (const Slot& s : g.forward[v]) {
      path.push_back(s);
      self(self, x.head(s));
      path.pop_back();
      if (!go) return;
    }
  };
  dfs(dfs, from);
}

GeodesicSet geodesics(const SquareComplex& x, int from, int to, std::size_t cap) {
  GeodesicSet out;
  const GeodesicDag g = geodesic_dag(x, from, to);
  out.distance = g.distance;
  if (g.distance < 0) return out;
  // Path counts by vertex, saturating.
  std::vector<std::uint64_t> ways(x.num_vertices, 0);
  std::vector<int> rank(x.num_vertices, -1);
  {
    std::deque<int> q{from};
    rank[from] = 0;
    std::vector<int> seq;
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      seq.push_back(u);
      for (const Slot& s : g.forward[u])
        if (rank[x.head(s)] < 0) {
          rank[x.head(s)] = rank[u] + 1;
          q.push_back(x.head(s));
        }
    }
    ways[from] = 1;
    for (int u : seq)
      for (const Slot& s : g.forward[u]) {
        std::uint64_t& w = ways[x.head(s)];
        w = (w > UINT64_MAX - ways[u]) ? UINT64_MAX : w + ways[u];
      }
  }
  out.count = ways[to];
  for_each_geodesic(x, from, to, [&](const std::vector<Slot>& p) {
    if (out.paths.size() >= cap) return false;
    out.paths.push_back(p);
    return true;
  });
  out.truncated = out.paths.size() < out.count;
  return out;
}

}  // namespace sqm
