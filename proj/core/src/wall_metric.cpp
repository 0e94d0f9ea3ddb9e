#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "sqm/walls.hpp"

namespace sqm {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "pass";
}

namespace {

struct Bfs {
  std::vector<int> dist;
  std::vector<Slot> via;  // dart used to reach each vertex
};

Bfs run_bfs(const SquareComplex& x, int source) {
  std::vector<std::vector<Slot>> out(x.num_vertices);
  for (std::size_t e = 0; e < x.edges.size(); ++e) {
    out[x.edges[e].src].push_back({static_cast<int>(e), 1});
    out[x.edges[e].dst].push_back({static_cast<int>(e), -1});
  }
  Bfs b;
  b.dist.assign(x.num_vertices, -1);
  b.via.assign(x.num_vertices, Slot{-1, 0});
  b.dist[source] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const Slot& s : out[v]) {
      const int w = x.head(s);
      if (b.dist[w] >= 0) continue;
      b.dist[w] = b.dist[v] + 1;
      b.via[w] = s;
      queue.push_back(w);
    }
  }
  return b;
}

std::vector<Slot> unwind(const SquareComplex& x, const Bfs& b, int to) {
  std::vector<Slot> path;
  if (b.dist[to] < 0) return path;
  for (int v = to; b.dist[v] > 0; v = x.tail(b.via[v])) path.push_back(b.via[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<int> bfs_distances(const SquareComplex& x, int source) { return run_bfs(x, source).dist; }

std::vector<Slot> shortest_path(const SquareComplex& x, int from, int to) {
  return unwind(x, run_bfs(x, from), to);
}

LowerBoundReport check_wall_lower_bound(const WallDecomposition& w, const SquareComplex& x,
                                        const std::vector<std::pair<int, int>>& pairs) {
  LowerBoundReport r;
  std::map<int, Bfs> cache;
  for (const auto& [a, b] : pairs) {
    auto it = cache.find(a);
    if (it == cache.end()) it = cache.emplace(a, run_bfs(x, a)).first;
    const Bfs& bfs = it->second;
    LowerBoundRow row{a, b, bfs.dist[b], wall_distance(w, a, b), 0, Verdict::pass};
    if (row.d_edge < 0) {
      row.status = Verdict::indeterminate;
    } else {
      row.bound = row.d_edge / 15;
      if (row.d_wall < row.bound) {
        row.status = Verdict::fail;
        for (const Slot& s : unwind(x, bfs, b))
          for (int wall : w.walls_of_edge[s.edge])
            if (w.sides[wall].boundary_open) row.status = Verdict::indeterminate;
      }
    }
    ++(row.status == Verdict::pass ? r.passed : row.status == Verdict::fail ? r.failed : r.indeterminate);
    r.rows.push_back(row);
  }
  return r;
}

std::string lower_bound_csv(const LowerBoundReport& r) {
  std::ostringstream out;
  out << "x,y,d_edge,d_wall,bound,status\n";
  for (const LowerBoundRow& row : r.rows)
    out << row.x << ',' << row.y << ',' << row.d_edge << ',' << row.d_wall << ',' << row.bound << ','
        << to_string(row.status) << '\n';
  return out.str();
}

WindowReport check_window_crossing(const SquareComplex& x, const WallDecomposition& w, const std::vector<Slot>& path) {
  constexpr int kWindow = 15;
  constexpr int kMinLength = 21;
  const int length = static_cast<int>(path.size());
  if (length < kMinLength) throw std::invalid_argument("window check needs a geodesic of length >= 21");
  for (int i = 0; i + 1 < length; ++i)
    if (x.head(path[i]) != x.tail(path[i + 1])) throw std::invalid_argument("path is not an edge path");
  if (bfs_distances(x, x.tail(path.front()))[x.head(path.back())] != length)
    throw std::invalid_argument("path is not a geodesic");

  std::vector<int> crossings(w.walls.size(), 0);
  for (const Slot& s : path)
    for (int wall : w.walls_of_edge[s.edge]) ++crossings[wall];

  WindowReport report;
  for (int first = 0; first + kWindow <= length; ++first) {
    WindowResult res{first, Verdict::fail, -1};
    bool open = false;
    for (int p = first; p < first + kWindow && res.wall < 0; ++p)
      for (int wall : w.walls_of_edge[path[p].edge]) {
        if (crossings[wall] == 1) {
          res.wall = wall;
          break;
        }
        open = open || w.sides[wall].boundary_open;
      }
    if (res.wall >= 0) {
      res.status = Verdict::pass;
    } else if (open) {
      res.status = Verdict::indeterminate;
      ++report.indeterminate;
    } else {
      ++report.failed;
    }
    report.windows.push_back(res);
  }
  report.pass = report.failed == 0;
  return report;
}

WindowSweep sweep_window_crossing(const SquareComplex& x, const WallDecomposition& w, int from, int to) {
  constexpr int kWindow = 15;
  const std::vector<int> df = bfs_distances(x, from), dt = bfs_distances(x, to);
  const int length = df[to];
  if (length < 21) throw std::invalid_argument("window check needs a geodesic of length >= 21");
  std::vector<std::vector<Slot>> forward(x.num_vertices);
  for (std::size_t e = 0; e < x.edges.size(); ++e)
    for (int dir : {1, -1}) {
      const Slot s{static_cast<int>(e), dir};
      const int u = x.tail(s), v = x.head(s);
      if (df[u] >= 0 && dt[v] >= 0 && df[u] + 1 + dt[v] == length) forward[u].push_back(s);
    }

  WindowSweep sweep;
  std::vector<int> crossings(w.walls.size(), 0);
  std::vector<Slot> path;
  path.reserve(length);
  std::vector<int> once(length + 1, 0);
  auto leaf = [&] {
    ++sweep.geodesics;
    for (int p = 0; p < length; ++p) {
      bool hit = false;
      for (int wall : w.walls_of_edge[path[p].edge]) hit = hit || crossings[wall] == 1;
      once[p + 1] = once[p] + (hit ? 1 : 0);
    }
    bool failed = false, unresolved = false;
    for (int first = 0; first + kWindow <= length; ++first) {
      if (once[first + kWindow] - once[first] > 0) continue;
      bool open = false;
      for (int p = first; p < first + kWindow; ++p)
        for (int wall : w.walls_of_edge[path[p].edge]) open = open || w.sides[wall].boundary_open;
      (open ? unresolved : failed) = true;
    }
    if (failed) {
      if (sweep.failing++ == 0) sweep.first_failure = path;
    } else if (unresolved) {
      ++sweep.indeterminate;
    }
  };
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == to) return leaf();
    for (const Slot& s : forward[v]) {
      path.push_back(s);
      for (int wall : w.walls_of_edge[s.edge]) ++crossings[wall];
      self(self, x.head(s));
      for (int wall : w.walls_of_edge[s.edge]) --crossings[wall];
      path.pop_back();
    }
  };
  dfs(dfs, from);
  return sweep;
}

}  // namespace sqm
