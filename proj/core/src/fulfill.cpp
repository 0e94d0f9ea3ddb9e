#include "sqm/fulfill.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <tuple>

#include "sqm/parallel.hpp"

namespace sqm {

AbstractComplex make_abstract(SquareComplex y) {
  if (auto err = y.validate(); !err.empty()) throw std::invalid_argument(err);
  int n = 0;
  for (const Face& f : y.faces) n = std::max(n, f.label);
  std::vector<bool> used(n + 1, false);
  for (const Face& f : y.faces) {
    if (f.label < 1) throw std::invalid_argument("every face of an abstract complex needs a label");
    used[f.label] = true;
  }
  for (int i = 1; i <= n; ++i)
    if (!used[i]) throw std::invalid_argument("label " + std::to_string(i) + " is unused");
  return {std::move(y), n};
}

Placement placement(const Face& f, int j) {
  if (f.orient > 0) return {(f.start + j) % 4, 1};
  return {((f.start - j) % 4 + 4) % 4, -1};
}

int position_of_slot(const Face& f, int slot) {
  if (f.orient > 0) return ((slot - f.start) % 4 + 4) % 4;
  return ((f.start - slot) % 4 + 4) % 4;
}

FulfillStats kappa(const AbstractComplex& y) {
  const SquareComplex& x = y.base;
  std::vector<std::vector<std::tuple<int, int, int>>> at(x.edges.size());  // (label, pos, face)
  for (std::size_t f = 0; f < x.faces.size(); ++f)
    for (int k = 0; k < 4; ++k)
      at[x.faces[f].walk[k].edge].emplace_back(x.faces[f].label, position_of_slot(x.faces[f], k),
                                               static_cast<int>(f));
  FulfillStats s;
  s.m.assign(y.n_labels, 0);
  s.kappa.assign(y.n_labels, 0);
  s.delta.assign(x.faces.size(), 0);
  for (auto& list : at) {
    std::sort(list.begin(), list.end());
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (std::get<0>(list[i]) == std::get<0>(list[i - 1]) && std::get<1>(list[i]) == std::get<1>(list[i - 1]))
        throw NotLocallyInjective("two slots with equal (label, position) meet at one edge");
      ++s.delta[std::get<2>(list[i])];
    }
  }
  for (std::size_t f = 0; f < x.faces.size(); ++f) {
    const int l = x.faces[f].label - 1;
    ++s.m[l];
    s.kappa[l] = std::max(s.kappa[l], s.delta[f]);
    s.cancel += s.delta[f];
  }
  for (int i = 0; i < y.n_labels; ++i) s.sum_m_kappa += s.m[i] * s.kappa[i];
  s.m_sorted = s.m;
  std::sort(s.m_sorted.rbegin(), s.m_sorted.rend());
  return s;
}

namespace {

using Codes = std::array<int, 4>;

Codes codes_of(const Relator& r) {
  return {r.letters[0].code(), r.letters[1].code(), r.letters[2].code(), r.letters[3].code()};
}

struct Constraint {
  int edge;
  int pos;
  int along;  // +1: relator letter equals the edge letter read src -> dst
};

struct Compiled {
  int n_edges = 0;
  std::vector<std::vector<Constraint>> by_label;
};

Compiled compile(const AbstractComplex& y) {
  Compiled c;
  c.n_edges = static_cast<int>(y.base.edges.size());
  c.by_label.resize(y.n_labels);
  for (const Face& f : y.base.faces)
    for (int j = 0; j < 4; ++j) {
      const Placement p = placement(f, j);
      const Slot& s = f.walk[p.slot];
      c.by_label[f.label - 1].push_back({s.edge, j, p.along * s.dir});
    }
  return c;
}

// Incremental edge labelling with undo, shared by the search and the exact counters.
class Engine {
 public:
  explicit Engine(const Compiled& c) : c_(c), letter_(c.n_edges, -1), occ_(c.n_edges) {}

  bool assign(int label, int word, const Codes& w) {
    const std::size_t mark_letters = letter_undo_.size(), mark_occ = occ_undo_.size();
    for (const Constraint& k : c_.by_label[label]) {
      const int want = k.along > 0 ? w[k.pos] : inverse_code(w[k.pos]);
      bool ok = true;
      if (letter_[k.edge] < 0) {
        letter_[k.edge] = want;
        letter_undo_.push_back(k.edge);
      } else if (letter_[k.edge] != want) {
        ok = false;
      }
      if (ok)
        for (const auto& [ow, op] : occ_[k.edge])
          if (ow == word && op == k.pos) ok = false;
      if (!ok) {
        rollback(mark_letters, mark_occ);
        return false;
      }
      occ_[k.edge].push_back({word, k.pos});
      occ_undo_.push_back(k.edge);
    }
    frames_.push_back({mark_letters, mark_occ});
    return true;
  }

  void unassign() {
    const auto [ml, mo] = frames_.back();
    frames_.pop_back();
    rollback(ml, mo);
  }

  // Letter-level feasibility of a word for an unassigned label.
  bool compatible(int label, const Codes& w) const {
    std::array<std::pair<int, int>, 32> local{};
    int used = 0;
    for (const Constraint& k : c_.by_label[label]) {
      const int want = k.along > 0 ? w[k.pos] : inverse_code(w[k.pos]);
      int have = letter_[k.edge];
      if (have < 0)
        for (int i = 0; i < used; ++i)
          if (local[i].first == k.edge) have = local[i].second;
      if (have < 0) {
        if (used < static_cast<int>(local.size())) local[used++] = {k.edge, want};
      } else if (have != want) {
        return false;
      }
    }
    return true;
  }

  const std::vector<int>& letters() const { return letter_; }

 private:
  void rollback(std::size_t ml, std::size_t mo) {
    while (letter_undo_.size() > ml) {
      letter_[letter_undo_.back()] = -1;
      letter_undo_.pop_back();
    }
    while (occ_undo_.size() > mo) {
      occ_[occ_undo_.back()].pop_back();
      occ_undo_.pop_back();
    }
  }

  const Compiled& c_;
  std::vector<int> letter_;
  std::vector<std::vector<std::pair<int, int>>> occ_;
  std::vector<int> letter_undo_, occ_undo_;
  std::vector<std::pair<std::size_t, std::size_t>> frames_;
};

bool search(Engine& eng, const std::vector<Codes>& words, int label, int n_labels, std::vector<int>& choice) {
  if (label == n_labels) return true;
  for (std::size_t r = 0; r < words.size(); ++r) {
    if (!eng.assign(label, static_cast<int>(r), words[r])) continue;
    bool alive = true;
    for (int later = label + 1; later < n_labels && alive; ++later)
      alive = std::any_of(words.begin(), words.end(), [&](const Codes& w) { return eng.compatible(later, w); });
    if (alive) {
      choice[label] = static_cast<int>(r);
      if (search(eng, words, label + 1, n_labels, choice)) return true;
    }
    eng.unassign();
  }
  return false;
}

void count_prefixes(Engine& eng, const std::vector<Codes>& words, int label, int n_labels,
                    std::vector<std::uint64_t>& count) {
  ++count[label];
  if (label == n_labels) return;
  for (std::size_t r = 0; r < words.size(); ++r) {
    if (!eng.assign(label, static_cast<int>(r), words[r])) continue;
    count_prefixes(eng, words, label + 1, n_labels, count);
    eng.unassign();
  }
}

void collect_tuples(Engine& eng, const std::vector<Codes>& words, int label, int n_labels, std::size_t index,
                    std::vector<bool>& hit) {
  if (label == n_labels) {
    hit[index] = true;
    return;
  }
  for (std::size_t r = 0; r < words.size(); ++r) {
    if (!eng.assign(label, static_cast<int>(r), words[r])) continue;
    collect_tuples(eng, words, label + 1, n_labels, index * words.size() + r, hit);
    eng.unassign();
  }
}

std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t guard) {
  std::uint64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > guard / std::max<std::uint64_t>(base, 1)) return guard + 1;
    v *= base;
  }
  return v;
}

}  // namespace

std::optional<FulfillAssignment> fulfill_search(const AbstractComplex& y, const std::vector<Relator>& r) {
  if (r.empty()) throw std::invalid_argument("relator list must be nonempty");
  const Compiled c = compile(y);
  std::vector<Codes> words;
  words.reserve(r.size());
  for (const Relator& w : r) words.push_back(codes_of(w));
  Engine eng(c);
  std::vector<int> choice(y.n_labels, -1);
  if (!search(eng, words, 0, y.n_labels, choice)) return std::nullopt;
  FulfillAssignment a;
  a.relator_of_label = choice;
  for (int i : choice) a.words.push_back(r[i]);
  a.edge_letter = eng.letters();
  return a;
}

bool fulfills(const AbstractComplex& y, const std::vector<Relator>& words) {
  if (static_cast<int>(words.size()) != y.n_labels) throw std::invalid_argument("one word per label required");
  const Compiled c = compile(y);
  Engine eng(c);
  // Equal words share an id so that local injectivity sees them as one cell.
  for (int l = 0; l < y.n_labels; ++l) {
    int id = l;
    for (int k = 0; k < l; ++k)
      if (words[k] == words[l]) {
        id = k;
        break;
      }
    if (!eng.assign(l, id, codes_of(words[l]))) return false;
  }
  return true;
}

double fulfill_probability_bound(const AbstractComplex& y, int m, double d) {
  const double faces = static_cast<double>(y.base.faces.size());
  const double exponent = (4.0 * faces * d - cancellation(y.base)) / faces;
  return std::pow(2.0 * m - 1.0, exponent);
}

ExactFulfill exact_fulfill_probability(const AbstractComplex& y, int m, double /*d*/, std::uint64_t guard) {
  const auto all = enumerate_cyclically_reduced(m);
  if (checked_power(all.size(), y.n_labels, guard) > guard)
    throw Infeasible("tuple space exceeds the exhaustive guard");
  std::vector<Codes> words;
  for (const Relator& r : all) words.push_back(codes_of(r));
  const Compiled c = compile(y);
  Engine eng(c);
  ExactFulfill out;
  out.count.assign(y.n_labels + 1, 0);
  count_prefixes(eng, words, 0, y.n_labels, out.count);
  double scale = 1.0;
  for (int i = 0; i <= y.n_labels; ++i) {
    out.p.push_back(static_cast<double>(out.count[i]) / scale);
    scale *= static_cast<double>(words.size());
  }
  for (int i = 1; i <= y.n_labels; ++i)
    out.ratio.push_back(out.p[i - 1] > 0 ? out.p[i] / out.p[i - 1] : std::numeric_limits<double>::quiet_NaN());
  out.probability = out.p.back();
  return out;
}

double exact_set_fulfill_probability(const AbstractComplex& y, int m, double d, std::uint64_t guard) {
  const auto all = enumerate_cyclically_reduced(m);
  const std::uint64_t w = all.size();
  const int n = static_cast<int>(relator_count(m, d));
  const std::uint64_t tuples = checked_power(w, y.n_labels, guard);
  if (tuples > guard) throw Infeasible("tuple space exceeds the exhaustive guard");

  // C(w, n) * n^L subset checks
  long double subsets = 1;
  for (int i = 0; i < n; ++i) subsets = subsets * static_cast<long double>(w - i) / (i + 1);
  if (subsets * std::pow(static_cast<long double>(n), y.n_labels) > static_cast<long double>(guard))
    throw Infeasible("subset space exceeds the exhaustive guard");

  std::vector<Codes> words;
  for (const Relator& r : all) words.push_back(codes_of(r));
  const Compiled c = compile(y);
  Engine eng(c);
  std::vector<bool> hit(tuples, false);
  collect_tuples(eng, words, 0, y.n_labels, 0, hit);

  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  std::uint64_t good = 0, total = 0;
  std::vector<int> digits(y.n_labels);
  for (;;) {
    ++total;
    std::fill(digits.begin(), digits.end(), 0);
    for (bool found = false; !found;) {
      std::size_t index = 0;
      for (int l = 0; l < y.n_labels; ++l) index = index * w + pick[digits[l]];
      if (hit[index]) {
        found = true;
        ++good;
        break;
      }
      int l = y.n_labels - 1;
      while (l >= 0 && ++digits[l] == n) digits[l--] = 0;
      if (l < 0) break;
    }
    int i = n - 1;
    while (i >= 0 && pick[i] == static_cast<int>(w) - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return static_cast<double>(good) / static_cast<double>(total);
}

std::pair<double, double> wilson_interval(int successes, int trials, double z) {
  if (trials <= 0) return {0.0, 1.0};
  const double n = trials, p = successes / n, z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  // The interval reaches 0 (resp. 1) exactly at the extremes; rounding would leave residue.
  const double lo = successes == 0 ? 0.0 : std::max(0.0, centre - half);
  const double hi = successes == trials ? 1.0 : std::min(1.0, centre + half);
  return {lo, hi};
}

MonteCarloReport monte_carlo_set_fulfill(const AbstractComplex& y, int m, double d, int trials,
                                         std::uint64_t seed, int threads) {
  if (trials < 100) throw std::invalid_argument("at least 100 trials required");
  std::vector<char> success(trials, 0);
  parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t t) {
    const Presentation p = sample_presentation(m, d, derive_seed(seed, t));
    success[t] = fulfill_search(y, p.relators).has_value() ? 1 : 0;
  });
  MonteCarloReport r;
  r.trials = trials;
  r.seed = seed;
  r.successes = static_cast<int>(std::count(success.begin(), success.end(), 1));
  r.estimate = static_cast<double>(r.successes) / trials;
  std::tie(r.ci_low, r.ci_high) = wilson_interval(r.successes, trials);
  r.bound = fulfill_probability_bound(y, m, d);
  return r;
}

}  // namespace sqm
