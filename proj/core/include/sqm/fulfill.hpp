#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sqm/complex.hpp"
#include "sqm/presentation.hpp"

namespace sqm {

// Square complex whose faces carry (label, start, orient). Face f reads its
// relator w as follows: with orient +1, letter w[j] sits on slot (start + j)
// mod 4 and is read along the slot; with orient -1 it sits on slot
// (start - j) mod 4 and is read against the slot, i.e. along the reversed
// attaching walk.
struct AbstractComplex {
  SquareComplex base;
  int n_labels = 0;
};

// Derives n_labels and checks that labels 1..n_labels are all used.
AbstractComplex make_abstract(SquareComplex y);

// Relator position j of face f: the slot it occupies and +1/-1 for reading
// along/against that slot.
struct Placement {
  int slot = 0;
  int along = 1;
};
Placement placement(const Face& f, int j);
int position_of_slot(const Face& f, int slot);

struct NotLocallyInjective : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FulfillStats {
  std::vector<int> m;      // m[i-1]: faces with label i
  std::vector<int> kappa;  // kappa[i-1]: max delta over faces with label i
  std::vector<int> delta;  // per face: edges that belong to it
  std::vector<int> m_sorted;
  int cancel = 0;
  int sum_m_kappa = 0;
};

// Belongs-to rule: at an edge with several incident slots, the slot with the
// lexicographically smallest (label, position) keeps the edge and every other
// slot's face gets it. Throws NotLocallyInjective on repeated (label, position).
FulfillStats kappa(const AbstractComplex& y);

struct FulfillAssignment {
  std::vector<int> relator_of_label;  // index into R, per label
  std::vector<Relator> words;         // per label
  std::vector<int> edge_letter;       // letter code read from src to dst
};

// Backtracking over labels with forward checking on edge letters. A word of R
// may serve several labels; local injectivity compares (word, position) pairs.
std::optional<FulfillAssignment> fulfill_search(const AbstractComplex& y, const std::vector<Relator>& r);

// Direct test of one tuple (one word per label), used by the exact counters.
bool fulfills(const AbstractComplex& y, const std::vector<Relator>& words);

double fulfill_probability_bound(const AbstractComplex& y, int m, double d);

struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kExactTupleGuard = 10'000'000;
// Named slack for comparing exact ratios with (2m-1)^-kappa: the heuristic
// ignores the cyclic-reduction boundary effect.
inline constexpr double kProbabilityTolerance = 0.10;

struct ExactFulfill {
  double probability = 0;           // p_L
  std::vector<double> p;            // p_0 .. p_L
  std::vector<double> ratio;        // ratio[i-1] = p_i / p_{i-1}; NaN when p_{i-1} = 0
  std::vector<std::uint64_t> count; // consistent i-tuples
};

// Exact probability that a uniform tuple of words of W_m fulfills y, with the
// partial-fulfilment chain over labels 1..i.
ExactFulfill exact_fulfill_probability(const AbstractComplex& y, int m, double d,
                                       std::uint64_t guard = kExactTupleGuard);

// Exact probability that a uniform |R|-subset of W_m, |R| = relator_count(m,d),
// contains a fulfilling tuple. Enumerates subsets; throws Infeasible past guard.
double exact_set_fulfill_probability(const AbstractComplex& y, int m, double d,
                                     std::uint64_t guard = kExactTupleGuard);

struct MonteCarloReport {
  double bound = 0;
  double estimate = 0;
  double ci_low = 0;
  double ci_high = 0;
  int trials = 0;
  int successes = 0;
  std::uint64_t seed = 0;
};

std::pair<double, double> wilson_interval(int successes, int trials, double z = 1.959963984540054);

MonteCarloReport monte_carlo_set_fulfill(const AbstractComplex& y, int m, double d, int trials,
                                         std::uint64_t seed, int threads = 1);

}  // namespace sqm
