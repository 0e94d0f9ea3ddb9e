#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sqm/complex.hpp"
#include "sqm/presentation.hpp"

namespace sqm {

// Area allowed for a relation of boundary length b. Linear: the
// isoperimetric cap ceil(b / (4(1 - 2d - eps0))). Quadratic: ceil(b^2 / 16),
// the exact Dehn function of the square tiling, for the torus presentation
// whose small formal density makes the linear cap meaningless.
struct WordProblemBudget {
  enum class Area { linear, quadratic };
  double eps0 = 0.05;
  std::size_t hard_cap = 1'000'000;   // search states per query
  double undecided_fraction = 0.01;   // tolerated share of undecided merges
  Area area = Area::linear;

  int area_cap(int boundary, double density) const;
};

// The budget the fixtures use for P: quadratic for the torus, linear otherwise.
WordProblemBudget default_budget(const Presentation& p);

// One face removed from a cyclic boundary word: the subword of length
// `length` at `position` of `before` is a piece of the cyclic relator form
// (relator, inverted, rotation) and is replaced by the rest of that form,
// inverted; the result is then cyclically reduced.
struct RewriteStep {
  Word before;  // canonical cyclic word (least rotation)
  int relator = 0;
  bool inverted = false;
  int rotation = 0;
  int position = 0;
  int length = 0;
};

struct WordProblemResult {
  enum class Status { equal, distinct, undecided };
  Status status = Status::undecided;
  Word boundary;                        // canonical cyclic form of u v^-1
  std::vector<RewriteStep> derivation;  // filled when equal; its length is the area
  std::size_t states = 0;
};

std::string to_string(WordProblemResult::Status s);

// Least rotation of the cyclic reduction of w.
Word canonical_cyclic(const Word& w);

// Applies one step; throws std::invalid_argument when the piece does not match.
Word apply_step(const Presentation& p, const RewriteStep& s);

// Exponent sums modulo the relator lattice, in a canonical reduced form.
class Abelianization {
 public:
  explicit Abelianization(const Presentation& p);
  std::vector<std::int64_t> image(const Word& w) const;

 private:
  int rank_ = 0;
  std::vector<std::vector<std::int64_t>> rows_;  // Hermite normal form
  std::vector<int> pivot_;
};

// Searches for a diagram with boundary u v^-1 of at most A(|u| + |v|) faces.
// Distinct when the abelian images differ or the bounded space is exhausted;
// undecided when the state cap trips first.
WordProblemResult words_equal(const Presentation& p, const Word& u, const Word& v,
                              const WordProblemBudget& budget = {});

struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CayleyBall {
  SquareComplex base;  // edge i runs from v to v·a_g, generator_of_edge[i] = g
  int radius = 0;
  std::vector<Word> representative;  // shortlex-least geodesic word
  std::vector<int> distance;
  std::vector<int> generator_of_edge;
  std::size_t merge_checks = 0;
  std::size_t undecided = 0;
};

// Shortlex BFS from the identity with words_equal merges; faces are every
// closed reading of a cyclic relator form, one per slot cycle. Vertices
// within r - 2 of the identity and untouched by undecided merges are complete.
CayleyBall build_ball(const Presentation& p, int r, const WordProblemBudget& budget = {}, int threads = 1);

struct GeodesicSet {
  int distance = -1;
  std::uint64_t count = 0;       // total number of geodesics (saturating)
  std::vector<std::vector<Slot>> paths;
  bool truncated = false;        // paths holds fewer than count
};

// Every geodesic edge path from x to y in the 1-skeleton, at most `cap`
// listed, in lexicographic order of darts.
GeodesicSet geodesics(const SquareComplex& x, int from, int to, std::size_t cap = 10'000);

// Visits each geodesic in the same order; the visitor returns false to stop.
void for_each_geodesic(const SquareComplex& x, int from, int to,
                       const std::function<bool(const std::vector<Slot>&)>& visit);

}  // namespace sqm
