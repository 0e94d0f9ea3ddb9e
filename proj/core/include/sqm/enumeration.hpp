#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "sqm/complex.hpp"
#include "sqm/fulfill.hpp"
#include "sqm/presentation.hpp"

namespace sqm {

// Gluing pattern of F squares. Slot 4f+k is side k of face f, running from
// corner k to corner k+1. partner[s] is the slot glued to s (traversing the
// shared edge the other way) or -1 when s is a free edge. Vertices are the
// corner classes generated by the gluings.
struct Shape {
  int faces = 0;
  std::vector<int> partner;

  friend bool operator==(const Shape&, const Shape&) = default;
};

struct Decoration {
  std::vector<int> label;  // 1-based
  std::vector<int> start;
  std::vector<int> orient;
};

// Code of a shape read from face f0 with frame rotation rho and reflection
// (reflect = true reverses every attaching walk). Faces are renumbered in
// discovery order; a discovered face's frame puts the discovering slot at 0.
std::vector<int> traversal_code(const Shape& s, int f0, int rho, bool reflect);
std::vector<int> canonical_code(const Shape& s);
Shape canonical_shape(const Shape& s);
bool is_connected(const Shape& s);

// Builds the square complex, vertices numbered by first corner appearance.
SquareComplex to_complex(const Shape& s, const Decoration* deco = nullptr);

// Canonical code of a decorated shape: shape code followed by per-face
// (label, start, orient), labels renamed by first appearance, minimised over
// every traversal that realises the canonical shape code.
std::vector<int> canonical_decorated_code(const Shape& s, const Decoration& d);

// Every pair of glued slots carries distinct (label, position) pairs.
bool locally_injective(const Shape& s, const Decoration& d);

// Canonical connected shapes with exactly k faces, sorted by code.
std::vector<Shape> shapes_with_faces(int k);

enum class EnumerationMode {
  shapes,     // every face labelled 1 with start 0, orient +1
  decorated,  // every locally injective (label, start, orient) decoration
};

// Streams connected square complexes with 1..K faces, each isomorphism class
// once. Shapes are precomputed; decorations are produced lazily per shape.
class EnumerationCursor {
 public:
  explicit EnumerationCursor(int max_faces, EnumerationMode mode = EnumerationMode::decorated,
                             std::function<bool(const Shape&)> keep_shape = {});

  std::optional<AbstractComplex> next();
  // Shape and decoration of the complex last returned by next().
  const Shape& shape() const { return shapes_[shape_index_]; }
  const Decoration& decoration() const { return deco_; }
  int max_faces() const { return max_faces_; }

 private:
  bool advance_decoration();
  void reset_decoration();

  int max_faces_;
  EnumerationMode mode_;
  std::vector<Shape> shapes_;
  std::size_t shape_index_ = 0;
  bool started_ = false;
  Decoration deco_;
  std::vector<std::array<int, 3>> traversals_;  // (f0, rho, reflect) attaining the canonical code
  std::unordered_set<std::string> seen_;
};

std::vector<AbstractComplex> enumerate_abstract_complexes(int max_faces,
                                                          EnumerationMode mode = EnumerationMode::decorated);

// Independent count for one face: brute force over all slot pairings of a
// square, reduced by the dihedral symmetries of that square.
int single_face_shape_count_oracle();

// Random complex for identity testing: F squares whose corners are drawn from
// a small vertex pool, so edges of any degree and loops arise.
SquareComplex random_complex(int faces, std::mt19937_64& rng);

struct LocalIsoViolation {
  AbstractComplex complex;
  FulfillAssignment witness;
  GeneralizedIsoReport report;
};

// Decorated complexes with at most K faces whose shape already exceeds the
// cancellation threshold 4(d + eps)|Y|; independent of R.
std::vector<AbstractComplex> local_iso_candidates(int max_faces, const IsoParams& p);

std::vector<LocalIsoViolation> scan_local_iso(const std::vector<Relator>& r, int max_faces, const IsoParams& p);
std::vector<LocalIsoViolation> scan_local_iso(const std::vector<Relator>& r,
                                              const std::vector<AbstractComplex>& candidates, const IsoParams& p,
                                              int threads = 1);

// Two relator cells sharing a contiguous path: `first` read from offset
// first_offset and `second` (inverted when second_inverted) from
// second_offset spell the same word.
struct PathMatch {
  int first = 0;
  int second = 0;
  int first_offset = 0;
  int second_offset = 0;
  bool second_inverted = false;
  int length = 0;
  Word word;
};

struct ThirdCellWitness {
  PathMatch pair;  // the strongly adjacent pair
  int third = 0;
  int third_offset = 0;
  bool third_inverted = false;
  int union_offset = 0;  // start of the match in the union boundary word
  Word union_boundary;
};

struct SpecialCellsReport {
  std::vector<PathMatch> three_shared_cross;  // 3-letter paths, distinct relators
  std::vector<PathMatch> three_shared_same;   // 3-letter paths, translates of one relator
  std::vector<PathMatch> strongly_adjacent;   // maximal 2-letter matches
  std::vector<ThirdCellWitness> third_cells;  // third cell on a strongly adjacent pair

  std::size_t cross_relator_witnesses() const;
};

SpecialCellsReport check_special_cells(const std::vector<Relator>& r);

}  // namespace sqm
