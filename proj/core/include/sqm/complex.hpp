#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqm {

enum class Color { regular, red, blue };

std::string to_string(Color c);
Color parse_color(const std::string& s);

struct Edge {
  int src = 0;
  int dst = 0;
};

// One position of an attaching walk: the edge it maps to and whether the walk
// runs along the edge (+1, src to dst) or against it (-1).
struct Slot {
  int edge = 0;
  int dir = 1;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Face {
  std::array<Slot, 4> walk{};
  int label = 0;  // relator label, 0 when the face carries none
  int start = 0;  // slot holding the first relator letter
  int orient = 1;
  Color color = Color::regular;
};

struct SquareComplex {
  int num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  // Per-vertex completeness. Empty means every vertex is complete; finite
  // pieces of infinite complexes mark vertices whose star was truncated.
  std::vector<bool> complete;

  int add_vertex() { return num_vertices++; }
  int add_edge(int src, int dst);
  int add_face(const std::array<Slot, 4>& walk, int label = 0, int start = 0, int orient = 1);

  int tail(const Slot& s) const { return s.dir > 0 ? edges[s.edge].src : edges[s.edge].dst; }
  int head(const Slot& s) const { return s.dir > 0 ? edges[s.edge].dst : edges[s.edge].src; }
  bool vertex_complete(int v) const { return complete.empty() || complete[v]; }

  std::vector<int> edge_degrees() const;  // attaching-walk slots per edge
  // Empty string when well formed, otherwise the first problem found.
  std::string validate() const;
};

// Incremental construction keyed by vertex pairs: square(a,b,c,d) reuses the
// edge between consecutive corners when one already exists.
class ComplexBuilder {
 public:
  explicit ComplexBuilder(int vertices = 0) { complex_.num_vertices = vertices; }
  int vertex() { return complex_.add_vertex(); }
  int edge(int u, int v);  // existing edge joining u and v, or a new one u->v
  int square(int a, int b, int c, int d, int label = 0);
  SquareComplex& complex() { return complex_; }
  SquareComplex take() { return std::move(complex_); }

 private:
  SquareComplex complex_;
};

int face_count(const SquareComplex& y);
int generalized_boundary_length(const SquareComplex& y);
int cancellation(const SquareComplex& y);

// A planar van Kampen diagram: the complex plus a rotation system. Each
// rotation[v] lists the darts leaving v in counterclockwise order, a dart being
// an outgoing Slot. The boundary walk is recovered from the rotation system as
// the single facial walk that is not one of the square faces.
struct Diagram {
  SquareComplex complex;
  std::vector<std::vector<Slot>> rotation;
  std::vector<Slot> boundary;

  // Builds the rotation system from straight-line vertex coordinates and
  // traces the boundary. Throws if the drawing is not a planar disc.
  static Diagram from_embedding(SquareComplex y, const std::vector<std::pair<double, double>>& xy);
  static Diagram from_rotation(SquareComplex y, std::vector<std::vector<Slot>> rotation);

  int boundary_length() const { return static_cast<int>(boundary.size()); }
};

struct IsoParams {
  double d = 0.3;
  double eps = 0.05;
  double c_prime = 0.4;
  double a = 1.0;
};

struct IsoReport {
  bool pass = true;
  int boundary = 0;
  int faces = 0;
  double threshold = 0;  // 4(1 - 2d - eps)|D|
};

IsoReport check_isoperimetric(const Diagram& d, const IsoParams& p);

struct GeneralizedIsoReport {
  bool violation = false;        // authoritative: Cancel > 4(d + eps)|Y|
  int cancel = 0;
  double cancel_threshold = 0;
  int generalized_boundary = 0;
  double boundary_threshold = 0;  // 4(1 - 2d - eps)|Y|, reported only
  bool boundary_form_violation = false;
  int faces = 0;
};

GeneralizedIsoReport check_generalized_iso(const SquareComplex& y, const IsoParams& p);

// Subcomplex spanned by a set of faces, with maps back to the ambient ids.
struct SubComplex {
  SquareComplex complex;
  std::vector<int> vertex_of;  // local vertex -> ambient vertex
  std::vector<int> edge_of;
  std::vector<int> face_of;
};

SubComplex extract_faces(const SquareComplex& x, const std::vector<int>& faces);

// Unordered face pairs sharing exactly two distinct edges, plus the pairs that
// share three or more (which the theory forbids).
struct StrongPair {
  int first = 0;
  int second = 0;
  std::vector<int> shared_edges;
};

struct StrongAdjacency {
  std::vector<StrongPair> pairs;
  std::vector<StrongPair> violations;
};

StrongAdjacency find_strongly_adjacent(const SquareComplex& x);

struct DiagramWithLegs {
  SquareComplex ambient;
  std::vector<int> disc_faces;
  std::vector<std::vector<int>> legs;  // face sets
  int k = 1;
};

// Human-readable list of broken invariants; empty when valid.
std::vector<std::string> validate_legs(const DiagramWithLegs& d);

struct Horn {
  int face = 0;     // glued face (ambient id)
  int partner = 0;  // its strongly adjacent partner in the base
};

struct DiagramWithHorns {
  std::vector<int> base_faces;  // ambient ids
  std::vector<Horn> horns;
  SubComplex result;  // base plus horns, as a standalone complex
};

struct HornError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Glues, for every base face with a boundary edge whose strong partner lies
// outside the base, that partner as a horn.
DiagramWithHorns add_horns(const SquareComplex& x, const std::vector<int>& base_faces);

struct BalancedCut {
  std::vector<int> vertices;  // path from one boundary point to another
  std::vector<int> edges;
  int side_a = 0;  // boundary edges on each side
  int side_b = 0;
  double length_bound = 0;
};

std::optional<BalancedCut> find_balanced_cut(const Diagram& d, double c_prime);

}  // namespace sqm
