#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqm/complex.hpp"

namespace sqm {

enum class HypergraphKind { standard, red, blue };

std::string to_string(HypergraphKind k);
HypergraphKind parse_kind(const std::string& s);

struct PaintingConflict : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complex with strongly adjacent pairs coloured. Labels stand in for orbits:
// faces sharing a label get one colour, and the two members of a pair must
// carry different keys.
struct PaintedComplex {
  SquareComplex base;               // face colours filled in
  std::vector<StrongPair> pairs;
  std::vector<int> partner;         // per face, -1 for regular faces
  std::vector<int> first_shared;    // per face: slot a with slots a, a+1 distinguished; -1 otherwise
};

// Red = smaller (label, start, orient) key in each pair. Throws
// PaintingConflict on equal keys, on a face strongly adjacent to two faces,
// on opposite distinguished edges, on any 3-shared-edge pair, or when label
// propagation forces both colours.
PaintedComplex paint(SquareComplex x);

struct GammaEdge {
  int a = 0;  // X-edge ids
  int b = 0;
  int face = 0;
  int slot_a = 0;
  int slot_b = 0;
  friend bool operator==(const GammaEdge&, const GammaEdge&) = default;
};

// The two Γ-edges a face contributes under a kind. Standard: slots (0,2) and
// (1,3). In a face of the kind's colour with distinguished slots a, a+1:
// (a, a+3) and (a+1, a+2).
std::vector<GammaEdge> face_gamma_edges(const PaintedComplex& x, int face, HypergraphKind kind);

struct Hypergraph {
  HypergraphKind kind = HypergraphKind::standard;
  std::vector<int> vertices;     // dual X-edges, sorted
  std::vector<GammaEdge> edges;  // sorted by (face, slot_a)
  std::vector<int> carrier;      // faces, sorted
};

// Connected components of Γ, isolated X-edges included, ordered by smallest
// dual edge.
std::vector<Hypergraph> trace_hypergraphs(const PaintedComplex& x, HypergraphKind kind);

// Shortest sequence of Γ-edge indices from `from` to `to`, consecutive ones
// sharing an X-edge; empty when disconnected.
std::vector<int> gamma_path(const Hypergraph& h, int from, int to);

struct TreeCheck {
  enum class Witness { none, cycle, repeated_face };
  bool tree = true;
  Witness witness = Witness::none;
  std::vector<int> cycle;            // Γ-edge indices in order around the cycle
  int repeated_face = -1;
  std::vector<int> repeated_path;    // Γ-edge path joining the two visits, ends included
};

// Tree iff Γ is acyclic and no face holds two Γ-edges. A cycle is reported
// ahead of a repeated face.
TreeCheck is_embedded_tree(const Hypergraph& h);

struct ExtractionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CollaredDiagram {
  std::vector<GammaEdge> segment;  // the collaring segment λ
  std::vector<int> base_faces;     // carrier of λ
  int corner = -1;
  bool cornerless = false;
  DiagramWithHorns horned;
  int k = 0;        // segment length
  int k_prime = 0;  // horn count
  int generalized_boundary = 0;
  std::vector<std::string> broken;  // violated collaring conditions; empty when valid
};

// Builds the collared diagram carried by a non-tree witness and adds horns.
// Throws std::invalid_argument on a tree, ExtractionFailed if the witness
// does not close up.
CollaredDiagram extract_collared_diagram(const PaintedComplex& x, const Hypergraph& h, const TreeCheck& witness);

struct Components {
  int count = 0;
  std::vector<int> side;  // per vertex
  bool boundary_open = false;
};

// Vertex components of X with every edge dual to h removed. Open when some
// dual edge has both endpoints incomplete, so the wall may continue outside.
Components complement_components(const SquareComplex& x, const Hypergraph& h);

struct WallDecomposition {
  std::vector<Hypergraph> walls;
  std::vector<Components> sides;
  // Per X-edge: walls dual to it.
  std::vector<std::vector<int>> walls_of_edge;
};

// Hypergraphs of the requested kinds, with walls of identical Γ-edge sets
// kept once (first kind wins).
WallDecomposition build_walls(const PaintedComplex& x,
                              const std::vector<HypergraphKind>& kinds = {HypergraphKind::standard, HypergraphKind::red,
                                                                          HypergraphKind::blue},
                              int threads = 1);

int wall_distance(const WallDecomposition& w, int x, int y);

enum class Verdict { pass, fail, indeterminate };
std::string to_string(Verdict v);

std::vector<int> bfs_distances(const SquareComplex& x, int source);
// One shortest path as darts; empty when unreachable or x == y.
std::vector<Slot> shortest_path(const SquareComplex& x, int from, int to);

struct LowerBoundRow {
  int x = 0;
  int y = 0;
  int d_edge = 0;
  int d_wall = 0;
  int bound = 0;
  Verdict status = Verdict::pass;
};

struct LowerBoundReport {
  std::vector<LowerBoundRow> rows;
  int passed = 0;
  int failed = 0;
  int indeterminate = 0;
};

// d_wall >= floor(d_edge / 15). A shortfall is indeterminate when an open wall
// is dual to a BFS geodesic between the pair, otherwise a failure.
LowerBoundReport check_wall_lower_bound(const WallDecomposition& w, const SquareComplex& x,
                                        const std::vector<std::pair<int, int>>& pairs);
std::string lower_bound_csv(const LowerBoundReport& r);

struct WindowResult {
  int first_edge = 0;  // window covers path edges [first_edge, first_edge + 15)
  Verdict status = Verdict::pass;
  int wall = -1;  // a wall crossing the path once inside the window
};

struct WindowReport {
  std::vector<WindowResult> windows;
  bool pass = true;  // no window failed
  int failed = 0;
  int indeterminate = 0;
};

// Requires a geodesic of length >= 21; throws std::invalid_argument otherwise.
WindowReport check_window_crossing(const SquareComplex& x, const WallDecomposition& w, const std::vector<Slot>& path);

// Same window test applied to every geodesic from `from` to `to`, walking the
// BFS geodesic DAG with incremental crossing counts.
struct WindowSweep {
  std::uint64_t geodesics = 0;
  std::uint64_t failing = 0;        // geodesics with a failed window
  std::uint64_t indeterminate = 0;  // no failed window but an unresolved one
  std::vector<Slot> first_failure;
};
WindowSweep sweep_window_crossing(const SquareComplex& x, const WallDecomposition& w, int from, int to);

enum class CarrierClass { regular_tile, divided_tile, isolated_distinguished };
std::string to_string(CarrierClass c);

// Per Γ-edge of an ordered segment, the class of its containing face.
std::vector<CarrierClass> classify_carrier(const PaintedComplex& x, const std::vector<GammaEdge>& segment);

struct HouseMatch {
  int first_edge = 0;  // position of γ' inside the path
  int length = 0;
  bool conforming = false;
  int roof = -1;
  int left = -1;   // carrier faces under the roof
  int right = -1;
};

// Maximal subpaths of the geodesic that leave the carrier of h and come back,
// each matched against the three-face house shape.
std::vector<HouseMatch> find_house_diagrams(const PaintedComplex& x, const std::vector<Slot>& path,
                                            const Hypergraph& h);

struct TwoCollared {
  std::vector<int> corners;
  std::vector<GammaEdge> segment1;
  std::vector<GammaEdge> segment2;
  std::vector<int> faces;
  bool strongly_adjacent_pair = false;  // shape predicted for every witness
};

// Pairs of common carrier faces joined by Γ-paths in both hypergraphs whose
// union carrier satisfies the 2-collared conditions. Throws
// std::invalid_argument when h1 and h2 coincide.
std::vector<TwoCollared> find_two_collared(const PaintedComplex& x, const Hypergraph& h1, const Hypergraph& h2);

std::string hypergraphs_dot(const std::vector<Hypergraph>& hs);

}  // namespace sqm
