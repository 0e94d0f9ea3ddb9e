#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqm/cayley.hpp"
#include "sqm/complex.hpp"

namespace sqm {

// A hand-built complex together with the named cells the tests and the CLI
// refer to. Paths are dart sequences.
struct Fixture {
  std::string name;
  SquareComplex complex;
  std::map<std::string, int> vertices;
  std::map<std::string, int> edges;
  std::map<std::string, int> faces;
  std::vector<Slot> path;
  std::optional<Presentation> presentation;
  std::vector<Word> representative;  // Cayley fixtures only
};

struct FixtureParams {
  int radius = 5;   // z2
  int length = 20;  // staircase: length of the geodesic
  int k = 4;        // annulus
};

// Torus ball: vertices keyed "(x,y)" by exponent sums.
Fixture z2_fixture(int radius);
// Chain of strongly adjacent pairs meeting at corners, each pair a square cut
// along a bent diagonal. The path runs along two sides of every square, so
// every standard wall meets it twice or not at all. `length` must be even.
Fixture staircase_fixture(int length);
// Left square, the pair (red cell below the bent diagonal, blue above), right
// square, and a square on top of the pair.
Fixture comparison_fixture();
// Ring of k squares; spokes s0..s(k-1), rims inner/outer.
Fixture annulus_fixture(int k);
// Row F0..F3 with the right side of F3 glued to the top of F0, so the
// horizontal standard hypergraph passes through F0 twice.
Fixture repeated_face_fixture();
// Two squares under a roof square; the path is the roof.
Fixture house_fixture();
// Three squares in a row with an off-carrier path of length 3 over them.
Fixture nonconforming_house_fixture();
// A strongly adjacent pair labelled (3, 7) plus loose translates of each label.
Fixture special_pairs_fixture();

std::vector<std::string> fixture_names();
Fixture make_fixture(const std::string& name, const FixtureParams& params = {});

struct PlanarFixture {
  std::string name;
  Diagram diagram;
};

// Twenty simply connected polyominoes drawn on the integer grid.
std::vector<PlanarFixture> planar_fixtures();

}  // namespace sqm
