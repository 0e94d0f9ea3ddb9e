#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sqm/cayley.hpp"
#include "sqm/complex.hpp"
#include "sqm/fixtures.hpp"
#include "sqm/presentation.hpp"

namespace sqm::io {

using nlohmann::json;

json to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

// {"vertices": n, "edges": [[src, dst]...], "faces": [{"walk": [[edge, dir] x4],
// "label", "start", "orient", "color"}], "complete": [...] when partial}.
json to_json(const SquareComplex& x);
SquareComplex complex_from_json(const json& j);

json to_json(const std::vector<Slot>& path);
std::vector<Slot> path_from_json(const json& j);

// Complex plus names, path and, for Cayley fixtures, the presentation and
// vertex representatives.
json to_json(const Fixture& f);
Fixture fixture_from_json(const json& j);

json to_json(const CayleyBall& b, const Presentation& p);

// 1-skeleton as an undirected DOT graph; incomplete vertices drawn dashed.
std::string complex_dot(const SquareComplex& x, const std::string& name);

}  // namespace sqm::io
