#include "sqm/io.hpp"

#include <sstream>
#include <stdexcept>

namespace sqm::io {

json to_json(const Presentation& p) {
  json rel = json::array();
  for (const Relator& r : p.relators) rel.push_back(to_string(r.word()));
  return {{"rank", p.rank}, {"density", p.density}, {"seed", p.seed}, {"relators", rel}};
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  p.rank = j.at("rank").get<int>();
  p.density = j.at("density").get<double>();
  p.seed = j.value("seed", std::uint64_t{0});
  for (const auto& r : j.at("relators")) {
    const Word w = parse_word(r.get<std::string>());
    if (w.size() != 4) throw std::invalid_argument("relators have length 4");
    Relator rel;
    std::copy(w.begin(), w.end(), rel.letters.begin());
    p.relators.push_back(rel);
  }
  return p;
}

json to_json(const SquareComplex& x) {
  json edges = json::array();
  for (const Edge& e : x.edges) edges.push_back({e.src, e.dst});
  json faces = json::array();
  for (const Face& f : x.faces) {
    json walk = json::array();
    for (const Slot& s : f.walk) walk.push_back({s.edge, s.dir});
    faces.push_back({{"walk", walk},
                     {"label", f.label},
                     {"start", f.start},
                     {"orient", f.orient},
                     {"color", to_string(f.color)}});
  }
  json out = {{"vertices", x.num_vertices}, {"edges", edges}, {"faces", faces}};
  if (!x.complete.empty()) {
    json c = json::array();
    for (bool b : x.complete) c.push_back(b);
    out["complete"] = c;
  }
  return out;
}

SquareComplex complex_from_json(const json& j) {
  SquareComplex x;
  x.num_vertices = j.at("vertices").get<int>();
  for (const auto& e : j.at("edges")) x.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  for (const auto& f : j.at("faces")) {
    Face face;
    const auto& walk = f.at("walk");
    if (walk.size() != 4) throw std::invalid_argument("faces have four slots");
    for (int k = 0; k < 4; ++k) face.walk[k] = {walk[k].at(0).get<int>(), walk[k].at(1).get<int>()};
    face.label = f.value("label", 0);
    face.start = f.value("start", 0);
    face.orient = f.value("orient", 1);
    face.color = parse_color(f.value("color", std::string("regular")));
    x.faces.push_back(face);
  }
  if (j.contains("complete"))
    for (const auto& b : j.at("complete")) x.complete.push_back(b.get<bool>());
  if (auto err = x.validate(); !err.empty()) throw std::invalid_argument(err);
  return x;
}

json to_json(const std::vector<Slot>& path) {
  json out = json::array();
  for (const Slot& s : path) out.push_back({s.edge, s.dir});
  return out;
}

std::vector<Slot> path_from_json(const json& j) {
  std::vector<Slot> out;
  for (const auto& s : j) out.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
  return out;
}

json to_json(const Fixture& f) {
  json out = {{"name", f.name},
              {"complex", to_json(f.complex)},
              {"names", {{"vertices", f.vertices}, {"edges", f.edges}, {"faces", f.faces}}},
              {"path", to_json(f.path)}};
  if (f.presentation) out["presentation"] = to_json(*f.presentation);
  if (!f.representative.empty()) {
    json reps = json::array();
    for (const Word& w : f.representative) reps.push_back(to_string(w));
    out["representative"] = reps;
  }
  return out;
}

Fixture fixture_from_json(const json& j) {
  Fixture f;
  f.name = j.value("name", std::string());
  f.complex = complex_from_json(j.at("complex"));
  if (j.contains("names")) {
    const json& n = j.at("names");
    f.vertices = n.value("vertices", std::map<std::string, int>{});
    f.edges = n.value("edges", std::map<std::string, int>{});
    f.faces = n.value("faces", std::map<std::string, int>{});
  }
  if (j.contains("path")) f.path = path_from_json(j.at("path"));
  if (j.contains("presentation")) f.presentation = presentation_from_json(j.at("presentation"));
  if (j.contains("representative"))
    for (const auto& w : j.at("representative")) f.representative.push_back(parse_word(w.get<std::string>()));
  return f;
}

json to_json(const CayleyBall& b, const Presentation& p) {
  json reps = json::array();
  for (const Word& w : b.representative) reps.push_back(to_string(w));
  return {{"presentation", to_json(p)},
          {"radius", b.radius},
          {"complex", to_json(b.base)},
          {"representative", reps},
          {"distance", b.distance},
          {"generator_of_edge", b.generator_of_edge},
          {"merge_checks", b.merge_checks},
          {"undecided", b.undecided}};
}

std::string complex_dot(const SquareComplex& x, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (int v = 0; v < x.num_vertices; ++v)
    out << "  v" << v << (x.vertex_complete(v) ? "" : " [style=dashed]") << ";\n";
  for (std::size_t e = 0; e < x.edges.size(); ++e)
    out << "  v" << x.edges[e].src << " -- v" << x.edges[e].dst << " [label=\"e" << e << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace sqm::io
