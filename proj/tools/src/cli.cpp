#include "sqm/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sqm/cayley.hpp"
#include "sqm/enumeration.hpp"
#include "sqm/fixtures.hpp"
#include "sqm/fulfill.hpp"
#include "sqm/io.hpp"
#include "sqm/walls.hpp"

#ifndef SQM_VERSION
#define SQM_VERSION "0.0.0"
#endif

namespace sqm::cli {

using io::json;

std::string version() { return SQM_VERSION; }

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  // global
  std::string format = "json";
  std::string out;
  int threads = 1;
  std::uint64_t seed = 1;
  // presentation
  int rank = 3;
  double density = 0.3;
  std::string method = "auto";
  std::string presentation = "sampled";
  // enumeration and scans
  int faces = 3;
  std::string mode = "decorated";
  int k_faces = 3;
  double eps = 0.05;
  int index = 0;
  int trials = 2000;
  // ball and word problem
  int radius = 2;
  double eps0 = 0.05;
  std::size_t hard_cap = 1'000'000;
  // complex sources
  std::string fixture;
  std::string input;
  int length = 20;
  int annulus = 4;
  std::vector<std::string> kinds{"standard", "red", "blue"};
  std::string from;
  std::string to;
};

// Emits payload plus the {version, config, seed} header in the chosen format.
struct Artifact {
  json header;
  json payload = json::object();
  std::string text;  // csv or dot body

  std::string render(const std::string& format) const {
    if (format == "json") {
      json doc = payload;
      for (auto it = header.begin(); it != header.end(); ++it) doc[it.key()] = it.value();
      return doc.dump(2) + "\n";
    }
    const std::string lead = format == "csv" ? "# " : "// ";
    return lead + header.dump() + "\n" + text;
  }
};

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("format " + o.format + " is not available for this command");
}

Presentation sampled(const Options& o) {
  if (o.rank < 1) throw UsageError("--rank must be at least 1");
  if (!(o.density > 0 && o.density < 1)) throw UsageError("--density must lie in (0, 1)");
  SamplingMethod m = SamplingMethod::automatic;
  if (o.method == "shuffle") m = SamplingMethod::index_shuffle;
  if (o.method == "rejection") m = SamplingMethod::rejection;
  return sample_presentation(o.rank, o.density, o.seed, m);
}

json presentation_config(const Options& o) {
  return {{"rank", o.rank}, {"density", o.density}, {"method", o.method}};
}

json source_config(const Options& o) {
  if (!o.input.empty()) return {{"input", o.input}};
  json c = {{"fixture", o.fixture}};
  if (o.fixture == "z2") c["radius"] = o.radius;
  if (o.fixture == "staircase") c["length"] = o.length;
  if (o.fixture == "annulus") c["k"] = o.annulus;
  return c;
}

Fixture load_source(const Options& o) {
  if (!o.input.empty() && !o.fixture.empty()) throw UsageError("give either --input or --fixture");
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw UsageError("cannot read " + o.input);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw UsageError(std::string("input is not JSON: ") + e.what());
    }
    if (!j.contains("complex")) throw UsageError("input has no \"complex\" entry");
    return io::fixture_from_json(j);
  }
  if (o.fixture.empty()) throw UsageError("a complex source is required: --fixture or --input");
  FixtureParams params{o.radius, o.length, o.annulus};
  try {
    return make_fixture(o.fixture, params);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<HypergraphKind> parse_kinds(const std::vector<std::string>& names) {
  std::vector<HypergraphKind> out;
  for (const std::string& n : names) {
    try {
      out.push_back(parse_kind(n));
    } catch (const std::exception&) {
      throw UsageError("unknown hypergraph kind: " + n);
    }
  }
  if (out.empty()) throw UsageError("--kinds needs at least one kind");
  return out;
}

int resolve_vertex(const Fixture& f, const std::string& name) {
  auto it = f.vertices.find(name);
  if (it != f.vertices.end()) return it->second;
  try {
    std::size_t used = 0;
    const int v = std::stoi(name, &used);
    if (used == name.size() && v >= 0 && v < f.complex.num_vertices) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("unknown vertex: " + name);
}

json word_list(const std::vector<PathMatch>& ms) {
  json out = json::array();
  for (const PathMatch& m : ms)
    out.push_back({{"first", m.first},
                   {"second", m.second},
                   {"first_offset", m.first_offset},
                   {"second_offset", m.second_offset},
                   {"second_inverted", m.second_inverted},
                   {"word", to_string(m.word)}});
  return out;
}

json gamma_json(const std::vector<GammaEdge>& es) {
  json out = json::array();
  for (const GammaEdge& g : es) out.push_back({g.a, g.b, g.face});
  return out;
}

// ---------------------------------------------------------------- commands

int cmd_sample(const Options& o, Artifact& a) {
  require_format(o, {"json", "csv"});
  a.header["config"] = presentation_config(o);
  const Presentation p = sampled(o);
  a.payload["presentation"] = io::to_json(p);
  a.text = "index,relator\n";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    a.text += std::to_string(i) + "," + to_string(p.relators[i].word()) + "\n";
  return 0;
}

int cmd_enumerate(const Options& o, Artifact& a) {
  require_format(o, {"json", "csv"});
  const bool shapes = o.mode == "shapes";
  if (!shapes && o.mode != "decorated") throw UsageError("--mode is shapes or decorated");
  if (o.faces < 1 || o.faces > (shapes ? 4 : 3)) throw UsageError("--faces out of range for this mode");
  a.header["config"] = {{"faces", o.faces}, {"mode", o.mode}};
  std::vector<std::uint64_t> count(o.faces + 1, 0);
  std::uint64_t broken = 0;
  EnumerationCursor cur(o.faces, shapes ? EnumerationMode::shapes : EnumerationMode::decorated);
  while (auto y = cur.next()) {
    const int f = face_count(y->base), g = generalized_boundary_length(y->base), c = cancellation(y->base);
    ++count[f];
    if (g != 4 * f - 2 * c || g % 2 != 0) ++broken;
  }
  json counts = json::object();
  a.text = "faces,count\n";
  for (int k = 1; k <= o.faces; ++k) {
    counts[std::to_string(k)] = count[k];
    a.text += std::to_string(k) + "," + std::to_string(count[k]) + "\n";
  }
  a.payload["counts"] = counts;
  a.payload["identity_failures"] = broken;
  return broken == 0 ? 0 : 1;
}

int cmd_scan_iso(const Options& o, Artifact& a) {
  require_format(o, {"json", "csv"});
  if (o.k_faces < 1 || o.k_faces > 3) throw UsageError("--K must be 1, 2 or 3");
  json cfg = presentation_config(o);
  cfg["K"] = o.k_faces;
  cfg["eps"] = o.eps;
  a.header["config"] = cfg;
  const Presentation p = sampled(o);
  IsoParams params;
  params.d = o.density;
  params.eps = o.eps;
  const auto candidates = local_iso_candidates(o.k_faces, params);
  const auto found = scan_local_iso(p.relators, candidates, params, o.threads);
  a.payload["presentation"] = io::to_json(p);
  a.payload["candidates"] = candidates.size();
  a.payload["violations"] = found.size();
  json wit = json::array();
  a.text = "index,faces,cancel,threshold\n";
  for (std::size_t i = 0; i < found.size(); ++i) {
    const auto& v = found[i];
    a.text += std::to_string(i) + "," + std::to_string(v.report.faces) + "," + std::to_string(v.report.cancel) + "," +
              std::to_string(v.report.cancel_threshold) + "\n";
    if (i >= 10) continue;
    json words = json::array();
    for (const Relator& r : v.witness.words) words.push_back(to_string(r.word()));
    wit.push_back({{"complex", io::to_json(v.complex.base)},
                   {"words", words},
                   {"cancel", v.report.cancel},
                   {"threshold", v.report.cancel_threshold}});
  }
  a.payload["witnesses"] = wit;
  return found.empty() ? 0 : 1;
}

int cmd_special_cells(const Options& o, Artifact& a) {
  require_format(o, {"json", "csv"});
  a.header["config"] = presentation_config(o);
  const Presentation p = sampled(o);
  const SpecialCellsReport rep = check_special_cells(p.relators);
  a.payload["presentation"] = io::to_json(p);
  a.payload["three_shared_cross"] = word_list(rep.three_shared_cross);
  a.payload["three_shared_same"] = word_list(rep.three_shared_same);
  a.payload["strongly_adjacent"] = word_list(rep.strongly_adjacent);
  json third = json::array();
  for (const ThirdCellWitness& t : rep.third_cells)
    third.push_back({{"pair", {t.pair.first, t.pair.second}},
                     {"third", t.third},
                     {"third_offset", t.third_offset},
                     {"third_inverted", t.third_inverted},
                     {"union_boundary", to_string(t.union_boundary)}});
  a.payload["third_cells"] = third;
  a.text = "category,first,second,first_offset,second_offset,second_inverted,word\n";
  auto rows = [&](const char* cat, const std::vector<PathMatch>& ms) {
    for (const PathMatch& m : ms)
      a.text += std::string(cat) + "," + std::to_string(m.first) + "," + std::to_string(m.second) + "," +
                std::to_string(m.first_offset) + "," + std::to_string(m.second_offset) + "," +
                (m.second_inverted ? "1" : "0") + "," + to_string(m.word) + "\n";
  };
  rows("three_shared_cross", rep.three_shared_cross);
  rows("three_shared_same", rep.three_shared_same);
  rows("strongly_adjacent", rep.strongly_adjacent);
  return rep.cross_relator_witnesses() == 0 ? 0 : 1;
}

int cmd_ball(const Options& o, Artifact& a) {
  require_format(o, {"json", "dot"});
  if (o.radius < 0) throw UsageError("--radius must be non-negative");
  json cfg = {{"presentation", o.presentation}, {"radius", o.radius}, {"eps0", o.eps0}, {"hard_cap", o.hard_cap}};
  Presentation p;
  if (o.presentation == "torus") {
    p = torus_presentation();
  } else if (o.presentation == "sampled") {
    p = sampled(o);
    cfg.update(presentation_config(o));
  } else {
    throw UsageError("--presentation is sampled or torus");
  }
  a.header["config"] = cfg;
  WordProblemBudget budget = default_budget(p);
  budget.eps0 = o.eps0;
  budget.hard_cap = o.hard_cap;
  try {
    budget.area_cap(1, p.density);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const CayleyBall ball = build_ball(p, o.radius, budget, o.threads);
  a.payload.update(io::to_json(ball, p));
  a.text = io::complex_dot(ball.base, "ball");
  return 0;
}

int cmd_fixtures(const Options& o, Artifact& a) {
  require_format(o, {"json", "dot"});
  if (o.fixture.empty()) throw UsageError("--name is required; one of z2, staircase, comparison, annulus, "
                                          "repeated-face, house, house-nonconforming, special-pairs");
  a.header["config"] = source_config(o);
  const Fixture f = load_source(o);
  a.payload.update(io::to_json(f));
  a.text = io::complex_dot(f.complex, f.name);
  return 0;
}

int cmd_walls(const Options& o, Artifact& a) {
  require_format(o, {"json", "dot"});
  json cfg = source_config(o);
  cfg["kinds"] = o.kinds;
  a.header["config"] = cfg;
  const auto kinds = parse_kinds(o.kinds);
  const Fixture f = load_source(o);
  const PaintedComplex pc = paint(f.complex);
  bool all_trees = true;
  json list = json::array();
  std::vector<Hypergraph> every;
  for (HypergraphKind k : kinds) {
    const auto hs = trace_hypergraphs(pc, k);
    for (const Hypergraph& h : hs) {
      const TreeCheck t = is_embedded_tree(h);
      const Components c = complement_components(pc.base, h);
      json entry = {{"kind", to_string(k)},
                    {"vertices", h.vertices},
                    {"edges", gamma_json(h.edges)},
                    {"carrier", h.carrier},
                    {"tree", t.tree},
                    {"components", c.count},
                    {"boundary_open", c.boundary_open}};
      if (!t.tree) {
        all_trees = false;
        entry["witness"] = t.witness == TreeCheck::Witness::cycle ? "cycle" : "repeated_face";
        entry["cycle"] = t.cycle;
        entry["repeated_face"] = t.repeated_face;
        try {
          const CollaredDiagram d = extract_collared_diagram(pc, h, t);
          entry["collared"] = {{"corner", d.corner},
                               {"cornerless", d.cornerless},
                               {"k", d.k},
                               {"k_prime", d.k_prime},
                               {"faces", d.base_faces},
                               {"generalized_boundary", d.generalized_boundary},
                               {"broken", d.broken}};
        } catch (const ExtractionFailed& e) {
          entry["collared"] = {{"error", e.what()}};
        }
      }
      list.push_back(entry);
      every.push_back(h);
    }
  }
  json pairs = json::array();
  for (const StrongPair& s : pc.pairs) pairs.push_back({s.first, s.second});
  a.payload["pairs"] = pairs;
  a.payload["hypergraphs"] = list;
  a.payload["all_trees"] = all_trees;
  a.text = hypergraphs_dot(every);
  return all_trees ? 0 : 1;
}

int cmd_wall_metric(const Options& o, Artifact& a) {
  require_format(o, {"json", "csv"});
  json cfg = source_config(o);
  cfg["kinds"] = o.kinds;
  a.header["config"] = cfg;
  const auto kinds = parse_kinds(o.kinds);
  const Fixture f = load_source(o);
  const PaintedComplex pc = paint(f.complex);
  const WallDecomposition w = build_walls(pc, kinds, o.threads);
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < pc.base.num_vertices; ++x)
    for (int y = x + 1; y < pc.base.num_vertices; ++y) pairs.push_back({x, y});
  const LowerBoundReport r = check_wall_lower_bound(w, pc.base, pairs);
  a.text = lower_bound_csv(r);
  json rows = json::array();
  for (const LowerBoundRow& row : r.rows)
    rows.push_back({row.x, row.y, row.d_edge, row.d_wall, row.bound, to_string(row.status)});
  a.payload["columns"] = {"x", "y", "d_edge", "d_wall", "bound", "status"};
  a.payload["rows"] = rows;
  a.payload["walls"] = w.walls.size();
  a.payload["passed"] = r.passed;
  a.payload["failed"] = r.failed;
  a.payload["indeterminate"] = r.indeterminate;
  return r.failed == 0 ? 0 : 1;
}

int cmd_windows(const Options& o, Artifact& a) {
  require_format(o, {"json", "csv"});
  json cfg = source_config(o);
  cfg["kinds"] = o.kinds;
  cfg["from"] = o.from;
  cfg["to"] = o.to;
  a.header["config"] = cfg;
  const auto kinds = parse_kinds(o.kinds);
  const Fixture f = load_source(o);
  const std::string from_name = o.from.empty() ? "x" : o.from, to_name = o.to.empty() ? "y" : o.to;
  const int from = resolve_vertex(f, from_name), to = resolve_vertex(f, to_name);
  const PaintedComplex pc = paint(f.complex);
  const WallDecomposition w = build_walls(pc, kinds, o.threads);
  const int dist = bfs_distances(pc.base, from)[to];
  if (dist < 21) throw UsageError("endpoints are at distance " + std::to_string(dist) + "; windows need >= 21");
  const WindowSweep sweep = sweep_window_crossing(pc.base, w, from, to);
  a.payload["distance"] = dist;
  a.payload["geodesics"] = sweep.geodesics;
  a.payload["failing"] = sweep.failing;
  a.payload["indeterminate"] = sweep.indeterminate;
  a.payload["first_failure"] = io::to_json(sweep.first_failure);
  a.text = "from,to,distance,geodesics,failing,indeterminate\n" + std::to_string(from) + "," + std::to_string(to) +
           "," + std::to_string(dist) + "," + std::to_string(sweep.geodesics) + "," + std::to_string(sweep.failing) +
           "," + std::to_string(sweep.indeterminate) + "\n";
  if (!sweep.first_failure.empty()) {
    const WindowReport rep = check_window_crossing(pc.base, w, sweep.first_failure);
    json win = json::array();
    for (const WindowResult& r : rep.windows) win.push_back({r.first_edge, to_string(r.status), r.wall});
    a.payload["first_failure_windows"] = win;
  }
  return sweep.failing == 0 ? 0 : 1;
}

int cmd_fulfill_mc(const Options& o, Artifact& a) {
  require_format(o, {"json", "csv"});
  if (o.faces < 1 || o.faces > 3) throw UsageError("--faces must be 1, 2 or 3");
  if (o.trials < 100) throw UsageError("--trials must be at least 100");
  if (o.rank < 1 || !(o.density > 0 && o.density < 1)) throw UsageError("bad --rank or --density");
  a.header["config"] = {{"faces", o.faces}, {"index", o.index}, {"rank", o.rank}, {"density", o.density},
                        {"trials", o.trials}};
  const auto all = enumerate_abstract_complexes(o.faces);
  if (o.index < 0 || o.index >= static_cast<int>(all.size()))
    throw UsageError("--index must lie in [0, " + std::to_string(all.size()) + ")");
  const AbstractComplex& y = all[o.index];
  const MonteCarloReport mc = monte_carlo_set_fulfill(y, o.rank, o.density, o.trials, o.seed, o.threads);
  a.payload["complex"] = io::to_json(y.base);
  a.payload["estimate"] = mc.estimate;
  a.payload["ci"] = {mc.ci_low, mc.ci_high};
  a.payload["successes"] = mc.successes;
  a.payload["trials"] = mc.trials;
  a.payload["bound"] = mc.bound;
  int code = 0;
  std::string exact = "";
  try {
    const double p = exact_set_fulfill_probability(y, o.rank, o.density);
    a.payload["exact"] = p;
    a.payload["exact_in_ci"] = p >= mc.ci_low && p <= mc.ci_high;
    if (!(p >= mc.ci_low && p <= mc.ci_high)) code = 1;
    std::ostringstream s;
    s << p;
    exact = s.str();
  } catch (const Infeasible&) {
    a.payload["exact"] = nullptr;
  }
  std::ostringstream row;
  row << "trials,successes,estimate,ci_low,ci_high,exact\n"
      << mc.trials << "," << mc.successes << "," << mc.estimate << "," << mc.ci_low << "," << mc.ci_high << ","
      << exact << "\n";
  a.text = row.str();
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Square model of random groups: sampling, Cayley balls, walls and their checks", "sqm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot"}));
  app.add_option("--out", o.out, "Write the artifact here instead of standard output");
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--seed", o.seed, "Seed for every random choice");
  app.set_version_flag("--version", version());

  auto presentation_opts = [&](CLI::App* s) {
    s->add_option("--rank", o.rank, "Number of generators n")->check(CLI::PositiveNumber);
    s->add_option("--density", o.density, "Density d in (0,1)");
    s->add_option("--method", o.method, "Sampling method")->check(CLI::IsMember({"auto", "shuffle", "rejection"}));
  };
  auto source_opts = [&](CLI::App* s) {
    s->add_option("--fixture", o.fixture, "Built-in fixture");
    s->add_option("--input", o.input, "Artifact written by `fixtures` or `ball`");
    s->add_option("--radius", o.radius, "z2 fixture radius");
    s->add_option("--length", o.length, "staircase geodesic length");
    s->add_option("--k", o.annulus, "annulus size");
    s->add_option("--kinds", o.kinds, "Hypergraph kinds")->delimiter(',');
  };

  auto* sample = app.add_subcommand("sample", "Sample a presentation");
  presentation_opts(sample);
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate abstract complexes and check the identity");
  enumerate->add_option("--faces", o.faces, "Maximum face count");
  enumerate->add_option("--mode", o.mode, "shapes or decorated");
  auto* scan = app.add_subcommand("scan-iso", "Scan small complexes for local isoperimetric violations");
  presentation_opts(scan);
  scan->add_option("--K", o.k_faces, "Maximum face count");
  scan->add_option("--eps", o.eps, "Slack epsilon");
  auto* special = app.add_subcommand("special-cells", "Shared paths between relator cells");
  presentation_opts(special);
  auto* ball = app.add_subcommand("ball", "Build a ball of the Cayley complex");
  presentation_opts(ball);
  ball->add_option("--presentation", o.presentation, "sampled or torus");
  ball->add_option("--radius", o.radius, "Ball radius");
  ball->add_option("--eps0", o.eps0, "Isoperimetric slack for the area cap");
  ball->add_option("--hard-cap", o.hard_cap, "Search states per word-problem query");
  auto* walls = app.add_subcommand("walls", "Trace hypergraphs and check they are embedded trees");
  source_opts(walls);
  auto* metric = app.add_subcommand("wall-metric", "Wall distance against edge distance for every vertex pair");
  source_opts(metric);
  auto* windows = app.add_subcommand("windows", "15-edge window crossing on every geodesic between two vertices");
  source_opts(windows);
  windows->add_option("--from", o.from, "Start vertex (id or fixture name; default x)");
  windows->add_option("--to", o.to, "End vertex (id or fixture name; default y)");
  auto* mc = app.add_subcommand("fulfill-mc", "Monte Carlo fulfilment probability against the exact value");
  mc->add_option("--faces", o.faces, "Maximum face count of the enumeration");
  mc->add_option("--index", o.index, "Complex index in the enumeration");
  mc->add_option("--rank", o.rank, "Alphabet size m")->check(CLI::PositiveNumber);
  mc->add_option("--density", o.density, "Density d");
  mc->add_option("--trials", o.trials, "Monte Carlo trials");
  auto* fixtures = app.add_subcommand("fixtures", "Write a built-in fixture");
  fixtures->add_option("--name", o.fixture, "Fixture name");
  fixtures->add_option("--radius", o.radius, "z2 radius");
  fixtures->add_option("--length", o.length, "staircase geodesic length");
  fixtures->add_option("--k", o.annulus, "annulus size");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "sqm: " << e.what() << "\n" << app.help();
    return 2;
  }

  Artifact a;
  CLI::App* chosen = app.get_subcommands().front();
  a.header = {{"version", version()}, {"seed", o.seed}};
  int code = 0;
  try {
    const std::string name = chosen->get_name();
    if (name == "sample") code = cmd_sample(o, a);
    else if (name == "enumerate") code = cmd_enumerate(o, a);
    else if (name == "scan-iso") code = cmd_scan_iso(o, a);
    else if (name == "special-cells") code = cmd_special_cells(o, a);
    else if (name == "ball") code = cmd_ball(o, a);
    else if (name == "walls") code = cmd_walls(o, a);
    else if (name == "wall-metric") code = cmd_wall_metric(o, a);
    else if (name == "windows") code = cmd_windows(o, a);
    else if (name == "fulfill-mc") code = cmd_fulfill_mc(o, a);
    else if (name == "fixtures") code = cmd_fixtures(o, a);
    a.header["config"]["command"] = name;
    a.header["config"]["format"] = o.format;
  } catch (const UsageError& e) {
    err << "sqm: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "sqm: " << e.what() << "\n";
    return 1;
  }

  const std::string text = a.render(o.format);
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "sqm: cannot write " << o.out << "\n";
      return 2;
    }
    file << text;
  }
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace sqm::cli
