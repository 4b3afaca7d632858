#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gd/error.hpp"
#include "gd/gallai.hpp"
#include "gd/graph.hpp"
#include "gd/io.hpp"
#include "gd/ktree.hpp"
#include "gd/lab.hpp"
#include "gd/maxdeg4.hpp"
#include "gd/planar6.hpp"
#include "gd/structure.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

enum Exit {
  kOk = 0,
  kFailed = 1,
  kSpecial = 2,
  kInapplicable = 3,
  kCapped = 4,
  kUsage = 64,
  kInternal = 70,
};

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0   success\n"
    "  1   verify: decomposition rejected; bench: bound satisfaction below 100%\n"
    "  2   decompose: the input is a special graph (K3, K5, K5minus)\n"
    "  3   decompose: the chosen class does not apply to the input\n"
    "  4   endgame or oracle size cap exceeded\n"
    "  64  malformed input file or command line\n"
    "  70  internal error; the state dump path is printed on stderr\n";

enum class Mode { Paths, Cycles };
enum class Class { Auto, Tw3, MaxDeg4, Planar6 };

const char* to_string(Class c) {
  switch (c) {
    case Class::Auto: return "auto";
    case Class::Tw3: return "tw3";
    case Class::MaxDeg4: return "maxdeg4";
    case Class::Planar6: return "planar6";
  }
  return "?";
}

struct RunOptions {
  Mode mode = Mode::Paths;
  Class cls = Class::Auto;
  int endgame_cap = 16;
  bool assume_planar = false;
};

struct RunResult {
  gd::SpecialGraph special = gd::SpecialGraph::None;
  Class used = Class::Auto;
  gd::Decomposition d;
  int n = 0;
  int bound = 0;
  std::vector<std::string> steps;
};

// Thrown for a class that cannot run on the input or in the requested mode.
struct Inapplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void push_tags(std::vector<std::string>& steps, const std::string& tag, long count) {
  for (long i = 0; i < count; ++i) steps.push_back(tag);
}

Class pick_class(const gd::Graph& g, const RunOptions& opt) {
  if (opt.cls != Class::Auto) return opt.cls;
  if (gd::embed_partial_3tree(g)) return Class::Tw3;
  if (g.max_degree() <= 4) return Class::MaxDeg4;
  if (opt.assume_planar && opt.mode == Mode::Paths) {
    auto gi = gd::girth(g);
    if (!gi || *gi >= 6) return Class::Planar6;
  }
  throw Inapplicable("no class applies: not a partial 3-tree, maximum degree " + std::to_string(g.max_degree()) +
                     (opt.assume_planar ? "" : ", and --assume-planar not given"));
}

// Runs the driver and re-verifies its output. Special outcomes are returned
// with an empty decomposition.
RunResult run_driver(const gd::Graph& g, const RunOptions& opt) {
  RunResult res;
  res.used = pick_class(g, opt);
  res.n = g.non_isolated();
  res.bound = opt.mode == Mode::Paths ? res.n / 2 : std::max(0, (res.n - 1) / 2);
  gd::EndgameConfig cfg{opt.endgame_cap};
  std::vector<gd::ReductionStep> log;

  if (opt.mode == Mode::Paths) {
    gd::PathOutcome out;
    switch (res.used) {
      case Class::Tw3: out = gd::decompose_paths_tw3(g, cfg, &log); break;
      case Class::MaxDeg4: out = gd::decompose_paths_maxdeg4(g, cfg, &log); break;
      case Class::Planar6: {
        gd::Planar6Stats st;
        out.paths = gd::decompose_paths_planar6(g, &st);
        push_tags(res.steps, "ReducingPath", st.levels);
        break;
      }
      case Class::Auto: break;
    }
    for (const auto& s : log) res.steps.push_back(s.label());
    if (out.is_special()) {
      res.special = out.special;
      return res;
    }
    res.d = std::move(out.paths);
  } else {
    switch (res.used) {
      case Class::Tw3:
        res.d = gd::decompose_cycles_tw3(g);
        res.steps.push_back("Tw3CycleDriver");
        break;
      case Class::MaxDeg4: {
        gd::CycleStats st;
        res.d = gd::decompose_cycles_maxdeg4(g, &st);
        push_tags(res.steps, "SmallHamiltonian", st.hamiltonian);
        push_tags(res.steps, "K4FreeRoute", st.k4_free);
        for (int i = 0; i < 6; ++i) push_tags(res.steps, "SixCircuit(D" + std::to_string(i + 1) + ")", st.chosen[i]);
        push_tags(res.steps, "SharedVertexCase", st.special_case);
        break;
      }
      case Class::Planar6: throw Inapplicable("planar6 decomposes into paths only");
      case Class::Auto: break;
    }
  }

  gd::Verdict v = gd::verify_decomposition(g, res.d);
  bool kind_ok = opt.mode == Mode::Paths ? res.d.all_paths() : res.d.all_cycles();
  if (!v.ok() || !kind_ok || res.d.size() > res.bound) {
    std::string why = !v.ok() ? std::string(gd::to_string(v.violation)) + " in element " + std::to_string(v.element)
                      : !kind_ok ? std::string("wrong element kind")
                                 : "size " + std::to_string(res.d.size()) + " above bound " + std::to_string(res.bound);
    throw gd::Error(gd::ErrorKind::BoundViolated, "driver output rejected: " + why, gd::edge_list_dump(g));
  }
  return res;
}

json elements_json(const gd::Decomposition& d) {
  json out = json::array();
  for (const auto& e : d.elements) {
    json ids = json::array();
    for (int v : e.vertices) ids.push_back(v + 1);
    if (e.kind == gd::ElementKind::Cycle && !e.vertices.empty()) ids.push_back(e.vertices.front() + 1);
    out.push_back(std::move(ids));
  }
  return out;
}

void print_elements(std::ostream& out, const gd::Decomposition& d) {
  for (const auto& e : d.elements) {
    for (std::size_t i = 0; i < e.vertices.size(); ++i) out << (i ? " " : "") << e.vertices[i] + 1;
    if (e.kind == gd::ElementKind::Cycle && !e.vertices.empty()) out << ' ' << e.vertices.front() + 1;
    out << '\n';
  }
}

const char* mode_name(Mode m) { return m == Mode::Paths ? "paths" : "cycles"; }

std::string dump_state(const std::string& what, const std::string& state, const std::string& input) {
  namespace fs = std::filesystem;
  auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  fs::path p = fs::temp_directory_path() / ("gdecomp-state-" + std::to_string(stamp) + ".txt");
  std::ofstream f(p);
  f << "# " << what << "\n# input: " << input << "\n" << state << "\n";
  return p.string();
}

bool is_inapplicable(gd::ErrorKind k) {
  switch (k) {
    case gd::ErrorKind::NotPartialThreeTree:
    case gd::ErrorKind::MaxDegreeExceeded:
    case gd::ErrorKind::GirthTooSmall:
    case gd::ErrorKind::NotConnected:
    case gd::ErrorKind::NotEulerian:
    case gd::ErrorKind::NotEvenGraph:
    case gd::ErrorKind::StructuralAssumptionViolated:
      return true;
    default:
      return false;
  }
}

// Maps library errors to exit codes, writing a state dump for internal ones.
int report_error(const gd::Error& e, const std::string& input) {
  std::cerr << "error: " << e.what() << '\n';
  if (e.kind() == gd::ErrorKind::ParseError || e.kind() == gd::ErrorKind::InvalidSpec) return kUsage;
  if (is_inapplicable(e.kind())) return kInapplicable;
  if (e.kind() == gd::ErrorKind::EndgameTooLarge || e.kind() == gd::ErrorKind::CapExceeded) return kCapped;
  std::cerr << "state dump: " << dump_state(e.what(), e.state(), input) << '\n';
  return kInternal;
}

int cmd_decompose(const std::string& input, const RunOptions& opt, const std::string& format) {
  gd::Graph g = gd::read_graph_file(input);
  RunResult r;
  try {
    r = run_driver(g, opt);
  } catch (const Inapplicable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInapplicable;
  }
  bool as_json = format == "json";
  if (r.special != gd::SpecialGraph::None) {
    if (as_json)
      std::cout << json{{"kind", "special"}, {"special", gd::to_string(r.special)}, {"n", r.n}, {"steps", r.steps}}.dump()
                << '\n';
    else
      std::cout << "special: " << gd::to_string(r.special) << '\n';
    return kSpecial;
  }
  if (as_json) {
    json j{{"kind", mode_name(opt.mode)}, {"n", r.n},     {"bound", r.bound}, {"size", r.d.size()},
           {"elements", elements_json(r.d)}, {"steps", r.steps}, {"verified", true}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << mode_name(opt.mode) << ": " << r.d.size() << " (bound " << r.bound << ", n " << r.n << ", class "
              << to_string(r.used) << ")\n";
    print_elements(std::cout, r.d);
  }
  return kOk;
}

gd::Decomposition read_decomposition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gd::Error(gd::ErrorKind::ParseError, "cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw gd::Error(gd::ErrorKind::ParseError, path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.contains("elements") || !j["elements"].is_array())
    throw gd::Error(gd::ErrorKind::ParseError, path + ": expected an object with \"kind\" and \"elements\"");
  std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  if (kind != "paths" && kind != "cycles")
    throw gd::Error(gd::ErrorKind::ParseError, path + ": \"kind\" must be \"paths\" or \"cycles\"");
  gd::Decomposition d;
  for (const auto& el : j["elements"]) {
    if (!el.is_array()) throw gd::Error(gd::ErrorKind::ParseError, path + ": elements must be arrays of ids");
    std::vector<int> ids;
    for (const auto& v : el) {
      if (!v.is_number_integer()) throw gd::Error(gd::ErrorKind::ParseError, path + ": vertex ids must be integers");
      ids.push_back(v.get<int>() - 1);
    }
    if (kind == "cycles") {
      if (ids.size() < 2 || ids.front() != ids.back())
        throw gd::Error(gd::ErrorKind::ParseError, path + ": a cycle must repeat its first vertex at the end");
      ids.pop_back();
      d.add_cycle(std::move(ids));
    } else {
      d.add_path(std::move(ids));
    }
  }
  return d;
}

int cmd_verify(const std::string& input, const std::string& dec_path) {
  gd::Graph g = gd::read_graph_file(input);
  gd::Decomposition d = read_decomposition(dec_path);
  gd::Verdict v = gd::verify_decomposition(g, d);
  if (v.ok()) {
    std::cout << "valid: " << d.size() << " elements\n";
    return kOk;
  }
  std::cout << "invalid: " << gd::to_string(v.violation);
  if (v.element >= 0) std::cout << " in element " << v.element + 1;
  if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
  std::cout << '\n';
  return kFailed;
}

int cmd_exact(const std::string& input, Mode mode, gd::ExactCaps caps, const std::string& format) {
  gd::Graph g = gd::read_graph_file(input);
  gd::ExactResult r = mode == Mode::Paths ? gd::exact_path_number(g, caps) : gd::exact_cycle_number(g, caps);
  const char* name = mode == Mode::Paths ? "pn" : "cn";
  if (format == "json") {
    json j{{"kind", mode_name(mode)}, {"n", g.non_isolated()}, {name, r.value}, {"size", r.witness.size()},
           {"elements", elements_json(r.witness)}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << name << " = " << r.value << '\n';
    print_elements(std::cout, r.witness);
  }
  return kOk;
}

gd::Family family_or_throw(const std::string& name) {
  auto f = gd::parse_family(name);
  if (!f) throw CLI::ValidationError("--family", "unknown family '" + name + "'");
  return *f;
}

int cmd_gen(const gd::GenSpec& spec, const std::string& out_path) {
  gd::Graph g = gd::generate(spec);
  std::vector<std::string> comments;
  if (spec.family == gd::Family::Special) {
    comments.push_back("special " + spec.special);
  } else {
    comments.push_back(std::string("family ") + gd::to_string(spec.family) + " n " + std::to_string(spec.n) +
                       " seed " + std::to_string(spec.seed));
    comments.push_back(std::string("rng ") + gd::Rng::algorithm);
  }
  if (spec.family == gd::Family::PartialThreeTree) comments.push_back("keep " + std::to_string(spec.keep));
  if (out_path == "-") {
    gd::write_graph(std::cout, g, comments);
  } else {
    std::ofstream f(out_path);
    if (!f) throw gd::Error(gd::ErrorKind::InvalidSpec, "cannot write '" + out_path + "'");
    gd::write_graph(f, g, comments);
  }
  return kOk;
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    int a = std::stoi(s.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(s);
    std::string rest = s.substr(dots + 2);
    int b = std::stoi(rest, &used);
    if (used != rest.size() || a > b) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n-range", "expected A..B with A <= B, got '" + s + "'");
  }
}

struct BenchOptions {
  gd::GenSpec base;
  int count = 100;
  std::pair<int, int> range{6, 40};
  RunOptions run;
  std::string format = "text";
};

int cmd_bench(const BenchOptions& b) {
  auto t0 = std::chrono::steady_clock::now();
  gd::Rng rng(b.base.seed);
  int satisfied = 0, special = 0;
  std::map<std::string, long> steps;
  std::map<std::string, long> failures;
  for (int i = 0; i < b.count; ++i) {
    gd::GenSpec spec = b.base;
    spec.n = b.range.first + static_cast<int>(rng.below(static_cast<std::uint64_t>(b.range.second - b.range.first + 1)));
    spec.seed = rng.next();
    gd::Graph g = gd::generate(spec);
    try {
      RunResult r = run_driver(g, b.run);
      for (const auto& s : r.steps) ++steps[s];
      if (r.special != gd::SpecialGraph::None) {
        // A special outcome only counts when the whole graph really is one.
        if (gd::recognize_special(gd::compact(g).graph) != r.special) {
          ++failures["special-mismatch"];
          continue;
        }
        ++special;
      }
      ++satisfied;
    } catch (const gd::Error& e) {
      ++failures[gd::to_string(e.kind())];
    } catch (const Inapplicable&) {
      ++failures["inapplicable"];
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double rate = b.count ? 100.0 * satisfied / b.count : 100.0;
  std::vector<std::pair<std::string, long>> hist(steps.begin(), steps.end());
  std::stable_sort(hist.begin(), hist.end(), [](const auto& x, const auto& y) { return x.second > y.second; });

  if (b.format == "json") {
    json h = json::object();
    for (const auto& [k, v] : hist) h[k] = v;
    json j{{"family", gd::to_string(b.base.family)}, {"mode", mode_name(b.run.mode)}, {"count", b.count},
           {"satisfied", satisfied}, {"special", special}, {"rate", rate}, {"failures", failures},
           {"steps", h}, {"seconds", secs}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "family " << gd::to_string(b.base.family) << ", mode " << mode_name(b.run.mode) << ", n "
              << b.range.first << ".." << b.range.second << ", " << b.count << " instances\n";
    std::cout << "bound satisfied: " << satisfied << "/" << b.count << " (" << rate << "%), special " << special
              << '\n';
    for (const auto& [k, v] : failures) std::cout << "  failure " << k << ": " << v << '\n';
    std::cout << "steps:\n";
    for (const auto& [k, v] : hist) std::cout << "  " << k << ": " << v << '\n';
    std::cout << "wall time: " << secs << " s\n";
  }
  return satisfied == b.count ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge decompositions of graphs into few paths or cycles"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  const std::map<std::string, Mode> modes{{"paths", Mode::Paths}, {"cycles", Mode::Cycles}};
  const std::map<std::string, Class> classes{
      {"auto", Class::Auto}, {"tw3", Class::Tw3}, {"maxdeg4", Class::MaxDeg4}, {"planar6", Class::Planar6}};
  auto formats = CLI::IsMember({"json", "text"});

  std::string input, dec_path, format = "json", out_path = "-", family, n_range = "6..40";
  RunOptions run;
  gd::ExactCaps caps;
  gd::GenSpec gen;
  BenchOptions bench;

  auto* dec = app.add_subcommand("decompose", "Decompose a graph with one of the bounded drivers");
  dec->add_option("--input", input, "Graph file")->required();
  dec->add_option("--mode", run.mode, "paths or cycles")->transform(CLI::CheckedTransformer(modes));
  dec->add_option("--class", run.cls, "auto, tw3, maxdeg4 or planar6")->transform(CLI::CheckedTransformer(classes));
  dec->add_option("--endgame-cap", run.endgame_cap, "Vertex cap for exact endgames")->capture_default_str();
  dec->add_option("--format", format, "json or text")->check(formats)->capture_default_str();
  dec->add_flag("--assume-planar", run.assume_planar, "Let auto pick planar6 for inputs of girth at least 6");

  auto* ver = app.add_subcommand("verify", "Check a decomposition against a graph");
  ver->add_option("--input", input, "Graph file")->required();
  ver->add_option("--decomposition", dec_path, "Decomposition JSON as written by decompose")->required();

  Mode exact_mode = Mode::Paths;
  auto* ex = app.add_subcommand("exact", "Exact path or cycle number by branch and bound");
  ex->add_option("--input", input, "Graph file")->required();
  ex->add_option("--mode", exact_mode, "paths or cycles")->transform(CLI::CheckedTransformer(modes));
  ex->add_option("--cap-vertices", caps.vertices, "Vertex cap")->capture_default_str();
  ex->add_option("--cap-edges", caps.edges, "Edge cap")->capture_default_str();
  ex->add_option("--format", format, "json or text")->check(formats)->capture_default_str();

  auto* gn = app.add_subcommand("gen", "Generate a seeded instance");
  gn->add_option("--family", family,
                 "three-tree, partial-three-tree, eulerian-partial-three-tree, maxdeg4, eulerian-maxdeg4, hex, "
                 "double-centered or special")
      ->required();
  gn->add_option("--n", gen.n, "Target vertex count")->capture_default_str();
  gn->add_option("--seed", gen.seed, "64-bit seed")->capture_default_str();
  gn->add_option("--out", out_path, "Output file, - for stdout")->capture_default_str();
  gn->add_option("--keep", gen.keep, "Edge-keep probability for partial-three-tree")->capture_default_str();
  gn->add_option("--special", gen.special, "Name for the special family");

  auto* bn = app.add_subcommand("bench", "Run a driver and the checker over a seeded corpus");
  bn->add_option("--family", family, "Instance family, as for gen")->required();
  bn->add_option("--count", bench.count, "Number of instances")->capture_default_str();
  bn->add_option("--n-range", n_range, "Vertex counts A..B")->capture_default_str();
  bn->add_option("--seed", bench.base.seed, "64-bit seed")->capture_default_str();
  bn->add_option("--mode", bench.run.mode, "paths or cycles")->transform(CLI::CheckedTransformer(modes));
  bn->add_option("--class", bench.run.cls, "Driver class")->transform(CLI::CheckedTransformer(classes));
  bn->add_option("--endgame-cap", bench.run.endgame_cap, "Vertex cap for exact endgames")->capture_default_str();
  bn->add_option("--keep", bench.base.keep, "Edge-keep probability for partial-three-tree")->capture_default_str();
  bn->add_flag("--assume-planar", bench.run.assume_planar, "Let auto pick planar6");
  std::string bench_format = "text";
  bn->add_option("--format", bench_format, "json or text")->check(formats)->capture_default_str();

  try {
    app.parse(argc, argv);
    if (*gn) {
      gen.family = family_or_throw(family);
    } else if (*bn) {
      bench.base.family = family_or_throw(family);
      bench.range = parse_range(n_range);
      bench.format = bench_format;
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dec) return cmd_decompose(input, run, format);
    if (*ver) return cmd_verify(input, dec_path);
    if (*ex) return cmd_exact(input, exact_mode, caps, format);
    if (*gn) return cmd_gen(gen, out_path);
    if (*bn) return cmd_bench(bench);
  } catch (const gd::Error& e) {
    return report_error(e, input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cerr << "state dump: " << dump_state(e.what(), "", input) << '\n';
    return kInternal;
  }
  return kUsage;
}
