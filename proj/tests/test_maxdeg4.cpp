#include <algorithm>
#include <map>
#include <sstream>

#include "doctest.h"
#include "gadgets.hpp"
#include "gd/error.hpp"
#include "gd/lab.hpp"
#include "gd/maxdeg4.hpp"
#include "gd/structure.hpp"

using namespace gd;

namespace {

// "1-2 2-3 ..." with 1-based vertex ids.
Graph parse_edges(int n, const std::string& text) {
  Graph g(n);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto dash = tok.find('-');
    g.add_edge(std::stoi(tok.substr(0, dash)) - 1, std::stoi(tok.substr(dash + 1)) - 1);
  }
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

void check_paths(const Graph& g, const PathOutcome& out) {
  REQUIRE_FALSE(out.is_special());
  CHECK(verify_decomposition(g, out.paths).ok());
  CHECK(out.paths.all_paths());
  CHECK(out.paths.size() <= g.non_isolated() / 2);
}

void check_cycles(const Graph& g, const Decomposition& d) {
  CHECK(verify_decomposition(g, d).ok());
  CHECK(d.all_cycles());
  CHECK(d.size() <= (g.non_isolated() - 1) / 2);
}

bool is_hamiltonian_cycle(const Graph& g, const VertexCycle& c) {
  if (static_cast<int>(c.size()) != g.non_isolated()) return false;
  VertexCycle sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (size_t i = 0; i < c.size(); ++i)
    if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

int shared_interior(const VertexPath& a, const VertexPath& b) {
  int s = 0;
  for (size_t i = 1; i + 1 < a.size(); ++i) s += std::find(b.begin(), b.end(), a[i]) != b.end();
  return s;
}

}  // namespace

TEST_CASE("max-degree-4 path driver on named graphs") {
  CHECK(decompose_paths_maxdeg4(complete_graph(5)).special == SpecialGraph::K5);
  CHECK(decompose_paths_maxdeg4(k5_minus()).special == SpecialGraph::K5minus);
  CHECK(decompose_paths_maxdeg4(complete_graph(3)).special == SpecialGraph::K3);
  for (const Graph& g : {cycle_graph(6), special_graph("octahedron"), special_graph("K44_minus_PM"),
                         special_graph("Petersen"), complete_graph(4)}) {
    auto out = decompose_paths_maxdeg4(g);
    check_paths(g, out);
  }
  CHECK(decompose_paths_maxdeg4(cycle_graph(6)).paths.size() == 2);
  try {
    decompose_paths_maxdeg4(complete_graph(6));
    FAIL("expected MaxDegreeExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MaxDegreeExceeded);
  }
  Graph two(6);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  CHECK_THROWS_AS(decompose_paths_maxdeg4(two), Error);
}

TEST_CASE("max-degree-4 path driver reaches every K4-subdivision branch") {
  // One witness per branch, found by random search; the branch fires at the top level.
  const std::pair<const char*, const char*> witnesses[] = {
      {"i-2", "1-2 1-3 1-5 1-6 2-3 2-4 2-5 3-5 3-6"},
      {"i-k5minus", "1-2 1-4 1-5 1-6 2-3 2-5 2-6 3-4 3-6 4-5 4-6"},
      {"z-1", "1-2 1-3 1-6 2-3 2-4 2-6 3-4 3-6 4-5 4-6"},
      {"z-1-pendant", "1-2 2-3 2-4 2-7 3-4 3-5 3-7 4-5 4-7 5-6 5-7"},
      {"z-2", "1-2 1-3 1-4 1-6 2-3 2-4 2-5 3-4 3-5 4-5 5-6"},
      {"z-3", "1-2 1-4 1-7 2-3 2-4 2-7 3-4 3-5 3-6 5-6 6-7"},
      {"z-4-adjacent", "1-2 1-3 1-5 1-6 2-3 2-4 2-5 3-4 3-6 4-5 4-6 5-6"},
      {"z-4", "1-2 1-3 2-4 2-5 2-6 3-4 3-5 3-7 4-6 4-7 5-6 5-7 6-7"},
  };
  for (auto [sub, edges] : witnesses) {
    CAPTURE(sub);
    Graph g = parse_edges(7, edges);
    std::vector<ReductionStep> log;
    auto out = decompose_paths_maxdeg4(g, {}, &log);
    check_paths(g, out);
    REQUIRE_FALSE(log.empty());
    CHECK(log.front().label() == std::string("K4SubdivisionCase(") + sub + ")");
  }
}

TEST_CASE("max-degree-4 path driver on random graphs") {
  std::map<std::string, int> hist;
  for (int i = 0; i < 1500; ++i) {
    const int n = 6 + i % 35;
    Graph g = generate({Family::MaxDeg4, n, static_cast<std::uint64_t>(i + 1)});
    CAPTURE(edge_list_dump(g));
    std::vector<ReductionStep> log;
    auto out = decompose_paths_maxdeg4(g, {}, &log);
    if (out.is_special()) continue;
    check_paths(g, out);
    if (g.non_isolated() <= 10) CHECK(out.paths.size() >= exact_path_number(g).value);
    for (const auto& s : log) ++hist[s.label()];
  }
  for (int i = 0; i < 50; ++i) {
    Graph g = generate({Family::MaxDeg4, 14, static_cast<std::uint64_t>(5000 + i)});
    auto out = decompose_paths_maxdeg4(g);
    check_paths(g, out);
    CHECK(out.paths.size() <= 7);
  }
  std::ostringstream os;
  for (const auto& [k, v] : hist) os << k << "=" << v << " ";
  MESSAGE(os.str());
}

TEST_CASE("double_paths_cycles") {
  // Internally disjoint: one cycle.
  auto d0 = double_paths_cycles({0, 2, 3, 1}, {0, 4, 1});
  CHECK(d0.size() == 1);
  CHECK(verify_decomposition(graph_of(d0, 5), d0).ok());
  // Crossing at one interior vertex.
  VertexPath a{0, 2, 3, 1}, b{0, 4, 3, 5, 1};
  auto d1 = double_paths_cycles(a, b);
  CHECK(d1.size() <= 2);
  CHECK(d1.all_cycles());
  // Theta-like overlap with two shared vertices.
  VertexPath c{0, 2, 3, 4, 5, 1}, e{0, 6, 4, 7, 2, 8, 1};
  auto d2 = double_paths_cycles(c, e);
  CHECK(d2.size() <= 3);
  Graph u = united(graph_of_path(c, 9), graph_of_path(e, 9));
  CHECK(verify_decomposition(u, d2).ok());
  // Reversed second path is accepted.
  CHECK(double_paths_cycles({0, 2, 1}, {1, 3, 0}).size() == 1);

  try {
    double_paths_cycles({0, 2, 1}, {0, 3, 4});
    FAIL("expected EndpointMismatch");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::EndpointMismatch);
  }
  try {
    double_paths_cycles({0, 2, 3, 1}, {0, 2, 4, 1});
    FAIL("expected NotEdgeDisjoint");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotEdgeDisjoint);
  }
}

TEST_CASE("double_paths_cycles on every gadget with at most 10 vertices") {
  constexpr int total = 10;
  long checked = 0, bad = 0;
  gadgets::for_each_double_path(total, [&](const VertexPath& p1, const VertexPath& p2) {
    ++checked;
    Decomposition d = double_paths_cycles(p1, p2);
    Graph u = united(graph_of_path(p1, total), graph_of_path(p2, total));
    if (!verify_decomposition(u, d).ok() || !d.all_cycles() || d.size() > shared_interior(p1, p2) + 1) ++bad;
  });
  MESSAGE(checked << " path pairs");
  CHECK(checked > 50000);
  CHECK(bad == 0);
}

TEST_CASE("hamiltonian_small") {
  for (const Graph& g : {complete_graph(5), cycle_graph(6), special_graph("K44_minus_PM"),
                         special_graph("octahedron")}) {
    auto c = hamiltonian_small(g);
    REQUIRE(c.has_value());
    CHECK(is_hamiltonian_cycle(g, *c));
  }
  CHECK_FALSE(hamiltonian_small(special_graph("Petersen")).has_value());
  Graph star(5);
  for (int i = 1; i < 5; ++i) star.add_edge(0, i);
  CHECK_FALSE(hamiltonian_small(star).has_value());
  try {
    hamiltonian_small(cycle_graph(13));
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionViolated);
  }
}

TEST_CASE("six circuit candidates and the counting identity") {
  int setups = 0;
  for (int i = 0; i < 400; ++i) {
    Graph g = generate({Family::EulerianMaxDeg4, 9 + i % 20, static_cast<std::uint64_t>(i + 31)});
    if (!has_k4_subdivision(g)) continue;
    bool all4 = true;
    auto h = find_k4_subdivision(g);
    for (int x : h->branch) all4 = all4 && g.degree(x) == 4;
    if (!all4) continue;
    CAPTURE(edge_list_dump(g));
    CircuitSetup c = circuit_setup(g);
    ++setups;
    REQUIRE(c.h.valid_in(g));
    CHECK(((c.q1.front() == c.h.branch[0] && c.q1.back() == c.h.branch[1])));
    CHECK(((c.q2.front() == c.h.branch[2] && c.q2.back() == c.h.branch[3])));
    SixCircuitReport rep = six_circuit_report(c.h, c.q1, c.q2);
    int sum = 0;
    for (int r : rep.r) sum += r;
    CHECK(sum == 16 + 2 * rep.sigma);
    Graph hstar = united(c.h.graph(g.n()), united(graph_of_path(c.q1, g.n()), graph_of_path(c.q2, g.n())));
    CHECK(isolated_after(g, hstar) >= 4 + rep.sigma);
    for (int k = 0; k < 6; ++k) {
      Decomposition d = six_circuit_candidate(c.h, c.q1, c.q2, k);
      CHECK(verify_decomposition(hstar, d).ok());
      CHECK(d.all_cycles());
      CHECK(d.size() <= rep.r[k]);
    }
  }
  CHECK(setups > 100);
}

TEST_CASE("max-degree-4 cycle driver on named graphs") {
  auto k5 = decompose_cycles_maxdeg4(complete_graph(5));
  check_cycles(complete_graph(5), k5);
  CHECK(k5.size() == 2);
  Graph oct = special_graph("K6_minus_PM");
  auto d = decompose_cycles_maxdeg4(oct);
  check_cycles(oct, d);
  CHECK(d.size() == 2);
  for (const auto& el : d.elements) CHECK(el.vertices.size() == 6);
  check_cycles(cycle_graph(7), decompose_cycles_maxdeg4(cycle_graph(7)));
  try {
    decompose_cycles_maxdeg4(special_graph("K44_minus_PM"));
    FAIL("expected NotEulerian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEulerian);
  }
  Graph k7 = complete_graph(7);
  try {
    decompose_cycles_maxdeg4(k7);
    FAIL("expected MaxDegreeExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MaxDegreeExceeded);
  }
}

TEST_CASE("max-degree-4 cycle driver never falls through") {
  CycleStats stats;
  long compared = 0;
  for (int i = 0; i < 10000; ++i) {
    const int n = 5 + i % 24;
    Graph g = generate({Family::EulerianMaxDeg4, n, static_cast<std::uint64_t>(i + 1)});
    CAPTURE(edge_list_dump(g));
    Decomposition d = decompose_cycles_maxdeg4(g, &stats);
    check_cycles(g, d);
    if (g.non_isolated() <= 9 && i % 10 == 0) {
      CHECK(d.size() >= exact_cycle_number(g).value);
      ++compared;
    }
  }
  for (int i = 0; i < 30; ++i) {
    Graph g = generate({Family::EulerianMaxDeg4, 20, static_cast<std::uint64_t>(70000 + i)});
    Decomposition d = decompose_cycles_maxdeg4(g);
    check_cycles(g, d);
    CHECK(d.size() <= 9);
  }
  CHECK(stats.fallthrough == 0);
  CHECK(stats.identity_failures == 0);
  CHECK(stats.special_case > 0);
  CHECK(stats.hamiltonian > 0);
  MESSAGE("chosen D1..D6 " << stats.chosen[0] << " " << stats.chosen[1] << " " << stats.chosen[2] << " "
                           << stats.chosen[3] << " " << stats.chosen[4] << " " << stats.chosen[5] << ", shared-vertex "
                           << stats.special_case << ", compared " << compared);
}
