#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "gadgets.hpp"
#include "gd/error.hpp"
#include "gd/lab.hpp"
#include "gd/reduce.hpp"
#include "gd/structure.hpp"

using namespace gd;

namespace {

Graph union_of(const VertexPath& p, const VertexCycle& c, int n) {
  Decomposition d;
  if (p.size() >= 2) d.add_path(p);
  d.add_cycle(c);
  return graph_of(d, n);
}

int cycle_edges_in(const VertexPath& p, const VertexCycle& c) {
  std::set<Edge> ce;
  for (size_t i = 0; i < c.size(); ++i) ce.insert(make_edge(c[i], c[(i + 1) % c.size()]));
  int k = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) k += static_cast<int>(ce.count(make_edge(p[i], p[i + 1])));
  return k;
}

// Exact oracle as the recursion handle, reporting the named exceptions.
PathOutcome exact_recurse(const Graph& g) {
  SpecialGraph s = recognize_special(g);
  if (s == SpecialGraph::K3 || s == SpecialGraph::K5 || s == SpecialGraph::K5minus) return {s, {}};
  return {SpecialGraph::None, exact_path_number(g).witness};
}

}  // namespace

TEST_CASE("two_path_split examples") {
  // a=0 b=1 c=2 d=3
  auto s = two_path_split({3, 0}, {0, 1, 2});
  CHECK(s.p1 == VertexPath{3, 0, 1});
  CHECK(s.p2 == VertexPath{0, 2, 1});
  CHECK(s.branch == SplitCase::FreeNeighbor);

  // A path through four chords of a 5-cycle completes K5-.
  CHECK_THROWS_AS(two_path_split({0, 2, 4, 1, 3}, {0, 1, 2, 3, 4}), Error);
  try {
    two_path_split({0, 2, 4, 1, 3}, {0, 1, 2, 3, 4});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ChordLimitExceeded);
  }
  CHECK(exact_path_number(union_of({0, 2, 4, 1, 3}, {0, 1, 2, 3, 4}, 5)).value == 3);

  auto t = two_path_split({5, 6, 0}, {0, 1, 2, 3});
  Decomposition d;
  d.add_path(t.p1);
  d.add_path(t.p2);
  CHECK(verify_decomposition(union_of({5, 6, 0}, {0, 1, 2, 3}, 7), d).ok());
  CHECK(cycle_edges_in(t.p1, {0, 1, 2, 3}) == 1);

  CHECK_THROWS_AS(two_path_split({5, 6}, {0, 1, 2}), Error);
  CHECK_THROWS_AS(two_path_split({0, 1, 5}, {0, 1, 2}), Error);
}

TEST_CASE("two_path_split exhaustive gadgets") {
  std::map<SplitCase, int> hits;
  long total = 0, four = 0;
  for (int len = 3; len <= 5; ++len)
    gadgets::for_each_path_on_cycle(len, 9, [&](const VertexPath& p, const VertexCycle& c) {
      int chords = chord_count(p, c);
      if (chords > 3) {
        ++four;
        CHECK_THROWS_AS(two_path_split(p, c), Error);
        return;
      }
      ++total;
      PathSplit s;
      REQUIRE_NOTHROW(s = two_path_split(p, c));
      Decomposition d;
      d.add_path(s.p1);
      d.add_path(s.p2);
      bool ok = verify_decomposition(union_of(p, c, 9), d).ok();
      if (!ok) {
        std::string msg;
        for (int v : p) msg += std::to_string(v) + " ";
        FAIL_CHECK("split failed for path " << msg << " len " << len);
      }
      if (chords <= 1) CHECK(cycle_edges_in(s.p1, c) == 1);
      ++hits[s.branch];
    });
  CHECK(total > 10000);
  CHECK(four > 0);
  for (SplitCase sc : {SplitCase::Trivial, SplitCase::FreeNeighbor, SplitCase::LongSegment, SplitCase::FiveApart,
                       SplitCase::FiveA, SplitCase::FiveB, SplitCase::FiveC})
    CHECK_MESSAGE(hits[sc] > 0, to_string(sc));
}

TEST_CASE("chord-limited splits on long cycles") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 300; ++it) {
    int len = 6 + static_cast<int>(rng() % 5);
    VertexCycle c;
    for (int i = 0; i < len; ++i) c.push_back(i);
    // Random path over cycle and extra vertices with at most one chord.
    VertexPath p;
    std::vector<char> on(len + 6, 0);
    int x = static_cast<int>(rng() % (len + 6));
    p.push_back(x);
    on[x] = 1;
    for (int step = 0; step < 8; ++step) {
      int y = static_cast<int>(rng() % (len + 6));
      if (on[y]) continue;
      int a = p.back();
      if (a < len && y < len && ((a - y + len) % len == 1 || (y - a + len) % len == 1)) continue;
      p.push_back(y);
      on[y] = 1;
      if (chord_count(p, c) > 1) {
        p.pop_back();
        on[y] = 0;
      }
    }
    bool meets = false;
    for (int v : p) meets = meets || v < len;
    if (!meets) continue;
    auto s = two_path_split(p, c);
    Decomposition d;
    d.add_path(s.p1);
    d.add_path(s.p2);
    CHECK(verify_decomposition(union_of(p, c, len + 6), d).ok());
    CHECK(cycle_edges_in(s.p1, c) == 1);
  }
}

TEST_CASE("absorb_short_cycles") {
  Decomposition one;
  one.add_path({0, 1, 2});
  auto d = absorb_short_cycles(one, {{2, 3, 4}});
  CHECK(d.size() == 2);
  Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(verify_decomposition(g, d).ok());

  auto d2 = absorb_short_cycles(one, {{0, 3, 4}, {2, 5, 6}});
  CHECK(d2.size() == 3);

  Decomposition two;
  two.add_path({0, 1, 2});
  two.add_path({3, 4});
  auto d3 = absorb_short_cycles(two, {{4, 5, 6, 7}});
  CHECK(d3.size() == 3);
  Graph h = graph_of(d3, 8);
  CHECK(h.m() == 7);
  CHECK(verify_decomposition(h, d3).ok());
}

TEST_CASE("absorb_k5_like") {
  Graph k5m(6);
  for (const Edge& e : k5_minus().edges()) k5m.add_edge(e.u, e.v);
  auto d = absorb_k5_like({5, 0}, k5m);
  CHECK(d.size() == 3);
  Graph g = k5m;
  g.add_edge(5, 0);
  CHECK(verify_decomposition(g, d).ok());

  Graph k5(6);
  for (const Edge& e : complete_graph(5).edges()) k5.add_edge(e.u, e.v);
  auto d5 = absorb_k5_like({5, 2}, k5);
  CHECK(d5.size() == 3);
  Graph g5 = k5;
  g5.add_edge(5, 2);
  CHECK(verify_decomposition(g5, d5).ok());

  CHECK_THROWS_AS(absorb_k5_like({5, 0}, Graph::from_edges(6, complete_graph(4).edges())), Error);

  std::mt19937_64 rng(20);
  for (int it = 0; it < 20; ++it) {
    // Random path over a K5 or K5- on 0..4 and extra vertices 5..9, no chord edges.
    bool full = it % 2;
    Graph k(10);
    Graph base = full ? complete_graph(5) : k5_minus();
    for (const Edge& e : base.edges()) k.add_edge(e.u, e.v);
    VertexPath p{5 + static_cast<int>(rng() % 5)};
    std::vector<char> on(10, 0);
    on[p[0]] = 1;
    bool met = false;
    for (int step = 0; step < 12 && p.size() < 6; ++step) {
      int y = static_cast<int>(rng() % 10);
      if (on[y] || k.has_edge(p.back(), y)) continue;
      p.push_back(y);
      on[y] = 1;
      met = met || y < 5;
    }
    if (!met) {
      p.push_back(0);
      if (k.has_edge(p[p.size() - 2], 0) || on[0]) continue;
    }
    auto out = absorb_k5_like(p, k);
    CHECK(out.size() == 3);
    Graph all = k;
    for (size_t i = 0; i + 1 < p.size(); ++i) all.add_edge(p[i], p[i + 1]);
    CHECK(verify_decomposition(all, out).ok());
  }
}

TEST_CASE("K5- subdivision templates") {
  // k5_minus: edge 0-1 missing, so 0 and 1 have degree 3.
  Graph one(6);
  for (const Edge& e : k5_minus().edges())
    if (!(e.u == 0 && e.v == 2)) one.add_edge(e.u, e.v);
  one.add_edge(0, 5);
  one.add_edge(5, 2);
  auto d = decompose_k5minus_subdivision(one);
  CHECK(d.size() == 2);
  CHECK(verify_decomposition(one, d).ok());

  Graph two(6);
  for (const Edge& e : k5_minus().edges())
    if (!(e.u == 3 && e.v == 4)) two.add_edge(e.u, e.v);
  two.add_edge(3, 5);
  two.add_edge(5, 4);
  auto d2 = decompose_k5minus_subdivision(two);
  CHECK(d2.size() == 2);
  CHECK(verify_decomposition(two, d2).ok());

  CHECK_THROWS_AS(decompose_k5minus_subdivision(k5_minus()), Error);
  CHECK_THROWS_AS(decompose_k5minus_subdivision(complete_graph(5)), Error);

  for (int extra = 1; extra <= 3; ++extra)
    for (const Graph& g : gadgets::k5minus_subdivisions(extra)) {
      auto dd = decompose_k5minus_subdivision(g);
      CHECK(dd.size() == 2);
      CHECK(verify_decomposition(g, dd).ok());
    }
}

TEST_CASE("lifting round trip") {
  Graph p3 = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  Graph l = apply_lift(p3, {0, 1, 2});
  CHECK(l.m() == 1);
  CHECK(l.has_edge(0, 2));
  Decomposition d;
  d.add_path({0, 2});
  auto u = unlift_decomposition(d, {0, 1, 2});
  CHECK(u.elements[0].vertices == VertexPath{0, 1, 2});
  CHECK_THROWS_AS(apply_lift(complete_graph(3), {0, 1, 2}), Error);
  CHECK_THROWS_AS(unlift_decomposition(d, {0, 3, 1}), Error);

  Graph c4 = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  Graph t = apply_lift(c4, {0, 1, 2});
  CHECK(recognize_special(t) == SpecialGraph::K3);
  Decomposition td;
  td.add_cycle({0, 2, 3});
  auto back = unlift_decomposition(td, {0, 1, 2});
  CHECK(verify_decomposition(c4, back).ok());
}

TEST_CASE("simple lifting reduce") {
  SUBCASE("triangle component becomes a 4-cycle") {
    // C4 x=0 v=1 y=2 w=3, path v-4-5.
    Graph g = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4}, {4, 5}});
    auto rs = simple_lifting_reduce(g, {5, 4, 1}, {0, 1, 2}, exact_recurse);
    CHECK(rs.r == 2);
    CHECK(rs.witness.size() <= 2);
    CHECK(rs.h.m() == g.m());
  }
  SUBCASE("K5- component becomes a subdivision") {
    Graph g(8);
    for (const Edge& e : k5_minus().edges())
      if (!(e.u == 2 && e.v == 3)) g.add_edge(e.u, e.v);
    g.add_edge(2, 5);
    g.add_edge(5, 3);
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    auto rs = simple_lifting_reduce(g, {7, 6, 5}, {2, 5, 3}, exact_recurse);
    CHECK(rs.r == 3);
    CHECK(rs.witness.size() <= 3);
  }
  SUBCASE("Gallai component") {
    // C' = path on 4 vertices a-x-y-b after the lift.
    Graph g = Graph::from_edges(8, std::vector<Edge>{{0, 1}, {1, 4}, {4, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}});
    auto rs = simple_lifting_reduce(g, {4, 5, 6, 7}, {1, 4, 2}, exact_recurse);
    CHECK(rs.r == 3);
    CHECK(rs.witness.size() <= 3);
  }
}

TEST_CASE("double lifting reduce") {
  SUBCASE("both lifted edges in one triangle") {
    // 5-cycle a=0 u=1 b=2 v=3 c=4... lifts (0,1,2) and (2,3,4) leave triangle 0,2,4.
    Graph g = Graph::from_edges(8, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 5}, {5, 6}, {6, 3}});
    auto rs = double_lifting_reduce(g, {1, 5, 6, 3}, {0, 1, 2}, {2, 3, 4}, exact_recurse);
    CHECK(rs.r == 2);
    CHECK(rs.witness.size() <= 2);
  }
  SUBCASE("side condition") {
    Graph g = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {2, 3}, {3, 4}, {1, 5}, {5, 3}});
    CHECK_THROWS_AS(double_lifting_reduce(g, {1, 5, 3}, {0, 1, 2}, {0, 3, 2}, exact_recurse), Error);
  }
}

TEST_CASE("special component absorption and reducing application") {
  // Path 0-1-2 plus triangle 2,3,4 hanging off its end plus a pendant path 4-5-6.
  Graph g = Graph::from_edges(7, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}});
  Decomposition w;
  w.add_path({0, 1, 2});
  w.add_path({4, 5, 6});
  Graph h = Graph::from_edges(7, std::vector<Edge>{{0, 1}, {1, 2}, {4, 5}, {5, 6}});
  auto rs = ReducingSubgraph::make(g, h, 2, w);
  CHECK(rs.r == 2);
  auto rs2 = absorb_special_components(g, rs);
  CHECK(rs2.r == 3);
  CHECK(isolated_after(g, rs2.h) == isolated_after(g, rs.h) + 3);
  auto d = apply_path_reducing(g, rs2, exact_recurse);
  CHECK(verify_decomposition(g, d).ok());
  CHECK(d.size() <= 3);

  Graph nothing = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  Decomposition single;
  single.add_path({0, 1, 2, 3});
  auto whole = ReducingSubgraph::make(nothing, nothing, 1, single);
  auto same = absorb_special_components(nothing, whole);
  CHECK(same.r == 1);
  CHECK(apply_path_reducing(nothing, whole, exact_recurse).size() == 1);

  CHECK_THROWS_AS(absorb_special_components(complete_graph(3), whole), Error);
  CHECK_FALSE(ReducingSubgraph::try_make(g, h, 1, w));
}

TEST_CASE("cycle reducing application") {
  Graph bowtie = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  Decomposition c;
  c.add_cycle({0, 1, 2});
  Graph h = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
  auto rs = ReducingSubgraph::make(bowtie, h, 1, c);
  auto d = apply_cycle_reducing(bowtie, rs, [](const Graph& x) { return exact_cycle_number(x).witness; });
  CHECK(d.size() == 2);
  CHECK(verify_decomposition(bowtie, d).ok());
}
