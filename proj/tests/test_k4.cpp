#include <algorithm>
#include <bit>
#include <random>

#include "doctest.h"
#include "gd/k4.hpp"
#include "gd/structure.hpp"
#include "oracles.hpp"

using namespace gd;

namespace {

Graph random_maxdeg(std::mt19937_64& rng, int n, int tries, int cap) {
  Graph g(n);
  for (int t = 0; t < tries; ++t) {
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a == b || g.has_edge(a, b) || g.degree(a) >= cap || g.degree(b) >= cap) continue;
    g.add_edge(a, b);
  }
  return g;
}

}  // namespace

TEST_CASE("K4 subdivision of fixed graphs") {
  auto k4 = find_k4_subdivision(complete_graph(4));
  REQUIRE(k4);
  CHECK(k4->edge_count() == 6);
  CHECK(k4->valid_in(complete_graph(4)));

  Graph tree(6);
  for (int v = 1; v < 6; ++v) tree.add_edge(v, v - 1);
  CHECK_FALSE(find_k4_subdivision(tree));

  auto k5 = find_k4_subdivision(complete_graph(5));
  REQUIRE(k5);
  CHECK(k5->edge_count() == 6);

  // Wheel rim subdivided: branch vertices are the hub and three rim vertices.
  Graph w(7);
  for (int i = 0; i < 6; ++i) w.add_edge(i, (i + 1) % 6);
  for (int i : {0, 2, 4}) w.add_edge(6, i);
  auto k = find_k4_subdivision(w);
  REQUIRE(k);
  CHECK(k->edge_count() == 9);
  VertexPath fwd = k->path(1, 2);
  std::reverse(fwd.begin(), fwd.end());
  CHECK(k->path(2, 1) == fwd);
}

TEST_CASE("relabeling keeps paths between the renamed branch vertices") {
  auto k = find_k4_subdivision(complete_graph(4));
  REQUIRE(k);
  auto r = k->relabeled({2, 0, 3, 1});
  CHECK(r.valid_in(complete_graph(4)));
  CHECK(r.branch[2] == k->branch[0]);
  CHECK(r.path(2, 0) == k->path(0, 1));
}

TEST_CASE("K4 subdivisions of random graphs") {
  std::mt19937_64 rng(77);
  int found = 0;
  for (int it = 0; it < 300; ++it) {
    int n = 5 + static_cast<int>(rng() % 6);
    Graph g = random_maxdeg(rng, n, 3 * n, 4);
    bool expected = oracle::treewidth(g) >= 3;
    auto k = find_k4_subdivision(g);
    REQUIRE(k.has_value() == expected);
    if (!k) continue;
    ++found;
    CHECK(k->valid_in(g));
    // No smaller K4 subdivision inside H plus the other edges at its branch vertices.
    Graph u = k->graph(g.n());
    for (int x : k->branch)
      for (int y : g.neighbors(x))
        if (!u.has_edge(x, y)) u.add_edge(x, y);
    auto es = u.edges();
    if (es.size() > 18) continue;
    int best = k->edge_count();
    for (unsigned mask = 1; mask < (1u << es.size()); ++mask) {
      if (std::popcount(mask) >= best) continue;
      Graph h(g.n());
      for (size_t i = 0; i < es.size(); ++i)
        if (mask >> i & 1u) h.add_edge(es[i].u, es[i].v);
      CHECK_FALSE(as_k4_subdivision(h));
    }
  }
  CHECK(found > 100);
}
