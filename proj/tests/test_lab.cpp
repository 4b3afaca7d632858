#include <random>

#include "doctest.h"
#include "gd/error.hpp"
#include "gd/ktree.hpp"
#include "gd/lab.hpp"
#include "gd/structure.hpp"
#include "oracles.hpp"

using namespace gd;

TEST_CASE("exact path and cycle numbers of named graphs") {
  CHECK(exact_path_number(complete_graph(3)).value == 2);
  CHECK(exact_path_number(complete_graph(4)).value == 2);
  CHECK(exact_path_number(complete_graph(5)).value == 3);
  CHECK(exact_path_number(k5_minus()).value == 3);
  CHECK(exact_path_number(k44_minus_pm()).value == 4);
  CHECK(exact_path_number(special_graph("Petersen")).value == 5);
  CHECK(exact_cycle_number(complete_graph(3)).value == 1);
  CHECK(exact_cycle_number(complete_graph(5)).value == 2);
  CHECK(exact_cycle_number(special_graph("octahedron")).value == 2);
  CHECK_THROWS_AS(exact_cycle_number(complete_graph(4)), Error);
  CHECK_THROWS_AS(exact_path_number(complete_graph(9)), Error);
  auto r = exact_path_number(special_graph("Petersen"));
  CHECK(verify_decomposition(special_graph("Petersen"), r.witness).ok());
}

TEST_CASE("exact solver matches exhaustive set partitions") {
  std::mt19937_64 rng(99);
  int checked = 0;
  while (checked < 150) {
    Graph g(6);
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        if (rng() % 3 == 0) g.add_edge(a, b);
    if (g.m() == 0 || g.m() > 8) continue;
    ++checked;
    auto r = exact_path_number(g);
    CHECK(verify_decomposition(g, r.witness).ok());
    CHECK(r.value == oracle::partition_number(g, false));
    bool even = true;
    for (int v = 0; v < 6; ++v) even = even && g.degree(v) % 2 == 0;
    if (even) {
      auto c = exact_cycle_number(g);
      CHECK(verify_decomposition(g, c.witness).ok());
      CHECK(c.witness.all_cycles());
      CHECK(c.value == oracle::partition_number(g, true));
    }
  }
}

TEST_CASE("paths_within respects the budget") {
  auto d = paths_within(k44_minus_pm(), 4);
  REQUIRE(d);
  CHECK(d->size() <= 4);
  CHECK_FALSE(paths_within(k44_minus_pm(), 3));
}

TEST_CASE("rng bounded draws are reproducible") {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) CHECK(a.below(7) == b.below(7));
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    auto x = c.below(3);
    CHECK(x < 3);
  }
}

TEST_CASE("generators") {
  SUBCASE("three-tree") {
    Graph g = generate({Family::ThreeTree, 10, 1});
    CHECK(g.n() == 10);
    CHECK(is_three_tree(g));
    CHECK(embed_partial_3tree(g));
  }
  SUBCASE("special") {
    GenSpec s{Family::Special};
    s.special = "K44_minus_PM";
    Graph g = generate(s);
    CHECK(g.n() == 8);
    for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
    s.special = "nope";
    CHECK_THROWS_AS(generate(s), Error);
  }
  SUBCASE("hex") {
    Graph g = generate({Family::HexGridFragment, 24, 7});
    CHECK(g.n() == 24);
    CHECK(is_connected(g));
    CHECK(girth(g).value_or(99) >= 6);
    CHECK(g.max_degree() <= 3);
  }
  SUBCASE("invalid") { CHECK_THROWS_AS(generate({Family::ThreeTree, 1, 1}), Error); }
  SUBCASE("families over many seeds") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      int n = 5 + static_cast<int>(seed % 30);
      Graph p = generate({Family::PartialThreeTree, n, seed, 0.6});
      CHECK(is_connected(p));
      CHECK(embed_partial_3tree(p).has_value() == (p.n() >= 3));
      Graph m = generate({Family::MaxDeg4, n, seed});
      CHECK(is_connected(m));
      CHECK(m.max_degree() <= 4);
      CHECK(m.non_isolated() == n);
      Graph e = generate({Family::EulerianMaxDeg4, n, seed});
      CHECK(is_connected(e));
      CHECK(e.non_isolated() == n);
      CHECK(e.max_degree() == 4);
      for (int v = 0; v < n; ++v) CHECK(e.degree(v) % 2 == 0);
      Graph d = generate({Family::DoubleCentered, n, seed});
      CHECK(is_three_tree(d));
      CHECK(double_centered_form(d).has_value());
      Graph h = generate({Family::HexGridFragment, n, seed});
      CHECK(girth(h).value_or(99) >= 6);
      CHECK(generate({Family::MaxDeg4, n, seed}) == m);
      CHECK(generate({Family::EulerianMaxDeg4, n, seed}) == e);
    }
  }
}
