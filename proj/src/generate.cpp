#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "gd/error.hpp"
#include "gd/lab.hpp"
#include "gd/structure.hpp"

namespace gd {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::InvalidArgument, "empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  while (true) {
    std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

const char* to_string(Family f) {
  switch (f) {
    case Family::ThreeTree: return "three-tree";
    case Family::PartialThreeTree: return "partial-three-tree";
    case Family::EulerianPartialThreeTree: return "eulerian-partial-three-tree";
    case Family::MaxDeg4: return "maxdeg4";
    case Family::EulerianMaxDeg4: return "eulerian-maxdeg4";
    case Family::HexGridFragment: return "hex";
    case Family::DoubleCentered: return "double-centered";
    case Family::Special: return "special";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : {Family::ThreeTree, Family::PartialThreeTree, Family::EulerianPartialThreeTree, Family::MaxDeg4,
                   Family::EulerianMaxDeg4, Family::HexGridFragment, Family::DoubleCentered, Family::Special})
    if (name == to_string(f)) return f;
  return std::nullopt;
}

Graph special_graph(const std::string& name) {
  if (name == "K3") return complete_graph(3);
  if (name == "K4") return complete_graph(4);
  if (name == "K5") return complete_graph(5);
  if (name == "K5minus") return k5_minus();
  if (name == "K44_minus_PM") return k44_minus_pm();
  if (name == "K6_minus_PM" || name == "octahedron") {
    // K6 minus a perfect matching is the octahedron.
    Graph g = complete_graph(6);
    g.remove_edge(0, 1);
    g.remove_edge(2, 3);
    g.remove_edge(4, 5);
    return g;
  }
  if (name == "Petersen") {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);
      g.add_edge(i, i + 5);
      g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
  }
  throw Error(ErrorKind::InvalidSpec, "unknown special graph '" + name + "'");
}

namespace {

Graph three_tree(int n, Rng& rng) {
  Graph g = complete_graph(3);
  Graph out(n);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  std::vector<std::array<int, 3>> triangles{{0, 1, 2}};
  for (int v = 3; v < n; ++v) {
    auto t = triangles[rng.below(triangles.size())];
    for (int x : t) out.add_edge(v, x);
    triangles.push_back({t[0], t[1], v});
    triangles.push_back({t[0], t[2], v});
    triangles.push_back({t[1], t[2], v});
  }
  return out;
}

// Largest component, relabelled to 0..k-1 in increasing host order.
Graph largest_component(const Graph& g) {
  auto comps = components(g);
  if (comps.empty()) return Graph(0);
  size_t best = 0;
  for (size_t i = 1; i < comps.size(); ++i)
    if (comps[i].size() > comps[best].size()) best = i;
  return induced(g, comps[best]).graph;
}

// Sum (mod 2) of the fundamental cycles of a random subset of the non-tree edges.
Graph even_subgraph(const Graph& g, Rng& rng) {
  const int n = g.n();
  std::vector<int> parent(n, -1), depth(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<int> order{0};
  seen[0] = 1;
  for (size_t i = 0; i < order.size(); ++i)
    for (int y : g.neighbors(order[i]))
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[i];
        depth[y] = depth[order[i]] + 1;
        order.push_back(y);
      }
  std::set<Edge> even;
  auto flip = [&](int a, int b) {
    Edge e = make_edge(a, b);
    if (!even.erase(e)) even.insert(e);
  };
  for (const Edge& e : g.edges()) {
    if (parent[e.u] == e.v || parent[e.v] == e.u || !rng.chance(1, 2)) continue;
    flip(e.u, e.v);
    int a = e.u, b = e.v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      flip(a, parent[a]);
      a = parent[a];
    }
  }
  std::vector<Edge> edges(even.begin(), even.end());
  return Graph::from_edges(n, edges);
}

Graph max_deg4(int n, Rng& rng) {
  Graph g(n);
  // Random tree under the cap keeps the graph connected.
  for (int v = 1; v < n; ++v) {
    int u;
    do u = static_cast<int>(rng.below(v));
    while (g.degree(u) >= 4);
    g.add_edge(u, v);
  }
  int extra = rng.range(0, 2 * n);
  for (int t = 0; t < extra; ++t) {
    int a = static_cast<int>(rng.below(n)), b = static_cast<int>(rng.below(n));
    if (a == b || g.has_edge(a, b) || g.degree(a) >= 4 || g.degree(b) >= 4) continue;
    g.add_edge(a, b);
  }
  return g;
}

// Adds a random cycle that starts and ends at `start`, using unused vertices
// and spare degree-2 vertices; returns false when no cycle could be closed.
bool add_random_cycle(Graph& g, std::vector<char>& used, int start, Rng& rng, bool prefer_new) {
  const int n = g.n();
  int want = rng.range(2, 7);
  std::vector<int> seq{start};
  std::vector<char> on(n, 0);
  on[start] = 1;
  for (int step = 0; step < want; ++step) {
    int x = seq.back();
    std::vector<int> cand_new, cand_old;
    for (int y = 0; y < n; ++y) {
      if (on[y] || g.has_edge(x, y)) continue;
      if (!used[y])
        cand_new.push_back(y);
      else if (g.degree(y) <= 2)
        cand_old.push_back(y);
    }
    std::vector<int>& pool = (prefer_new && !cand_new.empty()) || cand_old.empty() ? cand_new : cand_old;
    if (pool.empty()) break;
    int y = pool[rng.below(pool.size())];
    seq.push_back(y);
    on[y] = 1;
  }
  // Close back to start, dropping trailing vertices until that is possible.
  while (seq.size() >= 3 && g.has_edge(seq.back(), start)) {
    on[seq.back()] = 0;
    seq.pop_back();
  }
  if (seq.size() < 3) return false;
  for (size_t i = 0; i < seq.size(); ++i) {
    int a = seq[i], b = seq[(i + 1) % seq.size()];
    g.add_edge(a, b);
    used[a] = 1;
  }
  return true;
}

Graph eulerian_max_deg4(int n, Rng& rng) {
  for (int attempt = 0;; ++attempt) {
    Graph g(n);
    std::vector<char> used(n, 0);
    int first = static_cast<int>(rng.below(n));
    used[first] = 1;
    if (!add_random_cycle(g, used, first, rng, true)) continue;
    int guard = 0;
    bool stuck = false;
    while (std::count(used.begin(), used.end(), 1) < n && !stuck) {
      std::vector<int> anchors;
      for (int v = 0; v < n; ++v)
        if (used[v] && g.degree(v) == 2) anchors.push_back(v);
      if (anchors.empty() || ++guard > 10 * n) {
        stuck = true;
        break;
      }
      add_random_cycle(g, used, anchors[rng.below(anchors.size())], rng, true);
    }
    if (stuck) continue;
    // Extra cycles among spare vertices; at least one guarantees a degree-4 vertex.
    int extra = rng.range(1, std::max(1, n / 3));
    for (int t = 0, tries = 0; t < extra && tries < 20 * n; ++tries) {
      std::vector<int> anchors;
      for (int v = 0; v < n; ++v)
        if (g.degree(v) == 2) anchors.push_back(v);
      if (anchors.size() < 3) break;
      if (add_random_cycle(g, used, anchors[rng.below(anchors.size())], rng, false)) ++t;
    }
    if (g.max_degree() == 4 || attempt > 50) return g;
  }
}

Graph hex_fragment(int n, Rng& rng) {
  // Brick-wall model of the hexagonal lattice: horizontal edges everywhere,
  // vertical edges at (x, y)-(x, y+1) when x + y is even.
  using P = std::pair<int, int>;
  auto nbrs = [](P p) {
    std::vector<P> out{{p.first - 1, p.second}, {p.first + 1, p.second}};
    if ((p.first + p.second) % 2 == 0)
      out.push_back({p.first, p.second + 1});
    else
      out.push_back({p.first, p.second - 1});
    return out;
  };
  std::map<P, int> id;
  std::vector<P> cells{{0, 0}};
  id[{0, 0}] = 0;
  std::vector<P> frontier;
  std::set<P> in_frontier;
  auto push_frontier = [&](P p) {
    for (P q : nbrs(p))
      if (!id.count(q) && in_frontier.insert(q).second) frontier.push_back(q);
  };
  push_frontier({0, 0});
  while (static_cast<int>(cells.size()) < n) {
    size_t k = rng.below(frontier.size());
    P p = frontier[k];
    frontier.erase(frontier.begin() + static_cast<long>(k));
    in_frontier.erase(p);
    id[p] = static_cast<int>(cells.size());
    cells.push_back(p);
    push_frontier(p);
  }
  Graph g(n);
  for (const P& p : cells)
    for (P q : nbrs(p)) {
      auto it = id.find(q);
      if (it != id.end() && id[p] < it->second) g.add_edge(id[p], it->second);
    }
  return g;
}

Graph double_centered(int n, Rng& rng) {
  // Tree on 0..n-3, centres n-2 and n-1.
  Graph g(n);
  for (int v = 1; v < n - 2; ++v) g.add_edge(static_cast<int>(rng.below(v)), v);
  for (int v = 0; v < n - 2; ++v) {
    g.add_edge(v, n - 2);
    g.add_edge(v, n - 1);
  }
  g.add_edge(n - 2, n - 1);
  return g;
}

}  // namespace

Graph generate(const GenSpec& spec) {
  auto bad = [](const std::string& why) { return Error(ErrorKind::InvalidSpec, why); };
  if (spec.family == Family::Special) return special_graph(spec.special);
  if (spec.n < 3) throw bad("n must be at least 3");
  if (spec.n > 100000) throw bad("n too large");
  Rng rng(spec.seed);
  switch (spec.family) {
    case Family::ThreeTree: return three_tree(spec.n, rng);
    case Family::PartialThreeTree: {
      if (!(spec.keep >= 0.0 && spec.keep <= 1.0)) throw bad("keep probability outside [0,1]");
      Graph t = three_tree(spec.n, rng);
      Graph kept(spec.n);
      // Fixed-point probability so the stream does not depend on floating-point draws.
      const auto num = static_cast<std::uint64_t>(spec.keep * 1000000.0 + 0.5);
      for (const Edge& e : t.edges())
        if (rng.chance(num, 1000000)) kept.add_edge(e.u, e.v);
      return largest_component(kept);
    }
    case Family::EulerianPartialThreeTree: return largest_component(even_subgraph(three_tree(spec.n, rng), rng));
    case Family::MaxDeg4: return max_deg4(spec.n, rng);
    case Family::EulerianMaxDeg4: return eulerian_max_deg4(spec.n, rng);
    case Family::HexGridFragment: return hex_fragment(spec.n, rng);
    case Family::DoubleCentered:
      if (spec.n < 4) throw bad("double-centered needs n >= 4");
      return double_centered(spec.n, rng);
    case Family::Special: break;
  }
  throw bad("unknown family");
}

}  // namespace gd
