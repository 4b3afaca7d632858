#include "gd/planar6.hpp"

#include <algorithm>
#include <queue>

#include "gd/error.hpp"
#include "gd/reduce.hpp"
#include "gd/structure.hpp"

namespace gd {

namespace {

std::vector<int> bfs_distances(const Graph& g, int s) {
  std::vector<int> dist(g.n(), -1);
  std::queue<int> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : g.neighbors(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
  }
  return dist;
}

class Planar6Driver {
 public:
  explicit Planar6Driver(Planar6Stats* stats) : stats_(stats) {}

  PathOutcome solve(const Graph& host) {
    Subgraph s = compact(host);
    return {SpecialGraph::None, to_host(solve_local(s.graph), s.to_host)};
  }

 private:
  Decomposition solve_local(const Graph& g) {
    const int n = g.n();
    if (g.m() == 0) return {};
    Decomposition d;
    if (auto p = as_path(g)) {
      d.add_path(*p);
      return d;
    }
    std::vector<int> low;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) <= 2) low.push_back(v);
    if (stats_) {
      ++stats_->levels;
      if (n >= 3) {
        const long c = static_cast<long>(low.size());
        if (c < 3) ++stats_->few_low_degree;
        if (stats_->min_low_degree < 0 || c < stats_->min_low_degree) stats_->min_low_degree = c;
      }
    }
    if (low.size() < 2)
      throw Error(ErrorKind::StructuralAssumptionViolated,
                  std::to_string(low.size()) + " vertices of degree at most 2; the graph is not planar",
                  edge_list_dump(g));
    // Closest pair of low-degree vertices, ties by vertex ids.
    int bu = -1, bv = -1, best = n + 1;
    for (size_t i = 0; i < low.size(); ++i) {
      auto dist = bfs_distances(g, low[i]);
      for (size_t j = i + 1; j < low.size(); ++j)
        if (dist[low[j]] >= 0 && dist[low[j]] < best) {
          best = dist[low[j]];
          bu = low[i];
          bv = low[j];
        }
    }
    const int src[] = {bu}, dst[] = {bv};
    VertexPath p = *shortest_path(g, src, dst);
    Graph hp = graph_of_path(p, n);
    // Extend by the remaining edge at each end, if any.
    for (int y : g.neighbors(bu))
      if (!hp.has_edge(bu, y)) p.insert(p.begin(), y);
    for (int y : g.neighbors(bv))
      if (!hp.has_edge(bv, y)) p.push_back(y);
    VertexPath sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::StructuralAssumptionViolated, "extended path repeats a vertex; girth below 6",
                  edge_list_dump(g));
    Graph h = graph_of_path(p, n);
    if (h.degree(bu) != g.degree(bu) || h.degree(bv) != g.degree(bv))
      throw Error(ErrorKind::StructuralAssumptionViolated, "path ends keep edges outside the path", edge_list_dump(g));
    Decomposition w;
    w.add_path(p);
    auto rs = ReducingSubgraph::make(g, std::move(h), 1, std::move(w));
    return apply_path_reducing(g, rs, [this](const Graph& sub) { return solve(sub); });
  }

  Planar6Stats* stats_;
};

}  // namespace

Decomposition decompose_paths_planar6(const Graph& g, Planar6Stats* stats) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "decompose_paths_planar6 needs a connected graph");
  if (auto gir = girth(g); gir && *gir < 6)
    throw Error(ErrorKind::GirthTooSmall, "girth " + std::to_string(*gir), edge_list_dump(g));
  Planar6Driver driver(stats);
  Decomposition d = driver.solve(g).paths;
  auto v = verify_decomposition(g, d);
  if (!v.ok()) throw Error(ErrorKind::UnreachableCase, "path decomposition failed verification", edge_list_dump(g));
  if (d.size() > g.non_isolated() / 2)
    throw Error(ErrorKind::BoundViolated, std::to_string(d.size()) + " paths", edge_list_dump(g));
  return d;
}

}  // namespace gd
