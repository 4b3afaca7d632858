#include <algorithm>

#include "gd/error.hpp"
#include "gd/gallai.hpp"
#include "gd/ktree.hpp"
#include "gd/structure.hpp"

namespace gd {

namespace {

Decomposition solve(const Graph& host);

// One 2-connected Eulerian block, on host ids.
Decomposition solve_block(const Graph& host) {
  Subgraph s = compact(host);
  const Graph& g = s.graph;
  Decomposition d;
  if (auto c = as_cycle(g)) {
    d.add_cycle(*c);
    return to_host(d, s.to_host);
  }
  if (g.n() <= 4) throw Error(ErrorKind::UnreachableCase, "small block is not a cycle", edge_list_dump(g));
  auto emb = embed_partial_3tree(g);
  if (!emb) throw Error(ErrorKind::NotPartialThreeTree, "treewidth exceeds 3", edge_list_dump(g));
  std::vector<int> pick;
  for (int t : terminals(*emb))
    if (g.degree(t) == 2) pick.push_back(t);
  if (pick.size() < 2) {
    pick.clear();
    for (int v = 0; v < g.n(); ++v)
      if (g.degree(v) == 2) pick.push_back(v);
  }
  if (pick.size() < 2) throw Error(ErrorKind::UnreachableCase, "block has fewer than two degree-2 vertices", edge_list_dump(g));
  std::sort(pick.begin(), pick.end());
  VertexCycle c = cycle_through_pair(g, pick[0], pick[1]);
  Graph h(g.n());
  for (size_t i = 0; i < c.size(); ++i) h.add_edge(c[i], c[(i + 1) % c.size()]);
  Decomposition w;
  w.add_cycle(c);
  // Both chosen vertices have degree 2, so removing c isolates them.
  auto rs = ReducingSubgraph::make(g, std::move(h), 1, std::move(w));
  d = apply_cycle_reducing(g, rs, [](const Graph& sub) { return solve(sub); });
  return to_host(d, s.to_host);
}

Decomposition solve(const Graph& host) {
  Decomposition d;
  if (host.m() == 0) return d;
  auto bb = bridges_and_blocks(host);
  if (!bb.bridges.empty()) throw Error(ErrorKind::NotEulerian, "Eulerian graphs have no cut-edges", edge_list_dump(host));
  int bound = 0;
  for (const auto& block : bb.blocks) {
    Graph b = Graph::from_edges(host.n(), block);
    int nb = b.non_isolated();
    Decomposition part = solve_block(b);
    if (part.size() > (nb - 1) / 2)
      throw Error(ErrorKind::BoundViolated, "block of " + std::to_string(nb) + " vertices took " +
                                                std::to_string(part.size()) + " cycles",
                  edge_list_dump(b));
    bound += (nb - 1) / 2;
    d.append(part);
  }
  // Blocks overlap only in cut vertices, so the block bounds sum to at most the whole bound.
  if (bound > (host.non_isolated() - 1) / 2)
    throw Error(ErrorKind::UnreachableCase, "block arithmetic exceeds the bound", edge_list_dump(host));
  return d;
}

}  // namespace

Decomposition decompose_cycles_tw3(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) % 2) throw Error(ErrorKind::NotEulerian, "vertex " + std::to_string(v + 1) + " has odd degree");
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "decompose_cycles_tw3 needs a connected graph");
  if (g.non_isolated() >= 3 && !embed_partial_3tree(compact(g).graph))
    throw Error(ErrorKind::NotPartialThreeTree, "treewidth exceeds 3", edge_list_dump(g));
  Decomposition d = solve(g);
  auto v = verify_decomposition(g, d);
  if (!v.ok() || !d.all_cycles())
    throw Error(ErrorKind::UnreachableCase, "cycle decomposition failed verification", edge_list_dump(g));
  if (d.size() > (g.non_isolated() - 1) / 2)
    throw Error(ErrorKind::BoundViolated, std::to_string(d.size()) + " cycles", edge_list_dump(g));
  return d;
}

}  // namespace gd
