#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gd/graph.hpp"

namespace gd {

enum class BridgeKind { Useful, Useless };

struct Bridge {
  Edge edge;
  BridgeKind kind;
};

// Bridges with their classification, plus the 2-connected blocks (edge lists
// of biconnected components with at least two edges). Bridges and blocks
// together partition E(g).
struct BridgesAndBlocks {
  std::vector<Bridge> bridges;
  std::vector<std::vector<Edge>> blocks;
};

BridgesAndBlocks bridges_and_blocks(const Graph& g);

// All pairs {e, f} (e < f) of non-bridges whose removal disconnects g.
// Throws NotConnected when g is disconnected.
std::vector<std::pair<Edge, Edge>> two_edge_cuts(const Graph& g);

// Shortest path from any source to any target avoiding `forbidden`; ties are
// resolved toward lower vertex ids. A vertex in both sets yields a one-vertex path.
std::optional<VertexPath> shortest_path(const Graph& g, std::span<const int> sources,
                                        std::span<const int> targets,
                                        std::span<const int> forbidden = {});

// Cycle through u and v from two internally disjoint u-v paths.
// Throws NotTwoConnected when no such pair of paths exists.
VertexCycle cycle_through_pair(const Graph& g, int u, int v);

// Partition of E(g) into cycles. Throws OddVertex when some degree is odd.
std::vector<VertexCycle> euler_cycle_partition(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

enum class SpecialGraph { None, K3, K5, K5minus, K44MinusPM, QuasiComplete };
const char* to_string(SpecialGraph s);

SpecialGraph recognize_special(const Graph& g);

// Injective map pattern -> host vertices that is an isomorphism between
// pattern and the non-isolated part of host. Requires equal sizes.
std::optional<std::vector<int>> find_isomorphism(const Graph& pattern, const Graph& host);

// If the non-isolated part of g is a single path (resp. cycle), returns it.
std::optional<VertexPath> as_path(const Graph& g);
std::optional<VertexCycle> as_cycle(const Graph& g);

// Fixed graphs.
Graph complete_graph(int n);
Graph k5_minus();
Graph k44_minus_pm();

}  // namespace gd
