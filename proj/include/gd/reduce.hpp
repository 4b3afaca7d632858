#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gd/graph.hpp"
#include "gd/structure.hpp"

namespace gd {

// Which branch of the split construction produced the output.
enum class SplitCase {
  Trivial,       // p has no edges
  FreeNeighbor,  // a cycle neighbour of z0 is off p
  LongSegment,   // the p-segment ending at a cycle neighbour of z0 is not a chord
  FiveApart,     // |c| = 5, the two chord-reached neighbours are not p-adjacent
  FiveA,         // |c| = 5, adjacent, remaining vertex off p
  FiveB,         // |c| = 5, remaining vertex before the chord run
  FiveC,         // |c| = 5, remaining vertex after the chord run
};
const char* to_string(SplitCase c);

struct PathSplit {
  VertexPath p1;
  VertexPath p2;
  SplitCase branch = SplitCase::Trivial;
  bool reversed = false;  // p was reversed before the case analysis
};

// Decomposes p + c into two paths. Requires p, c edge-disjoint and sharing a
// vertex, and either at most one chord of c on p, or |c| <= 5 with at most 3.
PathSplit two_path_split(const VertexPath& p, const VertexCycle& c);

// Chords of c among the edges of p.
int chord_count(const VertexPath& p, const VertexCycle& c);

// Adds vertex-disjoint cycles of length 3 or 4, each meeting a path of d.
Decomposition absorb_short_cycles(const Decomposition& d, const std::vector<VertexCycle>& cycles);

// p + k into three paths, where k (host ids, others isolated) is K5 or K5-.
Decomposition absorb_k5_like(const VertexPath& p, const Graph& k);

// Two paths for a proper subdivision of K5- (non-isolated part of g).
Decomposition decompose_k5minus_subdivision(const Graph& g);

struct Lift {
  int x = 0;
  int v = 0;
  int y = 0;
};

// g - xv - vy + xy. Throws InvalidLift.
Graph apply_lift(const Graph& g, const Lift& l);
// Replaces the traversal of xy by x v y. Throws EdgeNotInDecomposition.
Decomposition unlift_decomposition(const Decomposition& d, const Lift& l);

// A subgraph h with a witness decomposition of at most r elements such that
// the host minus E(h) has at least 2r more isolated vertices.
struct ReducingSubgraph {
  Graph h;
  int r = 0;
  Decomposition witness;

  // Empty string when the invariants hold against host.
  static std::string check(const Graph& host, const Graph& h, int r, const Decomposition& w);
  // Throws UnreachableCase (with a state dump) when check fails.
  static ReducingSubgraph make(const Graph& host, Graph h, int r, Decomposition w);
  static std::optional<ReducingSubgraph> try_make(const Graph& host, Graph h, int r, Decomposition w);
};

// Vertices with positive degree in g that have no edge outside h.
int isolated_after(const Graph& g, const Graph& h);

// Result of a path decomposition call: either paths or a named exception.
struct PathOutcome {
  SpecialGraph special = SpecialGraph::None;
  Decomposition paths;

  bool is_special() const { return special != SpecialGraph::None; }
};

// Decomposes one connected graph given on host ids.
using PathRecurse = std::function<PathOutcome(const Graph&)>;
using CycleRecurse = std::function<Decomposition(const Graph&)>;

// Absorbs the K3, K5 and K5- components of g - E(h) into rs.
ReducingSubgraph absorb_special_components(const Graph& g, const ReducingSubgraph& rs);

// Reducing subgraph from p plus the components of g - E(p) that receive a
// lifted edge. The lifts are applied in order, each checked against the
// current graph; no side condition is imposed.
ReducingSubgraph lifting_reduce(const Graph& g, const VertexPath& p, const std::vector<Lift>& lifts,
                                const PathRecurse& recurse);
ReducingSubgraph simple_lifting_reduce(const Graph& g, const VertexPath& p, const Lift& l,
                                       const PathRecurse& recurse);
ReducingSubgraph double_lifting_reduce(const Graph& g, const VertexPath& p, const Lift& l1, const Lift& l2,
                                       const PathRecurse& recurse);

// A cut-edge with at least two vertices on each side.
std::optional<Edge> find_useful_bridge(const Graph& g);
// Decomposes the two sides of the cut-edge e (each keeping e) and merges the
// two paths through e into one.
Decomposition join_at_bridge(const Graph& g, const Edge& e, const PathRecurse& recurse);

// rs.witness plus decompositions of every component of g - E(h).
Decomposition apply_path_reducing(const Graph& g, const ReducingSubgraph& rs, const PathRecurse& recurse);
Decomposition apply_cycle_reducing(const Graph& g, const ReducingSubgraph& rs, const CycleRecurse& recurse);

// Graph induced by one vertex set, keeping host ids.
Graph restrict_to(const Graph& g, const std::vector<int>& vertices);

}  // namespace gd
