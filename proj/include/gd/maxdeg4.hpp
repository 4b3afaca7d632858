#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gd/gallai.hpp"
#include "gd/graph.hpp"
#include "gd/k4.hpp"

namespace gd {

// At most floor(n/2) paths for a connected graph of maximum degree 4, or
// Special(K3 | K5 | K5minus). Throws MaxDegreeExceeded, NotConnected and the
// treewidth-3 driver's errors on the K4-free route.
PathOutcome decompose_paths_maxdeg4(const Graph& g, const EndgameConfig& cfg = {},
                                    std::vector<ReductionStep>* log = nullptr);

// Two edge-disjoint paths with common ends x, y, split into at most |S| + 1
// cycles where S holds their shared vertices other than x and y.
// Throws EndpointMismatch, NotEdgeDisjoint.
Decomposition double_paths_cycles(const VertexPath& p1, const VertexPath& p2);

// Backtracking search for a Hamiltonian cycle of the non-isolated part of g.
// Requires at most 12 non-isolated vertices (PreconditionViolated otherwise).
std::optional<VertexCycle> hamiltonian_small(const Graph& g);

// Counts for the six circuit decompositions of H + Q1 + Q2, where Q1 joins
// branch vertices 0 and 1 and Q2 joins 2 and 3 (0-based labels).
struct SixCircuitReport {
  // s[k][K4Subdivision::pair_index(i, j)]: interior vertices of P_ij on Q_k.
  std::array<std::array<int, 6>, 2> s{};
  int sigma = 0;
  std::array<int, 6> r{};

  int at(int k, int i, int j) const { return s[k][K4Subdivision::pair_index(i, j)]; }
};

SixCircuitReport six_circuit_report(const K4Subdivision& h, const VertexPath& q1, const VertexPath& q2);

// Candidate i (0..5) as cycles, each circuit split by double_paths_cycles.
Decomposition six_circuit_candidate(const K4Subdivision& h, const VertexPath& q1, const VertexPath& q2, int i);

// A smallest K4 subdivision of g (every branch vertex of degree 4) and the
// two paths Q1, Q2 left by the apex cycles of an Euler partition of
// g - E(H) plus an apex joined to the branch vertices, relabelled as above.
struct CircuitSetup {
  K4Subdivision h;
  VertexPath q1, q2;
};
CircuitSetup circuit_setup(const Graph& g);

struct CycleStats {
  std::array<long, 6> chosen{};  // candidate D1..D6 accepted
  long special_case = 0;         // the single shared vertex construction
  long fallthrough = 0;          // no candidate qualified although sigma >= 2
  long identity_failures = 0;    // reports with sum r != 16 + 2 sigma
  long hamiltonian = 0;          // blocks with at most 8 vertices
  long k4_free = 0;              // blocks handed to the treewidth-3 driver
};

// At most floor((n-1)/2) cycles for a connected Eulerian graph of maximum
// degree 4. Throws NotEulerian, MaxDegreeExceeded, NotConnected.
Decomposition decompose_cycles_maxdeg4(const Graph& g, CycleStats* stats = nullptr);

}  // namespace gd
