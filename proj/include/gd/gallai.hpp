#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gd/graph.hpp"
#include "gd/reduce.hpp"

namespace gd {

struct EndgameConfig {
  int max_vertices = 16;  // exact-solver cap for the endgame shapes
};

enum class StepKind {
  SmallCase,
  SpecialGraph,
  UsefulCutSplit,
  Degree2Suppression,
  TwoEdgeCutReduce,
  TerminalDegreeCase,
  Property1Case,
  Property2Case,
  Property3Case,
  EndgameOdd,
  EndgameDoubleCentered,
  K4FreeRoute,        // max degree 4 without a K4 subdivision, handed to the treewidth-3 driver
  K4SubdivisionCase,  // max degree 4, construction around a smallest K4 subdivision
};
const char* to_string(StepKind k);

struct ReductionStep {
  StepKind kind = StepKind::SmallCase;
  std::string sub;  // branch label, empty when the step has none
  int n = 0;        // non-isolated vertices at that level

  std::string label() const;
};

// Paths, or Special(K3 | K5minus) when g itself is one of them.
using Tw3Outcome = PathOutcome;

// At most floor(n/2) paths for a connected partial 3-tree. Throws
// NotPartialThreeTree, NotConnected, EndgameTooLarge, UnreachableCase.
// Every reduction step taken (including nested recursions) is appended to log.
Tw3Outcome decompose_paths_tw3(const Graph& g, const EndgameConfig& cfg = {},
                               std::vector<ReductionStep>* log = nullptr);

struct PairConstruction {
  std::string sub;
  ReducingSubgraph rs;
};

// One terminal-pair step (TerminalDegreeCase or Property1..3Case) applied to
// u, v in isolation, recursing with the driver. nullopt when the step's case
// split does not cover the pair.
std::optional<PairConstruction> try_pair_construction(const Graph& g, StepKind kind, int u, int v,
                                                     const EndgameConfig& cfg = {});

// The two terminal shapes: K4,4 minus a perfect matching (stored answer) or
// anything else up to cfg.max_vertices, solved exactly at floor(n/2).
Decomposition endgame_decompose(const Graph& g, const EndgameConfig& cfg = {});

// At most floor((n-1)/2) cycles for a connected Eulerian partial 3-tree.
// Throws NotEulerian, NotPartialThreeTree, NotConnected.
Decomposition decompose_cycles_tw3(const Graph& g);

}  // namespace gd
