#pragma once

#include "gd/graph.hpp"

namespace gd {

struct Planar6Stats {
  long levels = 0;               // reducing paths removed
  long few_low_degree = 0;       // levels with fewer than three vertices of degree <= 2 (n >= 3)
  long min_low_degree = -1;      // smallest such count seen at a level with n >= 3
};

// At most floor(n/2) paths for a connected planar graph of girth at least 6.
// Planarity is not tested: the driver checks the consequence it relies on,
// that each level has vertices of degree at most 2 to join. Throws
// NotConnected, GirthTooSmall, StructuralAssumptionViolated.
Decomposition decompose_paths_planar6(const Graph& g, Planar6Stats* stats = nullptr);

}  // namespace gd
