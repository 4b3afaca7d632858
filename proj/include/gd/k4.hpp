#pragma once

#include <array>
#include <optional>

#include "gd/graph.hpp"

namespace gd {

// Four branch vertices x0..x3 and six internally disjoint branch paths.
struct K4Subdivision {
  std::array<int, 4> branch{};
  // Indexed by pair_index(i, j), each stored from x_min(i,j) to x_max(i,j).
  std::array<VertexPath, 6> paths;

  static int pair_index(int i, int j);
  // Branch path oriented from x_i to x_j.
  VertexPath path(int i, int j) const;
  int edge_count() const;
  Graph graph(int n) const;
  // Interior vertices of every branch path.
  std::vector<int> internal_vertices() const;
  // Renames branch index i to perm[i].
  K4Subdivision relabeled(const std::array<int, 4>& perm) const;
  // Structural check against a host graph.
  bool valid_in(const Graph& g) const;
};

// True when g has a K4 minor (equivalently, a K4 subdivision).
bool has_k4_subdivision(const Graph& g);

// Splits a graph that is exactly a K4 subdivision (plus isolated vertices).
std::optional<K4Subdivision> as_k4_subdivision(const Graph& h);

// Smallest K4 subdivision inside the union of h with the edges of g
// incident to its branch vertices, or nullopt if h is already smallest.
std::optional<K4Subdivision> improve_once(const Graph& g, const K4Subdivision& h);

// A K4 subdivision of g that no exchange within H + S shortens.
std::optional<K4Subdivision> find_k4_subdivision(const Graph& g);

}  // namespace gd
