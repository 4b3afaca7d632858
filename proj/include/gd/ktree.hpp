#pragma once

#include <optional>
#include <vector>

#include "gd/graph.hpp"

namespace gd {

struct Elimination {
  int vertex = 0;
  std::vector<int> neighborhood;  // clique of later vertices, size <= 3
};

// Embedding of a partial 3-tree into a 3-tree on the same vertex set.
struct UnderlyingKTree {
  Graph base;
  std::vector<Edge> fill;
  std::vector<Elimination> elimination;

  Graph tree() const;  // base + fill
};

// Succeeds iff g has treewidth <= 3 (requires n >= 3).
std::optional<UnderlyingKTree> embed_partial_3tree(const Graph& g);

// Degree-3 vertices of the 3-tree (all three when it is K3).
std::vector<int> terminals(const UnderlyingKTree& t);

struct DoubleCenteredForm {
  int a = 0;
  int b = 0;
  Graph spine;  // on the host vertex ids; a and b isolated
};

std::optional<DoubleCenteredForm> double_centered_form(const Graph& g3);

// True when g is a 3-tree (checked by peeling degree-3 vertices with clique
// neighborhoods down to K3).
bool is_three_tree(const Graph& g);

}  // namespace gd
