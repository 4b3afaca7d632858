#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace gd {

// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Isolated vertices are allowed; bounds are taken over non-isolated ones.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}
  static Graph from_edges(int n, std::span<const Edge> edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return m_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  bool has_edge(int a, int b) const;
  // Throws InvalidArgument on loops, duplicates or out-of-range ids.
  void add_edge(int a, int b);
  // Returns false when the edge is absent.
  bool remove_edge(int a, int b);
  void isolate(int v);

  std::vector<Edge> edges() const;
  int non_isolated() const;
  int max_degree() const;
  bool empty() const { return m_ == 0; }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

using VertexPath = std::vector<int>;
using VertexCycle = std::vector<int>;  // first vertex is not repeated

enum class ElementKind { Path, Cycle };

struct Element {
  ElementKind kind = ElementKind::Path;
  std::vector<int> vertices;

  int edge_count() const;
  std::vector<Edge> edges() const;
  bool operator==(const Element&) const = default;
};

struct Decomposition {
  std::vector<Element> elements;

  int size() const { return static_cast<int>(elements.size()); }
  void add_path(VertexPath p) { elements.push_back({ElementKind::Path, std::move(p)}); }
  void add_cycle(VertexCycle c) { elements.push_back({ElementKind::Cycle, std::move(c)}); }
  void append(const Decomposition& other);
  bool all_paths() const;
  bool all_cycles() const;
};

enum class Violation {
  None,
  EmptyElement,
  OutOfRange,
  NonAdjacentStep,
  RepeatedVertex,
  DuplicateEdge,
  MissingEdge,
};

struct Verdict {
  Violation violation = Violation::None;
  int element = -1;
  Edge edge{};
  std::string detail;

  bool ok() const { return violation == Violation::None; }
};

const char* to_string(Violation v);

// Checks that d partitions E(g) into valid paths and cycles of g.
Verdict verify_decomposition(const Graph& g, const Decomposition& d);

// The edges used by d, as a graph on n vertices. Throws on repeated edges.
Graph graph_of(const Decomposition& d, int n);
Graph graph_of_path(const VertexPath& p, int n);

// g - E(h); h must be a subgraph of g.
Graph difference(const Graph& g, const Graph& h);
// g + E(h) (edges already in g are skipped).
Graph united(const Graph& g, const Graph& h);

// Non-trivial connected components (vertex lists sorted, ordered by least vertex).
std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);  // over non-isolated vertices

// Compact induced subgraph together with the map from local to host ids.
struct Subgraph {
  Graph graph;
  std::vector<int> to_host;
};

Subgraph induced(const Graph& g, std::span<const int> vertices);
// Drops isolated vertices.
Subgraph compact(const Graph& g);
Decomposition to_host(const Decomposition& d, std::span<const int> map);

std::string edge_list_dump(const Graph& g);

}  // namespace gd
