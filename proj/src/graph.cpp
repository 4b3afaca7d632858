#include "gd/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "gd/error.hpp"

namespace gd {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotEulerian: return "NotEulerian";
    case ErrorKind::NotPartialThreeTree: return "NotPartialThreeTree";
    case ErrorKind::NotTwoConnected: return "NotTwoConnected";
    case ErrorKind::OddVertex: return "OddVertex";
    case ErrorKind::ChordLimitExceeded: return "ChordLimitExceeded";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::NotK5Like: return "NotK5Like";
    case ErrorKind::NotK5MinusSubdivision: return "NotK5MinusSubdivision";
    case ErrorKind::InvalidLift: return "InvalidLift";
    case ErrorKind::EdgeNotInDecomposition: return "EdgeNotInDecomposition";
    case ErrorKind::SideConditionViolated: return "SideConditionViolated";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::BoundViolated: return "BoundViolated";
    case ErrorKind::UnreachableCase: return "UnreachableCase";
    case ErrorKind::EndgameTooLarge: return "EndgameTooLarge";
    case ErrorKind::MaxDegreeExceeded: return "MaxDegreeExceeded";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::NotEdgeDisjoint: return "NotEdgeDisjoint";
    case ErrorKind::GirthTooSmall: return "GirthTooSmall";
    case ErrorKind::StructuralAssumptionViolated: return "StructuralAssumptionViolated";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotEvenGraph: return "NotEvenGraph";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool Graph::has_edge(int a, int b) const {
  if (a < 0 || b < 0 || a >= n() || b >= n()) return false;
  const auto& small = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  int other = adj_[a].size() <= adj_[b].size() ? b : a;
  return std::binary_search(small.begin(), small.end(), other);
}

void Graph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= n() || b >= n())
    throw Error(ErrorKind::InvalidArgument, "vertex id out of range");
  if (a == b) throw Error(ErrorKind::InvalidArgument, "loop at " + std::to_string(a));
  auto& la = adj_[a];
  auto it = std::lower_bound(la.begin(), la.end(), b);
  if (it != la.end() && *it == b)
    throw Error(ErrorKind::InvalidArgument,
                "duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
  la.insert(it, b);
  auto& lb = adj_[b];
  lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
  ++m_;
}

bool Graph::remove_edge(int a, int b) {
  if (!has_edge(a, b)) return false;
  auto& la = adj_[a];
  la.erase(std::lower_bound(la.begin(), la.end(), b));
  auto& lb = adj_[b];
  lb.erase(std::lower_bound(lb.begin(), lb.end(), a));
  --m_;
  return true;
}

void Graph::isolate(int v) {
  for (int w : std::vector<int>(adj_[v])) remove_edge(v, w);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int w : adj_[u])
      if (u < w) out.push_back({u, w});
  return out;
}

int Graph::non_isolated() const {
  int c = 0;
  for (const auto& l : adj_) c += l.empty() ? 0 : 1;
  return c;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& l : adj_) d = std::max(d, static_cast<int>(l.size()));
  return d;
}

int Element::edge_count() const {
  if (vertices.empty()) return 0;
  int k = static_cast<int>(vertices.size());
  return kind == ElementKind::Path ? k - 1 : k;
}

std::vector<Edge> Element::edges() const {
  std::vector<Edge> out;
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    out.push_back(make_edge(vertices[i], vertices[i + 1]));
  if (kind == ElementKind::Cycle && vertices.size() >= 2)
    out.push_back(make_edge(vertices.back(), vertices.front()));
  return out;
}

void Decomposition::append(const Decomposition& other) {
  elements.insert(elements.end(), other.elements.begin(), other.elements.end());
}

bool Decomposition::all_paths() const {
  return std::all_of(elements.begin(), elements.end(),
                     [](const Element& e) { return e.kind == ElementKind::Path; });
}

bool Decomposition::all_cycles() const {
  return std::all_of(elements.begin(), elements.end(),
                     [](const Element& e) { return e.kind == ElementKind::Cycle; });
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::None: return "ok";
    case Violation::EmptyElement: return "empty element";
    case Violation::OutOfRange: return "vertex out of range";
    case Violation::NonAdjacentStep: return "non-adjacent step";
    case Violation::RepeatedVertex: return "repeated vertex";
    case Violation::DuplicateEdge: return "duplicate edge";
    case Violation::MissingEdge: return "missing edge";
  }
  return "unknown";
}

Verdict verify_decomposition(const Graph& g, const Decomposition& d) {
  auto fail = [](Violation v, int el, Edge e, std::string detail) {
    return Verdict{v, el, e, std::move(detail)};
  };
  std::set<Edge> used;
  for (int i = 0; i < d.size(); ++i) {
    const Element& el = d.elements[i];
    const auto& vs = el.vertices;
    if (vs.empty() || (el.kind == ElementKind::Cycle && vs.size() < 3))
      return fail(Violation::EmptyElement, i, {}, "element too short");
    std::set<int> seen;
    for (int v : vs) {
      if (v < 0 || v >= g.n()) return fail(Violation::OutOfRange, i, {}, std::to_string(v));
      if (!seen.insert(v).second)
        return fail(Violation::RepeatedVertex, i, {}, "vertex " + std::to_string(v));
    }
    for (const Edge& e : el.edges()) {
      if (!g.has_edge(e.u, e.v))
        return fail(Violation::NonAdjacentStep, i, e,
                    std::to_string(e.u) + "-" + std::to_string(e.v) + " not an edge");
      if (!used.insert(e).second)
        return fail(Violation::DuplicateEdge, i, e,
                    std::to_string(e.u) + "-" + std::to_string(e.v) + " used twice");
    }
  }
  if (static_cast<int>(used.size()) != g.m()) {
    for (const Edge& e : g.edges())
      if (!used.count(e))
        return fail(Violation::MissingEdge, -1, e,
                    std::to_string(e.u) + "-" + std::to_string(e.v) + " uncovered");
  }
  return {};
}

Graph graph_of(const Decomposition& d, int n) {
  Graph h(n);
  for (const auto& el : d.elements)
    for (const Edge& e : el.edges()) h.add_edge(e.u, e.v);
  return h;
}

Graph graph_of_path(const VertexPath& p, int n) {
  Graph h(n);
  for (size_t i = 0; i + 1 < p.size(); ++i) h.add_edge(p[i], p[i + 1]);
  return h;
}

Graph difference(const Graph& g, const Graph& h) {
  Graph out = g;
  for (const Edge& e : h.edges())
    if (!out.remove_edge(e.u, e.v))
      throw Error(ErrorKind::InvalidArgument, "difference: edge not in host");
  return out;
}

Graph united(const Graph& g, const Graph& h) {
  Graph out = g;
  for (const Edge& e : h.edges())
    if (!out.has_edge(e.u, e.v)) out.add_edge(e.u, e.v);
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] != -1 || g.degree(s) == 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      out[id].push_back(x);
      for (int y : g.neighbors(x))
        if (comp[y] == -1) {
          comp[y] = id;
          stack.push_back(y);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Subgraph induced(const Graph& g, std::span<const int> vertices) {
  Subgraph s;
  s.to_host.assign(vertices.begin(), vertices.end());
  std::vector<int> local(g.n(), -1);
  for (size_t i = 0; i < s.to_host.size(); ++i) local[s.to_host[i]] = static_cast<int>(i);
  s.graph = Graph(static_cast<int>(s.to_host.size()));
  for (size_t i = 0; i < s.to_host.size(); ++i)
    for (int w : g.neighbors(s.to_host[i]))
      if (local[w] > static_cast<int>(i)) s.graph.add_edge(static_cast<int>(i), local[w]);
  return s;
}

Subgraph compact(const Graph& g) {
  std::vector<int> vs;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0) vs.push_back(v);
  return induced(g, vs);
}

Decomposition to_host(const Decomposition& d, std::span<const int> map) {
  Decomposition out = d;
  for (auto& el : out.elements)
    for (int& v : el.vertices) v = map[v];
  return out;
}

std::string edge_list_dump(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.n() << " " << g.m() << "\n";
  for (const Edge& e : g.edges()) os << "e " << e.u + 1 << " " << e.v + 1 << "\n";
  return os.str();
}

}  // namespace gd
