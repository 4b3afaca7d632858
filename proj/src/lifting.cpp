#include <algorithm>

#include "gd/error.hpp"
#include "gd/reduce.hpp"

namespace gd {

Graph restrict_to(const Graph& g, const std::vector<int>& vertices) {
  std::vector<char> in(g.n(), 0);
  for (int v : vertices) in[v] = 1;
  Graph out(g.n());
  for (const Edge& e : g.edges())
    if (in[e.u] && in[e.v]) out.add_edge(e.u, e.v);
  return out;
}

Graph apply_lift(const Graph& g, const Lift& l) {
  if (!g.has_edge(l.x, l.v) || !g.has_edge(l.v, l.y) || l.x == l.y || g.has_edge(l.x, l.y))
    throw Error(ErrorKind::InvalidLift,
                "lift (" + std::to_string(l.x + 1) + "," + std::to_string(l.v + 1) + "," + std::to_string(l.y + 1) + ")",
                edge_list_dump(g));
  Graph out = g;
  out.remove_edge(l.x, l.v);
  out.remove_edge(l.v, l.y);
  out.add_edge(l.x, l.y);
  return out;
}

Decomposition unlift_decomposition(const Decomposition& d, const Lift& l) {
  Decomposition out = d;
  for (auto& el : out.elements) {
    auto& vs = el.vertices;
    const size_t k = vs.size();
    const size_t steps = el.kind == ElementKind::Cycle ? k : k - 1;
    for (size_t i = 0; i < steps; ++i) {
      int a = vs[i], b = vs[(i + 1) % k];
      if ((a == l.x && b == l.y) || (a == l.y && b == l.x)) {
        vs.insert(vs.begin() + static_cast<long>(i) + 1, l.v);
        return out;
      }
    }
  }
  throw Error(ErrorKind::EdgeNotInDecomposition,
              "edge " + std::to_string(l.x + 1) + "-" + std::to_string(l.y + 1) + " not covered");
}

int isolated_after(const Graph& g, const Graph& h) {
  int count = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0 && g.degree(v) == h.degree(v)) ++count;
  return count;
}

std::string ReducingSubgraph::check(const Graph& host, const Graph& h, int r, const Decomposition& w) {
  if (h.n() != host.n()) return "vertex count mismatch";
  for (const Edge& e : h.edges())
    if (!host.has_edge(e.u, e.v)) return "h is not a subgraph";
  if (r < 1) return "r must be positive";
  auto v = verify_decomposition(h, w);
  if (!v.ok()) return std::string("witness invalid: ") + to_string(v.violation) + " " + v.detail;
  if (w.size() > r) return "witness has " + std::to_string(w.size()) + " elements, r = " + std::to_string(r);
  int iso = isolated_after(host, h);
  if (iso < 2 * r) return "only " + std::to_string(iso) + " isolated vertices for r = " + std::to_string(r);
  return {};
}

ReducingSubgraph ReducingSubgraph::make(const Graph& host, Graph h, int r, Decomposition w) {
  std::string why = check(host, h, r, w);
  if (!why.empty()) throw Error(ErrorKind::UnreachableCase, "reducing subgraph: " + why, edge_list_dump(host));
  return ReducingSubgraph{std::move(h), r, std::move(w)};
}

std::optional<ReducingSubgraph> ReducingSubgraph::try_make(const Graph& host, Graph h, int r, Decomposition w) {
  if (!check(host, h, r, w).empty()) return std::nullopt;
  return ReducingSubgraph{std::move(h), r, std::move(w)};
}

namespace {

bool meets(const std::vector<int>& a, const std::vector<int>& b) {
  for (int v : a)
    if (std::find(b.begin(), b.end(), v) != b.end()) return true;
  return false;
}

// Splits each cycle into the first witness path that accepts it.
void absorb_cycles(Decomposition& w, const std::vector<VertexCycle>& cycles, const Graph& host) {
  for (const auto& cyc : cycles) {
    bool done = false;
    for (int i = 0; i < w.size() && !done; ++i) {
      auto& el = w.elements[i];
      if (el.kind != ElementKind::Path || !meets(el.vertices, cyc)) continue;
      try {
        auto s = two_path_split(el.vertices, cyc);
        el.vertices = s.p1;
        w.add_path(s.p2);
        done = true;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ChordLimitExceeded) throw;
      }
    }
    if (!done) throw Error(ErrorKind::UnreachableCase, "no witness path absorbs a short cycle", edge_list_dump(host));
  }
}

}  // namespace

ReducingSubgraph lifting_reduce(const Graph& g, const VertexPath& p, const std::vector<Lift>& lifts,
                                const PathRecurse& recurse) {
  Graph hp = graph_of_path(p, g.n());
  for (const Edge& e : hp.edges())
    if (!g.has_edge(e.u, e.v)) throw Error(ErrorKind::InvalidArgument, "path not in graph", edge_list_dump(g));
  Graph cur = difference(g, hp);
  for (const Lift& l : lifts) cur = apply_lift(cur, l);
  int iso = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0 && cur.degree(v) == 0) ++iso;
  if (iso < 2) throw Error(ErrorKind::PreconditionViolated, "lifting leaves fewer than two isolated vertices", edge_list_dump(g));

  Graph h = hp;
  Decomposition w;
  w.add_path(p);
  int r = 1;
  std::vector<VertexCycle> cycles;
  for (const auto& comp : components(cur)) {
    std::vector<Lift> inside;
    for (const Lift& l : lifts)
      if (std::binary_search(comp.begin(), comp.end(), l.x) && cur.has_edge(l.x, l.y)) inside.push_back(l);
    if (inside.empty()) continue;
    Graph sub = restrict_to(cur, comp);
    PathOutcome out = recurse(sub);
    Graph back = sub;
    for (auto it = inside.rbegin(); it != inside.rend(); ++it) {
      back.remove_edge(it->x, it->y);
      back.add_edge(it->x, it->v);
      back.add_edge(it->v, it->y);
    }
    h = united(h, back);
    switch (out.special) {
      case SpecialGraph::None: {
        Decomposition d = out.paths;
        for (auto it = inside.rbegin(); it != inside.rend(); ++it) d = unlift_decomposition(d, *it);
        w.append(d);
        r += static_cast<int>(comp.size()) / 2;
        break;
      }
      case SpecialGraph::K3: {
        auto cyc = as_cycle(back);
        if (!cyc) throw Error(ErrorKind::UnreachableCase, "unlifted triangle is not a cycle", edge_list_dump(g));
        cycles.push_back(*cyc);
        r += 1;
        break;
      }
      case SpecialGraph::K5minus:
        w.append(decompose_k5minus_subdivision(back));
        r += 2;
        break;
      default:
        throw Error(ErrorKind::UnreachableCase, std::string("lifted component is ") + to_string(out.special),
                    edge_list_dump(g));
    }
  }
  absorb_cycles(w, cycles, g);
  return ReducingSubgraph::make(g, std::move(h), r, std::move(w));
}

namespace {

bool touches(const VertexPath& p, const Lift& l) {
  return std::find(p.begin(), p.end(), l.x) != p.end() || std::find(p.begin(), p.end(), l.v) != p.end() ||
         std::find(p.begin(), p.end(), l.y) != p.end();
}

}  // namespace

ReducingSubgraph simple_lifting_reduce(const Graph& g, const VertexPath& p, const Lift& l, const PathRecurse& recurse) {
  if (!touches(p, l)) throw Error(ErrorKind::PreconditionViolated, "lift misses the path", edge_list_dump(g));
  return lifting_reduce(g, p, {l}, recurse);
}

ReducingSubgraph double_lifting_reduce(const Graph& g, const VertexPath& p, const Lift& l1, const Lift& l2,
                                       const PathRecurse& recurse) {
  if (l1.v == l2.v || !touches(p, l1) || !touches(p, l2))
    throw Error(ErrorKind::PreconditionViolated, "lifts must have distinct apexes meeting the path", edge_list_dump(g));
  int a = g.has_edge(l1.x, l2.v) + g.has_edge(l1.y, l2.v);
  int b = g.has_edge(l2.x, l1.v) + g.has_edge(l2.y, l1.v);
  if (a > 1 || b > 1) throw Error(ErrorKind::SideConditionViolated, "lift ends adjacent to the other apex", edge_list_dump(g));
  return lifting_reduce(g, p, {l1, l2}, recurse);
}

ReducingSubgraph absorb_special_components(const Graph& g, const ReducingSubgraph& rs) {
  for (const auto& comp : components(g)) {
    SpecialGraph s = recognize_special(restrict_to(g, comp));
    if (s == SpecialGraph::K3 || s == SpecialGraph::K5 || s == SpecialGraph::K5minus)
      throw Error(ErrorKind::PreconditionViolated, "a component of the graph is special", edge_list_dump(g));
  }
  Graph rest = difference(g, rs.h);
  Graph h = rs.h;
  Decomposition w = rs.witness;
  int r = rs.r;
  std::vector<VertexCycle> triangles;
  std::vector<Graph> fives;
  for (const auto& comp : components(rest)) {
    Graph sub = restrict_to(rest, comp);
    SpecialGraph s = recognize_special(sub);
    if (s == SpecialGraph::K3) {
      triangles.push_back(comp);
      r += 1;
    } else if (s == SpecialGraph::K5 || s == SpecialGraph::K5minus) {
      fives.push_back(sub);
      r += 2;
    } else {
      continue;
    }
    h = united(h, sub);
  }
  if (triangles.empty() && fives.empty()) return rs;
  w = absorb_short_cycles(w, triangles);
  for (const Graph& k : fives) {
    std::vector<int> kv;
    for (int v = 0; v < k.n(); ++v)
      if (k.degree(v) > 0) kv.push_back(v);
    int pick = -1;
    for (int i = 0; i < w.size() && pick < 0; ++i)
      if (w.elements[i].kind == ElementKind::Path && meets(w.elements[i].vertices, kv)) pick = i;
    if (pick < 0) throw Error(ErrorKind::UnreachableCase, "special component meets no witness path", edge_list_dump(g));
    Decomposition three = absorb_k5_like(w.elements[pick].vertices, k);
    w.elements.erase(w.elements.begin() + pick);
    w.append(three);
  }
  return ReducingSubgraph::make(g, std::move(h), r, std::move(w));
}

std::optional<Edge> find_useful_bridge(const Graph& g) {
  for (const Bridge& b : bridges_and_blocks(g).bridges)
    if (b.kind == BridgeKind::Useful) return b.edge;
  return std::nullopt;
}

Decomposition join_at_bridge(const Graph& g, const Edge& e, const PathRecurse& recurse) {
  const int v1 = e.u, v2 = e.v;
  Graph cut = g;
  cut.remove_edge(v1, v2);
  auto side = [&](int v) {
    for (auto& c : components(cut))
      if (std::binary_search(c.begin(), c.end(), v)) {
        Graph s = restrict_to(cut, c);
        s.add_edge(v1, v2);
        return s;
      }
    throw Error(ErrorKind::InvalidArgument, "bridge endpoint is isolated", edge_list_dump(g));
  };
  PathOutcome d1 = recurse(side(v1)), d2 = recurse(side(v2));
  if (d1.is_special() || d2.is_special())
    throw Error(ErrorKind::UnreachableCase, "side of a cut-edge is special", edge_list_dump(g));
  // Orient P1 to end v1 v2 and P2 to start v1 v2.
  auto take = [](Decomposition& d, int end) {
    for (size_t i = 0; i < d.elements.size(); ++i) {
      auto p = d.elements[i].vertices;
      if (p.back() != end && p.front() != end) continue;
      if (p.front() == end) std::reverse(p.begin(), p.end());
      d.elements.erase(d.elements.begin() + static_cast<long>(i));
      return p;
    }
    return VertexPath{};
  };
  VertexPath p1 = take(d1.paths, v2), p2 = take(d2.paths, v1);
  std::reverse(p2.begin(), p2.end());
  if (p1.size() < 2 || p2.size() < 2 || p1[p1.size() - 2] != v1 || p2[1] != v2)
    throw Error(ErrorKind::UnreachableCase, "cut-edge not at a path end", edge_list_dump(g));
  p1.insert(p1.end(), p2.begin() + 2, p2.end());
  Decomposition d = d1.paths;
  d.append(d2.paths);
  d.add_path(p1);
  return d;
}

Decomposition apply_path_reducing(const Graph& g, const ReducingSubgraph& rs, const PathRecurse& recurse) {
  std::string why = ReducingSubgraph::check(g, rs.h, rs.r, rs.witness);
  if (!why.empty()) throw Error(ErrorKind::BoundViolated, why, edge_list_dump(g));
  Decomposition out = rs.witness;
  Graph rest = difference(g, rs.h);
  for (const auto& comp : components(rest)) {
    PathOutcome sub = recurse(restrict_to(rest, comp));
    if (sub.is_special())
      throw Error(ErrorKind::PreconditionViolated, std::string("unabsorbed special component ") + to_string(sub.special),
                  edge_list_dump(g));
    out.append(sub.paths);
  }
  if (out.size() > g.non_isolated() / 2)
    throw Error(ErrorKind::BoundViolated, std::to_string(out.size()) + " paths", edge_list_dump(g));
  return out;
}

Decomposition apply_cycle_reducing(const Graph& g, const ReducingSubgraph& rs, const CycleRecurse& recurse) {
  std::string why = ReducingSubgraph::check(g, rs.h, rs.r, rs.witness);
  if (!why.empty()) throw Error(ErrorKind::BoundViolated, why, edge_list_dump(g));
  if (!rs.witness.all_cycles()) throw Error(ErrorKind::InvalidArgument, "cycle witness expected");
  Decomposition out = rs.witness;
  Graph rest = difference(g, rs.h);
  for (const auto& comp : components(rest)) out.append(recurse(restrict_to(rest, comp)));
  if (out.size() > (g.non_isolated() - 1) / 2)
    throw Error(ErrorKind::BoundViolated, std::to_string(out.size()) + " cycles", edge_list_dump(g));
  return out;
}

}  // namespace gd
