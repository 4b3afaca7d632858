#include <algorithm>
#include <array>
#include <iterator>
#include <optional>

#include "gd/error.hpp"
#include "gd/gallai.hpp"
#include "gd/ktree.hpp"
#include "gd/lab.hpp"
#include "gd/structure.hpp"

namespace gd {

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::SmallCase: return "SmallCase";
    case StepKind::SpecialGraph: return "SpecialGraph";
    case StepKind::UsefulCutSplit: return "UsefulCutSplit";
    case StepKind::Degree2Suppression: return "Degree2Suppression";
    case StepKind::TwoEdgeCutReduce: return "TwoEdgeCutReduce";
    case StepKind::TerminalDegreeCase: return "TerminalDegreeCase";
    case StepKind::Property1Case: return "Property1Case";
    case StepKind::Property2Case: return "Property2Case";
    case StepKind::Property3Case: return "Property3Case";
    case StepKind::EndgameOdd: return "EndgameOdd";
    case StepKind::EndgameDoubleCentered: return "EndgameDoubleCentered";
    case StepKind::K4FreeRoute: return "K4FreeRoute";
    case StepKind::K4SubdivisionCase: return "K4SubdivisionCase";
  }
  return "?";
}

std::string ReductionStep::label() const {
  std::string s = to_string(kind);
  if (!sub.empty()) s += "(" + sub + ")";
  return s;
}

namespace {

std::vector<int> common(const Graph& g, int u, int v) {
  std::vector<int> out;
  std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                        g.neighbors(v).end(), std::back_inserter(out));
  return out;
}

// First non-adjacent pair of a 3-set, followed by the remaining vertex.
std::optional<std::array<int, 3>> split_nonadjacent(const Graph& g, const std::vector<int>& s) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!g.has_edge(s[i], s[j])) return std::array<int, 3>{s[i], s[j], s[3 - i - j]};
  return std::nullopt;
}

std::vector<int> without(std::vector<int> s, int x) {
  s.erase(std::remove(s.begin(), s.end(), x), s.end());
  return s;
}

// True when every vertex of g other than u and v lies in one component of g - u - v.
bool connected_without(const Graph& g, int u, int v) {
  Graph h = g;
  h.isolate(u);
  h.isolate(v);
  for (int w = 0; w < g.n(); ++w)
    if (w != u && w != v && g.degree(w) > 0 && h.degree(w) == 0) return false;
  return components(h).size() <= 1;
}

std::vector<int> component_of(const Graph& g, int v) {
  for (auto& c : components(g))
    if (std::binary_search(c.begin(), c.end(), v)) return c;
  return {};
}

// Extends the path of d that ends at t by the edge t-w.
bool extend_at(Decomposition& d, int t, int w) {
  for (auto& el : d.elements) {
    if (el.kind != ElementKind::Path) continue;
    auto& p = el.vertices;
    if (p.size() >= 2 && p.back() == t) {
      p.push_back(w);
      return true;
    }
    if (p.size() >= 2 && p.front() == t) {
      p.insert(p.begin(), w);
      return true;
    }
  }
  return false;
}

Graph path_graph(const Graph& g, std::initializer_list<std::pair<int, int>> edges) {
  Graph h(g.n());
  for (auto [a, b] : edges) h.add_edge(a, b);
  return h;
}

ReducingSubgraph path_rs(const Graph& g, const VertexPath& p) {
  Decomposition w;
  w.add_path(p);
  return ReducingSubgraph::make(g, graph_of_path(p, g.n()), 1, std::move(w));
}

// A decomposition of all of g, packaged as a reducing subgraph with r = floor(n/2).
ReducingSubgraph whole(const Graph& g, Decomposition d) {
  return ReducingSubgraph::make(g, g, g.non_isolated() / 2, std::move(d));
}

Decomposition stored_k44() {
  Decomposition d;
  for (int i = 0; i < 4; ++i) d.add_path({i, 4 + (i + 1) % 4, (i + 3) % 4, 4 + (i + 2) % 4});
  return d;
}

using Found = PairConstruction;

class Tw3Driver {
 public:
  Tw3Driver(const EndgameConfig& cfg, std::vector<ReductionStep>* log) : cfg_(cfg), log_(log) {}

  PathOutcome solve(const Graph& host) {
    Subgraph s = compact(host);
    PathOutcome out = solve_local(s.graph);
    if (!out.is_special()) out.paths = to_host(out.paths, s.to_host);
    return out;
  }

  std::optional<Found> attempt(StepKind kind, const Graph& g, int u, int v) {
    switch (kind) {
      case StepKind::TerminalDegreeCase: return terminal_degree(g, u, v);
      case StepKind::Property1Case: return property1(g, u, v);
      case StepKind::Property2Case: return property2(g, u, v);
      case StepKind::Property3Case: return property3(g, u, v);
      default: throw Error(ErrorKind::InvalidArgument, std::string(to_string(kind)) + " is not a pair construction");
    }
  }

 private:
  PathRecurse rec() {
    return [this](const Graph& h) { return solve(h); };
  }

  size_t mark(StepKind k, int n) {
    if (!log_) return 0;
    log_->push_back({k, {}, n});
    return log_->size() - 1;
  }
  void label(size_t at, const std::string& sub) {
    if (log_) (*log_)[at].sub = sub;
  }
  void rollback(size_t at) {
    if (log_) log_->resize(at);
  }

  PathOutcome done(const Graph& g, Decomposition d) {
    auto v = verify_decomposition(g, d);
    if (!v.ok()) throw Error(ErrorKind::UnreachableCase, std::string("driver output invalid: ") + to_string(v.violation),
                             edge_list_dump(g));
    if (d.size() > g.non_isolated() / 2)
      throw Error(ErrorKind::BoundViolated, std::to_string(d.size()) + " paths", edge_list_dump(g));
    return {SpecialGraph::None, std::move(d)};
  }

  PathOutcome reduce(const Graph& g, const ReducingSubgraph& rs) {
    return done(g, apply_path_reducing(g, absorb_special_components(g, rs), rec()));
  }

  PathOutcome solve_local(const Graph& g) {
    const int n = g.n();
    if (g.m() == 0) return {};
    if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "decompose_paths_tw3 needs a connected graph");
    SpecialGraph sp = recognize_special(g);
    if (sp == SpecialGraph::K3 || sp == SpecialGraph::K5minus) {
      mark(StepKind::SpecialGraph, n);
      return {sp, {}};
    }
    if (n <= 5) {
      mark(StepKind::SmallCase, n);
      return done(g, exact_path_number(g).witness);
    }
    auto emb = embed_partial_3tree(g);
    if (!emb) throw Error(ErrorKind::NotPartialThreeTree, "treewidth exceeds 3", edge_list_dump(g));
    if (sp == SpecialGraph::K5 || sp == SpecialGraph::QuasiComplete)
      throw Error(ErrorKind::UnreachableCase, std::string("partial 3-tree recognised as ") + to_string(sp),
                  edge_list_dump(g));

    if (auto out = useful_bridge(g)) return *out;
    if (auto out = suppress_degree2(g)) return *out;
    if (auto out = two_edge_cut(g)) return *out;

    const Graph tree = emb->tree();
    std::vector<int> ts = terminals(*emb);
    std::sort(ts.begin(), ts.end());
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < ts.size(); ++i)
      for (size_t j = i + 1; j < ts.size(); ++j)
        if (!tree.has_edge(ts[i], ts[j])) pairs.push_back({ts[i], ts[j]});

    using Attempt = std::optional<Found> (Tw3Driver::*)(const Graph&, int, int);
    const std::pair<StepKind, Attempt> order[] = {
        {StepKind::TerminalDegreeCase, &Tw3Driver::terminal_degree},
        {StepKind::Property1Case, &Tw3Driver::property1},
        {StepKind::Property2Case, &Tw3Driver::property2},
        {StepKind::Property3Case, &Tw3Driver::property3},
    };
    for (const auto& [kind, attempt] : order)
      for (auto [u, v] : pairs) {
        size_t at = mark(kind, n);
        auto f = (this->*attempt)(g, u, v);
        if (!f) {
          rollback(at);
          continue;
        }
        label(at, f->sub);
        return reduce(g, f->rs);
      }
    return endgame(g, ts);
  }

  // A cut-edge with at least two vertices on each side.
  std::optional<PathOutcome> useful_bridge(const Graph& g) {
    auto e = find_useful_bridge(g);
    if (!e) return std::nullopt;
    mark(StepKind::UsefulCutSplit, g.n());
    return done(g, join_at_bridge(g, *e, rec()));
  }

  // A degree-2 vertex with non-adjacent neighbours.
  std::optional<PathOutcome> suppress_degree2(const Graph& g) {
    for (int w = 0; w < g.n(); ++w) {
      if (g.degree(w) != 2) continue;
      int x = g.neighbors(w)[0], y = g.neighbors(w)[1];
      if (g.has_edge(x, y)) continue;
      size_t at = mark(StepKind::Degree2Suppression, g.n());
      Lift l{x, w, y};
      PathOutcome out = solve(apply_lift(g, l));
      if (out.special == SpecialGraph::K5minus) {
        label(at, "k5minus");
        return done(g, decompose_k5minus_subdivision(g));
      }
      if (out.is_special())
        throw Error(ErrorKind::UnreachableCase, "suppressed graph is a triangle", edge_list_dump(g));
      return done(g, unlift_decomposition(out.paths, l));
    }
    return std::nullopt;
  }

  // A 2-edge cut whose ends do not induce a cycle.
  std::optional<PathOutcome> two_edge_cut(const Graph& g) {
    for (auto [e, f] : two_edge_cuts(g)) {
      Graph cut = g;
      cut.remove_edge(e.u, e.v);
      cut.remove_edge(f.u, f.v);
      if (components(cut).size() != 2) continue;
      auto side1 = component_of(cut, e.u);
      // Orient so a, c lie in G1' and b, d in G2'.
      int a = e.u, b = e.v, c, d;
      if (std::binary_search(side1.begin(), side1.end(), f.u)) {
        c = f.u;
        d = f.v;
      } else {
        c = f.v;
        d = f.u;
      }
      for (int flip = 0; flip < 2; ++flip) {
        if (flip) {
          std::swap(a, b);
          std::swap(c, d);
        }
        if (b == d || g.has_edge(b, d)) continue;
        auto side2 = component_of(cut, b);
        Graph g2p = restrict_to(cut, side2);
        Graph g2 = g2p;
        g2.add_edge(b, d);
        size_t at = mark(StepKind::TwoEdgeCutReduce, g.n());
        PathOutcome out = solve(g2);
        if (out.special == SpecialGraph::K3) {
          rollback(at);
          continue;
        }
        auto side1p = component_of(cut, a);
        Graph g1p = restrict_to(cut, side1p);
        VertexPath inner = a == c ? VertexPath{a} : *shortest_path(g1p, std::vector<int>{a}, std::vector<int>{c});
        VertexPath p{b};
        p.insert(p.end(), inner.begin(), inner.end());
        p.push_back(d);
        Graph h = united(g2p, graph_of_path(p, g.n()));
        Decomposition w;
        if (out.special == SpecialGraph::K5minus) {
          label(at, "k5minus");
          w = decompose_k5minus_subdivision(h);
        } else if (out.is_special()) {
          throw Error(ErrorKind::UnreachableCase, "cut side is special", edge_list_dump(g));
        } else {
          w = out.paths;
          // Replace bd by the detour through G1'.
          bool placed = false;
          for (auto& el : w.elements) {
            auto& q = el.vertices;
            for (size_t i = 0; i + 1 < q.size() && !placed; ++i) {
              if (make_edge(q[i], q[i + 1]) != make_edge(b, d)) continue;
              VertexPath mid(p.begin() + 1, p.end() - 1);
              if (q[i] == d) std::reverse(mid.begin(), mid.end());
              q.insert(q.begin() + static_cast<long>(i) + 1, mid.begin(), mid.end());
              placed = true;
            }
          }
          if (!placed) throw Error(ErrorKind::UnreachableCase, "added edge missing from decomposition", edge_list_dump(g));
        }
        int r = static_cast<int>(side2.size()) / 2;
        return reduce(g, ReducingSubgraph::make(g, std::move(h), r, std::move(w)));
      }
    }
    return std::nullopt;
  }

  // A terminal of degree at most 2.
  std::optional<Found> terminal_degree(const Graph& g, int u, int v) {
    if (g.degree(u) < g.degree(v)) std::swap(u, v);
    if (g.degree(v) > 2) return std::nullopt;
    const std::vector<int> nu = g.neighbors(u), nv = g.neighbors(v);
    auto close_at_v = [&](VertexPath& p) {
      const int prev = p[p.size() - 2];
      for (int y : nv)
        if (y != prev) p.push_back(y);
    };
    if (g.degree(u) == 1) return Found{"n0", path_rs(g, *shortest_path(g, std::vector<int>{u}, std::vector<int>{v}))};
    auto cm = common(g, u, v);
    if (g.degree(u) == 2) {
      if (cm.size() <= 1) {
        VertexPath p = *shortest_path(g, std::vector<int>{u}, std::vector<int>{v});
        const int next = p[1];
        for (int b : nu)
          if (b != next) p.insert(p.begin(), b);
        close_at_v(p);
        return Found{"n1", path_rs(g, p)};
      }
      int a = cm[0], b = cm[1];
      if (!g.has_edge(a, b)) return std::nullopt;
      Graph rest = g;
      rest.isolate(u);
      rest.isolate(v);
      if (!is_connected(rest)) return std::nullopt;
      PathOutcome out = solve(rest);
      if (out.special == SpecialGraph::None)
        return Found{"n2", whole(g, absorb_short_cycles(out.paths, {{a, u, b, v}}))};
      if (out.special != SpecialGraph::K5minus) return std::nullopt;
      Graph sub = rest;
      sub.remove_edge(a, b);
      sub.add_edge(a, u);
      sub.add_edge(u, b);
      return Found{"n2-k5minus", whole(g, absorb_short_cycles(decompose_k5minus_subdivision(sub), {{v, a, b}}))};
    }
    // d(u) = 3.
    for (int w : nu)
      if (g.degree(w) == 1) {
        VertexPath p = *shortest_path(g, std::vector<int>{w}, std::vector<int>{v});
        close_at_v(p);
        return Found{"n3", path_rs(g, p)};
      }
    const std::vector<int> skip{u};
    if (auto s = split_nonadjacent(g, nu)) {
      auto [b, c, a] = *s;
      auto inner = shortest_path(g, std::vector<int>{a}, std::vector<int>{v}, skip);
      if (!inner) return std::nullopt;
      VertexPath p{u};
      p.insert(p.end(), inner->begin(), inner->end());
      close_at_v(p);
      return Found{"n4", simple_lifting_reduce(g, p, {b, u, c}, rec())};
    }
    if (cm.size() <= 1) {
      auto inner = shortest_path(g, nu, std::vector<int>{v}, skip);
      if (!inner) return std::nullopt;
      int a = inner->front();
      auto bc = without(nu, a);
      int b = bc[0], c = bc[1];
      VertexPath p{u, c, b};
      p.insert(p.end(), inner->begin(), inner->end());
      close_at_v(p);
      return Found{"n5", simple_lifting_reduce(g, p, {a, u, b}, rec())};
    }
    int a = cm[0], c = cm[1];
    int b = without(without(nu, a), c)[0];
    return Found{"n6", simple_lifting_reduce(g, {u, c, v, a, b}, {a, u, b}, rec())};
  }

  // Terminals of degree 3 with at most one common neighbour.
  std::optional<Found> property1(const Graph& g, int u, int v) {
    if (g.degree(u) != 3 || g.degree(v) != 3 || common(g, u, v).size() > 1) return std::nullopt;
    Graph guv = g;
    guv.isolate(u);
    guv.isolate(v);
    auto cat = [](VertexPath head, const VertexPath& mid, const VertexPath& tail) {
      head.insert(head.end(), mid.begin(), mid.end());
      head.insert(head.end(), tail.begin(), tail.end());
      return head;
    };
    if (connected_without(g, u, v)) {
      auto su = split_nonadjacent(g, g.neighbors(u));
      auto sv = split_nonadjacent(g, g.neighbors(v));
      if (su && sv) {
        auto [a, b, c] = *su;
        auto [x, y, z] = *sv;
        auto inner = shortest_path(guv, std::vector<int>{c}, std::vector<int>{z});
        if (!inner) return std::nullopt;
        return Found{"g4", double_lifting_reduce(g, cat({u}, *inner, {v}), {a, u, b}, {x, v, y}, rec())};
      }
      if (su || sv) {
        if (!su) std::swap(u, v);
        auto [a, b, c] = *split_nonadjacent(g, g.neighbors(u));
        auto inner = shortest_path(guv, std::vector<int>{c}, g.neighbors(v));
        if (!inner) return std::nullopt;
        int x = inner->back();
        auto yz = without(g.neighbors(v), x);
        int y = yz[0], z = yz[1];
        return Found{"g5", double_lifting_reduce(g, cat({u}, *inner, {y, z, v}), {a, u, b}, {x, v, y}, rec())};
      }
      auto inner = shortest_path(guv, g.neighbors(u), g.neighbors(v));
      if (!inner) return std::nullopt;
      int a = inner->front(), x = inner->back();
      auto bc = without(g.neighbors(u), a);
      auto yz = without(g.neighbors(v), x);
      int b = bc[0], c = bc[1], y = yz[0], z = yz[1];
      return Found{"g6", double_lifting_reduce(g, cat({u, c, b}, *inner, {y, z, v}), {a, u, b}, {x, v, y}, rec())};
    }
    auto inner = shortest_path(guv, g.neighbors(u), g.neighbors(v));
    if (!inner) return std::nullopt;
    VertexPath mid = *inner;
    auto rest_u = without(g.neighbors(u), mid.front());
    auto rest_v = without(g.neighbors(v), mid.back());
    if (!g.has_edge(rest_u[0], rest_u[1]) && !g.has_edge(rest_v[0], rest_v[1]))
      return Found{"g7", double_lifting_reduce(g, cat({u}, mid, {v}), {rest_u[0], u, rest_u[1]},
                                               {rest_v[0], v, rest_v[1]}, rec())};
    if (!g.has_edge(rest_v[0], rest_v[1])) {
      std::swap(u, v);
      std::swap(rest_u, rest_v);
      std::reverse(mid.begin(), mid.end());
    }
    const int a = mid.front(), x = mid.back();
    const std::vector<int> skip{u, v};
    for (int i = 0; i < 2; ++i) {
      int bp = rest_u[i], cp = rest_u[1 - i];
      if (g.degree(bp) != 1) continue;
      auto q = shortest_path(g, rest_v, std::vector<int>{a, cp}, skip);
      if (!q) continue;
      int y2 = q->front(), t = q->back();
      int z2 = rest_v[0] == y2 ? rest_v[1] : rest_v[0];
      if (!g.has_edge(x, y2)) {
        VertexPath back(q->rbegin(), q->rend());
        int other = t == a ? cp : a;
        return Found{"m8", double_lifting_reduce(g, cat({u}, back, {z2, v}), {other, u, bp}, {x, v, y2}, rec())};
      }
      return Found{"m9", double_lifting_reduce(g, cat({u}, mid, {y2, z2, v}), {bp, u, cp}, {x, v, y2}, rec())};
    }
    return std::nullopt;
  }

  // Recurses on the component of gp containing t; returns it with the decomposition
  // of its unlift along (t, w, o), where gp holds the lifted edge to.
  std::optional<std::pair<Graph, Decomposition>> lifted_component(const Graph& gp, int t, int w, int o,
                                                                  int& size) {
    auto comp = component_of(gp, t);
    size = static_cast<int>(comp.size());
    Graph sub = restrict_to(gp, comp);
    PathOutcome out = solve(sub);
    Graph back = sub;
    back.remove_edge(t, o);
    back.add_edge(t, w);
    back.add_edge(w, o);
    if (out.special == SpecialGraph::None) return std::make_pair(back, unlift_decomposition(out.paths, {t, w, o}));
    if (out.special == SpecialGraph::K5minus) return std::make_pair(back, decompose_k5minus_subdivision(back));
    return std::nullopt;
  }

  // Terminals with the same three neighbours.
  std::optional<Found> property2(const Graph& g, int u, int v) {
    if (g.degree(u) != 3 || g.neighbors(u) != g.neighbors(v)) return std::nullopt;
    const std::vector<int> s = g.neighbors(u);
    auto split = split_nonadjacent(g, s);
    if (!split) {
      int a = s[0], b = s[1], c = s[2];
      return Found{"y1", lifting_reduce(g, {u, a, b, c, v}, {{b, u, c}, {a, v, b}}, rec())};
    }
    auto [a, b, c] = *split;
    for (auto [t, o] : {std::pair{a, b}, std::pair{b, a}}) {
      if (g.degree(t) % 2) continue;
      Graph gp = g;
      gp.isolate(u);
      gp.isolate(v);
      gp.add_edge(t, o);
      int size = 0;
      auto cd = lifted_component(gp, t, v, o, size);
      if (!cd) continue;
      auto& [cc, d] = *cd;
      if (!extend_at(d, t, u)) return std::nullopt;
      d.add_path({o, u, c, v});
      Graph h = united(cc, path_graph(g, {{t, u}, {o, u}, {u, c}, {c, v}}));
      return Found{"m12", ReducingSubgraph::make(g, std::move(h), size / 2 + 1, std::move(d))};
    }
    if (!connected_without(g, u, v)) return std::nullopt;
    Graph gp = g;
    gp.isolate(u);
    gp.isolate(v);
    PathOutcome out = solve(gp);
    if (out.special == SpecialGraph::K5minus) {
      if (gp.has_edge(a, b)) return std::nullopt;
      std::vector<int> xy;
      for (int w = 0; w < g.n(); ++w)
        if (gp.degree(w) > 0 && w != a && w != b && w != c) xy.push_back(w);
      int x = xy[0], y = xy[1];
      Decomposition d;
      d.add_path({v, c, u, a, x, b, y});
      d.add_path({u, b, v, a, c, y});
      d.add_path({a, y, x, c, b});
      return Found{"m14", whole(g, std::move(d))};
    }
    if (out.is_special()) return std::nullopt;
    Decomposition d = out.paths;
    auto ends_at = [](const Element& el, int t) { return el.vertices.front() == t || el.vertices.back() == t; };
    int ia = -1, ib = -1;
    for (int i = 0; i < d.size(); ++i)
      if (ia < 0 && ends_at(d.elements[i], a)) ia = i;
    for (int i = 0; i < d.size(); ++i)
      if (ends_at(d.elements[i], b) && (ib < 0 || ib == ia)) ib = i;
    if (ia < 0 || ib < 0) return std::nullopt;
    if (ia == ib) {
      auto& p = d.elements[ia].vertices;
      if (p.front() != a) std::reverse(p.begin(), p.end());
      p.insert(p.begin(), v);
      p.push_back(u);
    } else {
      auto grow = [](VertexPath& p, int t, int w) {
        if (p.back() == t)
          p.push_back(w);
        else
          p.insert(p.begin(), w);
      };
      grow(d.elements[ia].vertices, a, v);
      grow(d.elements[ib].vertices, b, u);
    }
    d.add_path({b, v, c, u, a});
    return Found{"m13", whole(g, std::move(d))};
  }

  // Terminals with exactly two common neighbours, one of them of even degree.
  std::optional<Found> property3(const Graph& g, int u, int v) {
    if (g.degree(u) != 3 || g.degree(v) != 3) return std::nullopt;
    auto cm = common(g, u, v);
    if (cm.size() != 2) return std::nullopt;
    const int c = without(without(g.neighbors(u), cm[0]), cm[1])[0];
    const int d = without(without(g.neighbors(v), cm[0]), cm[1])[0];
    for (int i = 0; i < 2; ++i) {
      const int t = cm[i], o = cm[1 - i];
      if (g.degree(t) % 2) continue;
      // y2, in both orientations.
      for (auto [U, V, C, D] : {std::array{u, v, c, d}, std::array{v, u, d, c}}) {
        if (g.has_edge(t, C)) continue;
        Graph gp = g;
        gp.isolate(U);
        gp.isolate(V);
        gp.add_edge(t, C);
        int size = 0;
        auto res = lifted_component(gp, t, U, C, size);
        if (!res) continue;
        auto& [cc, dec] = *res;
        if (!extend_at(dec, t, V)) continue;
        dec.add_path({U, o, V, D});
        Graph h = united(cc, path_graph(g, {{t, V}, {U, o}, {o, V}, {V, D}}));
        return Found{"y2", ReducingSubgraph::make(g, std::move(h), size / 2 + 1, std::move(dec))};
      }
      if (g.has_edge(t, c) && g.has_edge(t, d)) {
        Graph gp = g;
        gp.isolate(u);
        gp.isolate(v);
        gp.remove_edge(t, d);
        // lifted_component expects the lifted edge present; tc is that edge here.
        int size = 0;
        auto res = lifted_component(gp, t, u, c, size);
        if (!res) continue;
        auto& [cc, dec] = *res;
        if (!extend_at(dec, t, v)) continue;
        dec.add_path({u, o, v, d, t, c});
        Graph h = united(cc, path_graph(g, {{t, v}, {u, o}, {o, v}, {v, d}, {d, t}, {t, c}}));
        return Found{"y3", ReducingSubgraph::make(g, std::move(h), size / 2 + 1, std::move(dec))};
      }
    }
    return std::nullopt;
  }

  PathOutcome endgame(const Graph& g, const std::vector<int>& ts) {
    for (int t : ts)
      if (g.degree(t) != 3)
        throw Error(ErrorKind::UnreachableCase, "no reduction applies but terminal " + std::to_string(t + 1) +
                                                    " has degree " + std::to_string(g.degree(t)),
                    edge_list_dump(g));
    for (size_t i = 0; i < ts.size(); ++i)
      for (size_t j = i + 1; j < ts.size(); ++j) {
        auto cm = common(g, ts[i], ts[j]);
        bool odd = std::all_of(cm.begin(), cm.end(), [&](int w) { return g.degree(w) % 2 == 1; });
        if (cm.size() != 2 || !odd)
          throw Error(ErrorKind::UnreachableCase, "no reduction applies to terminals " + std::to_string(ts[i] + 1) +
                                                      ", " + std::to_string(ts[j] + 1),
                      edge_list_dump(g));
      }
    std::vector<int> shared = g.neighbors(ts[0]);
    for (int t : ts) {
      std::vector<int> next;
      std::set_intersection(shared.begin(), shared.end(), g.neighbors(t).begin(), g.neighbors(t).end(),
                            std::back_inserter(next));
      shared = next;
    }
    mark(shared.size() >= 2 ? StepKind::EndgameDoubleCentered : StepKind::EndgameOdd, g.n());
    return done(g, endgame_decompose(g, cfg_));
  }

  EndgameConfig cfg_;
  std::vector<ReductionStep>* log_;
};

}  // namespace

Decomposition endgame_decompose(const Graph& g, const EndgameConfig& cfg) {
  const Graph k44 = k44_minus_pm();
  if (g.non_isolated() == 8 && g.m() == k44.m())
    if (auto iso = find_isomorphism(k44, g)) return to_host(stored_k44(), *iso);
  const int n = g.non_isolated();
  if (n > cfg.max_vertices)
    throw Error(ErrorKind::EndgameTooLarge,
                std::to_string(n) + " vertices exceed the endgame cap of " + std::to_string(cfg.max_vertices),
                edge_list_dump(g));
  auto d = paths_within(g, n / 2, ExactCaps{cfg.max_vertices, 64});
  if (!d) throw Error(ErrorKind::UnreachableCase, "endgame has no floor(n/2) path decomposition", edge_list_dump(g));
  return *d;
}

std::optional<PairConstruction> try_pair_construction(const Graph& g, StepKind kind, int u, int v,
                                                     const EndgameConfig& cfg) {
  Tw3Driver driver(cfg, nullptr);
  return driver.attempt(kind, g, u, v);
}

Tw3Outcome decompose_paths_tw3(const Graph& g, const EndgameConfig& cfg, std::vector<ReductionStep>* log) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "decompose_paths_tw3 needs a connected graph");
  if (g.non_isolated() >= 3 && !embed_partial_3tree(compact(g).graph))
    throw Error(ErrorKind::NotPartialThreeTree, "treewidth exceeds 3", edge_list_dump(g));
  Tw3Driver driver(cfg, log);
  return driver.solve(g);
}

}  // namespace gd
