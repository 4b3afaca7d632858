#include "gd/maxdeg4.hpp"

#include <algorithm>
#include <functional>

#include "gd/error.hpp"
#include "gd/lab.hpp"
#include "gd/reduce.hpp"
#include "gd/structure.hpp"

namespace gd {

namespace {

// Relabels h so that the new branch index i is the old index lab[i].
K4Subdivision by_labels(const K4Subdivision& h, const std::array<int, 4>& lab) {
  std::array<int, 4> perm{};
  for (int i = 0; i < 4; ++i) perm[lab[i]] = i;
  return h.relabeled(perm);
}

// Concatenation of branch paths through the listed branch indices.
VertexPath chain_of(const K4Subdivision& h, const std::vector<int>& seq) {
  VertexPath out;
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    VertexPath p = h.path(seq[i], seq[i + 1]);
    out.insert(out.end(), out.empty() ? p.begin() : p.begin() + 1, p.end());
  }
  return out;
}

// p with a prepended (if a >= 0) and b appended (if b >= 0).
VertexPath with_ends(int a, VertexPath p, int b) {
  if (a >= 0) p.insert(p.begin(), a);
  if (b >= 0) p.push_back(b);
  return p;
}

VertexPath operator+(VertexPath a, const VertexPath& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Decomposition paths_of(std::initializer_list<VertexPath> ps) {
  Decomposition d;
  for (const auto& p : ps) d.add_path(p);
  return d;
}

bool interior_contains(const VertexPath& p, int v) {
  return p.size() > 2 && std::find(p.begin() + 1, p.end() - 1, v) != p.end() - 1;
}

class Md4Driver {
 public:
  Md4Driver(const EndgameConfig& cfg, std::vector<ReductionStep>* log) : cfg_(cfg), log_(log) {}

  PathOutcome solve(const Graph& host) {
    Subgraph s = compact(host);
    PathOutcome out = solve_local(s.graph);
    if (!out.is_special()) out.paths = to_host(out.paths, s.to_host);
    return out;
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

  PathOutcome done(const Graph& g, Decomposition d) {
    auto v = verify_decomposition(g, d);
    if (!v.ok()) throw Error(ErrorKind::UnreachableCase, std::string("driver output invalid: ") + to_string(v.violation),
                             edge_list_dump(g));
    if (d.size() > g.non_isolated() / 2)
      throw Error(ErrorKind::BoundViolated, std::to_string(d.size()) + " paths", edge_list_dump(g));
    return {SpecialGraph::None, std::move(d)};
  }

  PathOutcome solve_local(const Graph& g) {
    const int n = g.n();
    if (g.m() == 0) return {};
    if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "decompose_paths_maxdeg4 needs a connected graph");
    if (g.max_degree() > 4)
      throw Error(ErrorKind::MaxDegreeExceeded, "maximum degree " + std::to_string(g.max_degree()), edge_list_dump(g));
    SpecialGraph sp = recognize_special(g);
    if (sp == SpecialGraph::K3 || sp == SpecialGraph::K5 || sp == SpecialGraph::K5minus) {
      mark(StepKind::SpecialGraph, n);
      return {sp, {}};
    }
    if (n <= 5) {
      mark(StepKind::SmallCase, n);
      return done(g, exact_path_number(g).witness);
    }
    if (auto e = find_useful_bridge(g)) {
      mark(StepKind::UsefulCutSplit, n);
      return done(g, join_at_bridge(g, *e, rec()));
    }
    auto h = find_k4_subdivision(g);
    if (!h) {
      mark(StepKind::K4FreeRoute, n);
      PathOutcome out = decompose_paths_tw3(g, cfg_, log_);
      if (out.is_special())
        throw Error(ErrorKind::UnreachableCase, "K4-free graph recognised as special", edge_list_dump(g));
      return done(g, std::move(out.paths));
    }
    size_t at = mark(StepKind::K4SubdivisionCase, n);
    PairConstruction f = k4_case(g, *h);
    label(at, f.sub);
    return done(g, apply_path_reducing(g, absorb_special_components(g, f.rs), rec()));
  }

  [[noreturn]] static void unreachable(const Graph& g, const std::string& why) {
    throw Error(ErrorKind::UnreachableCase, why, edge_list_dump(g));
  }

  PairConstruction k4_case(const Graph& g, const K4Subdivision& h0) {
    const int n = g.n();
    const Graph hg = h0.graph(n);
    // z[i]: the far end of the edge of g - E(H) at branch vertex i, or -1.
    std::array<int, 4> z{-1, -1, -1, -1};
    Graph hs = hg;
    for (int i = 0; i < 4; ++i)
      for (int y : g.neighbors(h0.branch[i])) {
        if (hg.has_edge(h0.branch[i], y)) continue;
        if (z[i] >= 0) unreachable(g, "branch vertex with two edges outside H");
        z[i] = y;
        hs.add_edge(h0.branch[i], y);
      }
    auto in_h = [&](int v) { return v >= 0 && hg.degree(v) > 0; };
    auto mult = [&](int v) { return v < 0 ? 0 : static_cast<int>(std::count(z.begin(), z.end(), v)); };
    int inside = 0, top = 0;
    for (int i = 0; i < 4; ++i) {
      inside += in_h(z[i]);
      if (!in_h(z[i])) top = std::max(top, mult(z[i]));
    }
    if (inside >= 2) unreachable(g, "two edges outside H return to H");

    if (inside == 0) {
      if (top == 4) unreachable(g, "K5 with more than five vertices");
      if (top <= 2) {
        std::array<int, 4> lab{0, 1, 2, 3};
        do {
          auto zz = [&](int i) { return z[lab[i]]; };
          if ((zz(0) >= 0 && zz(0) == zz(3)) || (zz(1) >= 0 && zz(1) == zz(2))) continue;
          K4Subdivision h = by_labels(h0, lab);
          VertexPath q14 = with_ends(zz(0), chain_of(h, {0, 1, 2, 3}), zz(3));
          VertexPath q23 = with_ends(zz(1), chain_of(h, {1, 3, 0, 2}), zz(2));
          return {"i-2", ReducingSubgraph::make(g, hs, 2, paths_of({q14, q23}))};
        } while (std::next_permutation(lab.begin(), lab.end()));
        unreachable(g, "no pairing of the outside edges");
      }
      return k5minus_case(g, h0, z);
    }
    return inside_case(g, h0, z, hs);
  }

  // Three branch vertices share their outside neighbour.
  PairConstruction k5minus_case(const Graph& g, const K4Subdivision& h0, const std::array<int, 4>& z) {
    const int n = g.n();
    std::array<int, 4> lab{};
    int zc = -1;
    for (int i = 0; i < 4; ++i)
      if (std::count(z.begin(), z.end(), z[i]) == 3) zc = z[i];
    int k = 0, odd = -1;
    for (int i = 0; i < 4; ++i) {
      if (z[i] == zc) lab[k++] = i;
      else odd = i;
    }
    lab[3] = odd;
    K4Subdivision h = by_labels(h0, lab);
    const int x1 = h.branch[0], x2 = h.branch[1], x3 = h.branch[2], x4 = h.branch[3];
    const int z4 = z[odd];
    Graph hp = h.graph(n);
    for (int i = 0; i < 3; ++i) hp.add_edge(h.branch[i], zc);

    if (h.edge_count() > 6) {
      Decomposition d = decompose_k5minus_subdivision(hp);
      if (z4 >= 0) {
        bool ok = false;
        for (auto& el : d.elements) {
          auto& p = el.vertices;
          if (p.back() == x4) {
            p.push_back(z4);
            ok = true;
          } else if (p.front() == x4) {
            p.insert(p.begin(), z4);
            ok = true;
          }
          if (ok) break;
        }
        if (!ok) unreachable(g, "degree-3 vertex of a K5- subdivision is not a path end");
        hp.add_edge(x4, z4);
      }
      return {"i-k5minus", ReducingSubgraph::make(g, hp, 2, std::move(d))};
    }

    // H + x1z + x2z + x3z is K5- itself; zc and x4 are its degree-3 vertices.
    Graph rest = difference(g, hp);
    const int ends[] = {x4};
    const int start[] = {zc};
    auto pp = shortest_path(rest, start, ends);
    if (!pp) {
      const int a = rest.degree(zc) > 0 ? zc : x4, b = a == zc ? x4 : zc;
      if (rest.degree(a) == 0) unreachable(g, "K5- with no outside edge");
      const int a2 = rest.neighbors(a)[0];
      if (g.m() == 10)
        return {"z-1", whole(g, paths_of({{a2, a, x3, x2, b, x1}, {a, x2, x1, x3, b}, {x1, a}}))};
      if (rest.degree(b) == 0) unreachable(g, "K5- with one pendant and more edges");
      const int b2 = rest.neighbors(b)[0];
      return {"z-1-pendant", path_rs(g, {a2, a, x1, b, b2})};
    }
    const VertexPath& p = *pp;
    if (p.size() == 2) unreachable(g, "K5 with more than five vertices");
    const int zp = p[1];
    std::vector<int> extra;
    for (int y : rest.neighbors(zp))
      if (y != p[0] && y != p[2]) extra.push_back(y);
    const int y1 = extra.size() > 0 ? extra[0] : -1, y2 = extra.size() > 1 ? extra[1] : -1;
    VertexPath a = with_ends(y1, VertexPath(p.begin() + 1, p.end()) + VertexPath{x3, x2, x1}, -1);
    VertexPath b = with_ends(y2, VertexPath{zp, zc, x3, x1, x4}, -1);
    VertexPath c{x1, zc, x2, x4};
    Graph h3 = united(hp, graph_of_path(p, n));
    for (int y : extra) h3.add_edge(zp, y);
    return {"z-2", ReducingSubgraph::make(g, h3, 3, paths_of({a, b, c}))};
  }

  // One outside edge returns into a branch path.
  PairConstruction inside_case(const Graph& g, const K4Subdivision& h0, const std::array<int, 4>& z, const Graph& hs) {
    int a = -1;
    for (int i = 0; i < 4; ++i)
      if (z[i] >= 0 && h0.graph(g.n()).degree(z[i]) > 0) a = i;
    const int z1 = z[a];
    std::array<int, 4> lab{};
    bool found = false;
    for (int i = 0; i < 4 && !found; ++i)
      for (int j = i + 1; j < 4 && !found; ++j)
        if (i != a && j != a && interior_contains(h0.path(i, j), z1)) {
          lab = {a, i, j, 6 - a - i - j};
          found = true;
        }
    if (!found) unreachable(g, "outside edge returns into a branch path at its own branch vertex");
    K4Subdivision h = by_labels(h0, lab);
    for (int j = 1; j < 4; ++j)
      if (h.path(0, j).size() != 2) unreachable(g, "K4 subdivision is not smallest");
    std::array<int, 4> zl{};
    for (int i = 0; i < 4; ++i) zl[i] = z[lab[i]];

    if (zl[1] >= 0 && zl[1] == zl[2] && zl[2] == zl[3]) {
      if (h.path(1, 3).size() != 2 || h.path(2, 3).size() != 2) unreachable(g, "K4 subdivision is not smallest");
      const int x1 = h.branch[0], x2 = h.branch[1], x3 = h.branch[2], x4 = h.branch[3], zc = zl[1];
      VertexPath q1{z1, x1, x2, x4, x3, zc};
      VertexPath q2 = VertexPath{zc} + h.path(1, 2) + VertexPath{x1, x4};
      if (g.has_edge(z1, zc)) {
        Graph h3 = hs;
        h3.add_edge(z1, zc);
        return {"z-4-adjacent", ReducingSubgraph::make(g, h3, 3, paths_of({q1, q2, {z1, zc, x4}}))};
      }
      for (int y : g.neighbors(z1))
        if (!hs.has_edge(z1, y)) {
          q1.insert(q1.begin(), y);
          break;
        }
      Decomposition d = paths_of({q1, q2});
      return {"z-4", ReducingSubgraph::make(g, graph_of(d, g.n()), 2, d)};
    }
    if (zl[1] >= 0 && zl[1] == zl[3]) {
      std::swap(lab[1], lab[2]);
      std::swap(zl[1], zl[2]);
      h = by_labels(h0, lab);
    }
    const int x1 = h.branch[0], x4 = h.branch[3];
    VertexPath q24 = with_ends(zl[1], h.path(1, 2) + VertexPath{x1, x4}, zl[3]);
    VertexPath q13 = with_ends(z1, VertexPath{x1} + chain_of(h, {1, 3, 2}), zl[2]);
    return {"z-3", ReducingSubgraph::make(g, hs, 2, paths_of({q24, q13}))};
  }

  static ReducingSubgraph whole(const Graph& g, Decomposition d) {
    return ReducingSubgraph::make(g, g, g.non_isolated() / 2, std::move(d));
  }
  static ReducingSubgraph path_rs(const Graph& g, const VertexPath& p) {
    return ReducingSubgraph::make(g, graph_of_path(p, g.n()), 1, paths_of({p}));
  }

  EndgameConfig cfg_;
  std::vector<ReductionStep>* log_;
};

// Calls visit on Hamiltonian cycles of g (compact, every vertex used) until it returns true.
bool for_each_hamiltonian(const Graph& g, const std::function<bool(const VertexCycle&)>& visit) {
  const int n = g.n();
  if (n < 3) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) return false;
  VertexCycle path{0};
  std::vector<char> on(n, 0);
  on[0] = 1;
  // Every unvisited vertex still needs two usable neighbours.
  auto feasible = [&](int cur) {
    for (int w = 0; w < n; ++w) {
      if (on[w]) continue;
      int avail = 0;
      for (int y : g.neighbors(w))
        if (!on[y] || y == cur || y == 0) ++avail;
      if (avail < 2) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int cur) -> bool {
    if (static_cast<int>(path.size()) == n) {
      // Skip the reversed copy of each cycle.
      return g.has_edge(cur, 0) && path[1] < path.back() && visit(path);
    }
    if (!feasible(cur)) return false;
    for (int y : g.neighbors(cur)) {
      if (on[y]) continue;
      on[y] = 1;
      path.push_back(y);
      if (self(self, y)) return true;
      path.pop_back();
      on[y] = 0;
    }
    return false;
  };
  return dfs(dfs, 0);
}

// The six circuit decompositions: each uses Q1 with a branch chain, Q2 with a
// branch chain, and possibly a branch triangle.
struct Candidate {
  std::vector<int> with_q1, with_q2, triangle;
};
const Candidate kCandidates[6] = {
    {{0, 3, 2, 1}, {2, 0, 1, 3}, {}},
    {{0, 2, 3, 1}, {2, 1, 0, 3}, {}},
    {{0, 1}, {2, 1, 3}, {0, 2, 3}},
    {{0, 1}, {2, 0, 3}, {1, 2, 3}},
    {{0, 2, 1}, {2, 3}, {0, 3, 1}},
    {{0, 3, 1}, {2, 3}, {0, 2, 1}},
};

}  // namespace

Decomposition six_circuit_candidate(const K4Subdivision& h, const VertexPath& q1, const VertexPath& q2, int i) {
  if (i < 0 || i >= 6) throw Error(ErrorKind::InvalidArgument, "candidate index out of range");
  const Candidate& c = kCandidates[i];
  Decomposition d = double_paths_cycles(q1, chain_of(h, c.with_q1));
  d.append(double_paths_cycles(q2, chain_of(h, c.with_q2)));
  if (!c.triangle.empty()) {
    std::vector<int> closed = c.triangle;
    closed.push_back(closed.front());
    VertexCycle cyc = chain_of(h, closed);
    cyc.pop_back();
    d.add_cycle(cyc);
  }
  return d;
}

CircuitSetup circuit_setup(const Graph& g) {
  const int n = g.n();
  auto found = find_k4_subdivision(g);
  if (!found) throw Error(ErrorKind::InvalidArgument, "graph has no K4 subdivision", edge_list_dump(g));
  const K4Subdivision& h0 = *found;
  const Graph hg = h0.graph(n);
  // G - E(H) plus an apex joined to the four branch vertices.
  const int apex = n;
  Graph aux(n + 1);
  for (const Edge& e : difference(g, hg).edges()) aux.add_edge(e.u, e.v);
  for (int x : h0.branch) {
    if (g.degree(x) != 4) throw Error(ErrorKind::UnreachableCase, "branch vertex of degree 3", edge_list_dump(g));
    aux.add_edge(apex, x);
  }
  std::vector<VertexPath> qs;
  for (VertexCycle c : euler_cycle_partition(aux)) {
    auto at = std::find(c.begin(), c.end(), apex);
    if (at == c.end()) continue;
    std::rotate(c.begin(), at, c.end());
    qs.emplace_back(c.begin() + 1, c.end());
  }
  if (qs.size() != 2) throw Error(ErrorKind::UnreachableCase, "apex not on exactly two cycles", edge_list_dump(g));
  auto index = [&](int x) {
    return static_cast<int>(std::find(h0.branch.begin(), h0.branch.end(), x) - h0.branch.begin());
  };
  std::array<int, 4> lab{index(qs[0].front()), index(qs[0].back()), index(qs[1].front()), index(qs[1].back())};
  return {by_labels(h0, lab), qs[0], qs[1]};
}

namespace {

class CycleDriver {
 public:
  explicit CycleDriver(CycleStats* stats) : stats_(stats) {}

  Decomposition solve(const Graph& host) {
    Decomposition d;
    if (host.m() == 0) return d;
    auto bb = bridges_and_blocks(host);
    if (!bb.bridges.empty()) throw Error(ErrorKind::NotEulerian, "Eulerian graphs have no cut-edges", edge_list_dump(host));
    for (const auto& block : bb.blocks) {
      Graph b = Graph::from_edges(host.n(), block);
      Decomposition part = solve_block(b);
      if (part.size() > (b.non_isolated() - 1) / 2)
        throw Error(ErrorKind::BoundViolated, "block took " + std::to_string(part.size()) + " cycles", edge_list_dump(b));
      d.append(part);
    }
    return d;
  }

 private:
  CycleRecurse rec() {
    return [this](const Graph& h) { return solve(h); };
  }

  template <class F>
  void count(F f) {
    if (stats_) f(*stats_);
  }

  Decomposition solve_block(const Graph& host) {
    Subgraph s = compact(host);
    return to_host(solve_compact(s.graph), s.to_host);
  }

  Decomposition solve_compact(const Graph& g) {
    const int n = g.n();
    Decomposition d;
    if (auto c = as_cycle(g)) {
      d.add_cycle(*c);
      return d;
    }
    std::vector<int> two;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == 2) two.push_back(v);
    if (two.size() >= 2) {
      VertexCycle c = cycle_through_pair(g, two[0], two[1]);
      Decomposition w;
      w.add_cycle(c);
      return apply_cycle_reducing(g, ReducingSubgraph::make(g, graph_of(w, n), 1, w), rec());
    }
    if (n <= 8) {
      count([](CycleStats& s) { ++s.hamiltonian; });
      return small(g);
    }
    if (!has_k4_subdivision(g)) {
      count([](CycleStats& s) { ++s.k4_free; });
      return decompose_cycles_tw3(g);
    }
    return k4_cycles(g);
  }

  // A Hamiltonian cycle whose complement, a 2-regular graph, has the fewest cycles.
  Decomposition small(const Graph& g) {
    const int target = (g.n() - 1) / 2;
    Decomposition best;
    for_each_hamiltonian(g, [&](const VertexCycle& c) {
      Decomposition d;
      d.add_cycle(c);
      Graph rest = difference(g, graph_of(d, g.n()));
      for (const auto& comp : components(rest)) {
        auto cyc = as_cycle(restrict_to(rest, comp));
        if (!cyc) throw Error(ErrorKind::UnreachableCase, "complement of a Hamiltonian cycle is not 2-regular",
                              edge_list_dump(g));
        d.add_cycle(*cyc);
      }
      if (d.size() > target) return false;
      best = std::move(d);
      return true;
    });
    if (best.size() == 0)
      throw Error(ErrorKind::UnreachableCase, "no Hamiltonian cycle within the bound", edge_list_dump(g));
    return best;
  }

  Decomposition k4_cycles(const Graph& g) {
    CircuitSetup c = circuit_setup(g);
    return select(g, c.h, c.q1, c.q2);
  }

  Decomposition select(const Graph& g, const K4Subdivision& h, const VertexPath& q1, const VertexPath& q2) {
    const int n = g.n();
    Graph hstar = united(h.graph(n), united(graph_of_path(q1, n), graph_of_path(q2, n)));
    const int iso = isolated_after(g, hstar);
    const bool all = hstar.m() == g.m();
    const int target = all ? (n - 1) / 2 : iso / 2;
    SixCircuitReport rep = six_circuit_report(h, q1, q2);
    int sum = 0;
    for (int r : rep.r) sum += r;
    if (sum != 16 + 2 * rep.sigma) count([](CycleStats& s) { ++s.identity_failures; });
    for (int i = 0; i < 6; ++i) {
      if (rep.r[i] > target) continue;
      Decomposition d = six_circuit_candidate(h, q1, q2, i);
      if (d.size() > rep.r[i]) throw Error(ErrorKind::UnreachableCase, "candidate exceeds its count", edge_list_dump(g));
      count([i](CycleStats& s) { ++s.chosen[i]; });
      return finish(g, hstar, std::move(d));
    }
    if (rep.sigma >= 2 || all) {
      count([](CycleStats& s) { ++s.fallthrough; });
      throw Error(ErrorKind::UnreachableCase, "no circuit candidate within the bound", edge_list_dump(g));
    }
    count([](CycleStats& s) { ++s.special_case; });
    return finish(g, hstar, shared_vertex(g, h, q1, q2, rep));
  }

  // sigma = 1 with the shared vertex on P_34 and Q1 (or, symmetrically, on P_12 and Q2).
  Decomposition shared_vertex(const Graph& g, K4Subdivision h, VertexPath q1, VertexPath q2,
                              const SixCircuitReport& rep) {
    if (rep.at(1, 0, 1) == 1) {
      h = by_labels(h, {2, 3, 0, 1});
      std::swap(q1, q2);
    } else if (rep.at(0, 2, 3) != 1) {
      throw Error(ErrorKind::UnreachableCase, "single shared vertex off P_34 and P_12", edge_list_dump(g));
    }
    auto split = [&](const VertexPath& q, const K4Subdivision& k) {
      VertexPath p34 = k.path(2, 3);
      size_t i = 1;
      while (i + 1 < q.size() && !interior_contains(p34, q[i])) ++i;
      return i;
    };
    auto shared = [&](const VertexPath& part) {
      int t = 0;
      for (size_t i = 1; i + 1 < part.size(); ++i) t += std::find(q2.begin(), q2.end(), part[i]) != q2.end();
      return t;
    };
    size_t iv = split(q1, h);
    VertexPath r1(q1.begin(), q1.begin() + static_cast<long>(iv) + 1), r2(q1.begin() + static_cast<long>(iv), q1.end());
    if (shared(r1) > shared(r2)) {
      h = by_labels(h, {1, 0, 2, 3});
      std::reverse(q1.begin(), q1.end());
      iv = split(q1, h);
      r1.assign(q1.begin(), q1.begin() + static_cast<long>(iv) + 1);
      r2.assign(q1.begin() + static_cast<long>(iv), q1.end());
    }
    const int v = q1[iv];
    VertexPath p43 = h.path(3, 2);
    auto cut = std::find(p43.begin(), p43.end(), v);
    // R2 + P_23 + P_31 + P_14 + P_43 back to v.
    VertexCycle closed = r2;
    for (const VertexPath& p : {h.path(1, 2), h.path(2, 0), h.path(0, 3)}) closed.insert(closed.end(), p.begin() + 1, p.end());
    closed.insert(closed.end(), p43.begin() + 1, cut);
    Decomposition d;
    d.add_cycle(closed);
    // R1 against P_12 + P_24 + reversed Q2 + P_34 up to v.
    VertexPath other = chain_of(h, {0, 1, 3});
    other.insert(other.end(), q2.rbegin() + 1, q2.rend());
    VertexPath p34 = h.path(2, 3);
    other.insert(other.end(), p34.begin() + 1, std::find(p34.begin(), p34.end(), v) + 1);
    d.append(double_paths_cycles(r1, other));
    return d;
  }

  Decomposition finish(const Graph& g, const Graph& hstar, Decomposition d) {
    const int r = d.size();
    return apply_cycle_reducing(g, ReducingSubgraph::make(g, hstar, r, std::move(d)), rec());
  }

  CycleStats* stats_;
};

}  // namespace

PathOutcome decompose_paths_maxdeg4(const Graph& g, const EndgameConfig& cfg, std::vector<ReductionStep>* log) {
  if (g.max_degree() > 4)
    throw Error(ErrorKind::MaxDegreeExceeded, "maximum degree " + std::to_string(g.max_degree()), edge_list_dump(g));
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "decompose_paths_maxdeg4 needs a connected graph");
  Md4Driver driver(cfg, log);
  PathOutcome out = driver.solve(g);
  if (!out.is_special()) {
    auto v = verify_decomposition(g, out.paths);
    if (!v.ok()) throw Error(ErrorKind::UnreachableCase, "path decomposition failed verification", edge_list_dump(g));
    if (out.paths.size() > g.non_isolated() / 2)
      throw Error(ErrorKind::BoundViolated, std::to_string(out.paths.size()) + " paths", edge_list_dump(g));
  }
  return out;
}

Decomposition double_paths_cycles(const VertexPath& p1, const VertexPath& p2) {
  if (p1.size() < 2 || p2.size() < 2) throw Error(ErrorKind::InvalidArgument, "paths need at least one edge");
  VertexPath a = p1, b = p2;
  if (a.front() == b.back() && a.back() == b.front()) std::reverse(b.begin(), b.end());
  if (a.front() != b.front() || a.back() != b.back() || a.front() == a.back())
    throw Error(ErrorKind::EndpointMismatch, "paths must join the same two vertices");
  for (const VertexPath* p : {&a, &b}) {
    VertexPath sorted = *p;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::InvalidArgument, "repeated vertex on a path");
  }
  int n = 0;
  for (int v : a) n = std::max(n, v + 1);
  for (int v : b) n = std::max(n, v + 1);
  Graph ga = graph_of_path(a, n);
  for (size_t i = 0; i + 1 < b.size(); ++i)
    if (ga.has_edge(b[i], b[i + 1]))
      throw Error(ErrorKind::NotEdgeDisjoint, "edge " + std::to_string(b[i] + 1) + "-" + std::to_string(b[i + 1] + 1));

  Decomposition d;
  while (true) {
    // The shared interior vertex closest to the far end of a.
    size_t i = a.size() - 2;
    auto jt = b.end();
    for (; i >= 1; --i) {
      jt = std::find(b.begin() + 1, b.end() - 1, a[i]);
      if (jt != b.end() - 1) break;
    }
    if (i == 0) {
      VertexCycle c = a;
      c.insert(c.end(), b.rbegin() + 1, b.rend() - 1);
      d.add_cycle(c);
      return d;
    }
    const size_t j = static_cast<size_t>(jt - b.begin());
    VertexCycle c(a.begin() + static_cast<long>(i), a.end());
    c.insert(c.end(), b.rbegin() + 1, b.rbegin() + static_cast<long>(b.size() - j) - 1);
    d.add_cycle(c);
    a.resize(i + 1);
    b.resize(j + 1);
  }
}

std::optional<VertexCycle> hamiltonian_small(const Graph& g) {
  if (g.non_isolated() > 12)
    throw Error(ErrorKind::PreconditionViolated, std::to_string(g.non_isolated()) + " vertices, at most 12 supported");
  Subgraph s = compact(g);
  std::optional<VertexCycle> out;
  for_each_hamiltonian(s.graph, [&](const VertexCycle& c) {
    out = c;
    return true;
  });
  if (out)
    for (int& v : *out) v = s.to_host[v];
  return out;
}

SixCircuitReport six_circuit_report(const K4Subdivision& h, const VertexPath& q1, const VertexPath& q2) {
  SixCircuitReport rep;
  const VertexPath* qs[2] = {&q1, &q2};
  for (int k = 0; k < 2; ++k)
    for (int p = 0; p < 6; ++p) {
      const VertexPath& path = h.paths[p];
      for (size_t i = 1; i + 1 < path.size(); ++i)
        rep.s[k][p] += std::find(qs[k]->begin(), qs[k]->end(), path[i]) != qs[k]->end();
      rep.sigma += rep.s[k][p];
    }
  for (int c = 0; c < 6; ++c) {
    const Candidate& cand = kCandidates[c];
    int r = cand.triangle.empty() ? 2 : 3;
    for (size_t i = 0; i + 1 < cand.with_q1.size(); ++i) r += rep.at(0, cand.with_q1[i], cand.with_q1[i + 1]);
    for (size_t i = 0; i + 1 < cand.with_q2.size(); ++i) r += rep.at(1, cand.with_q2[i], cand.with_q2[i + 1]);
    rep.r[c] = r;
  }
  return rep;
}

Decomposition decompose_cycles_maxdeg4(const Graph& g, CycleStats* stats) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) % 2) throw Error(ErrorKind::NotEulerian, "vertex " + std::to_string(v + 1) + " has odd degree");
  if (g.max_degree() > 4)
    throw Error(ErrorKind::MaxDegreeExceeded, "maximum degree " + std::to_string(g.max_degree()), edge_list_dump(g));
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "decompose_cycles_maxdeg4 needs a connected graph");
  CycleDriver driver(stats);
  Decomposition d = driver.solve(g);
  auto v = verify_decomposition(g, d);
  if (!v.ok() || !d.all_cycles())
    throw Error(ErrorKind::UnreachableCase, "cycle decomposition failed verification", edge_list_dump(g));
  if (d.size() > (g.non_isolated() - 1) / 2)
    throw Error(ErrorKind::BoundViolated, std::to_string(d.size()) + " cycles", edge_list_dump(g));
  return d;
}

}  // namespace gd
