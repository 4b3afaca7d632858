#include "gd/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "gd/error.hpp"

namespace gd {

BridgesAndBlocks bridges_and_blocks(const Graph& g) {
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0), size(n, 0);
  std::vector<Edge> stack;
  BridgesAndBlocks out;
  int timer = 0;
  struct Pending {
    Edge e;
    int below;
  };
  std::vector<Pending> pending;

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    size[u] = 1;
    for (int w : g.neighbors(u)) {
      if (w == parent) continue;
      if (disc[w] == -1) {
        stack.push_back(make_edge(u, w));
        dfs(w, u);
        size[u] += size[w];
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<Edge> block;
          Edge top;
          do {
            top = stack.back();
            stack.pop_back();
            block.push_back(top);
          } while (top != make_edge(u, w));
          if (block.size() == 1) {
            pending.push_back({block[0], size[w]});
          } else {
            std::sort(block.begin(), block.end());
            out.blocks.push_back(std::move(block));
          }
        }
      } else if (disc[w] < disc[u]) {
        stack.push_back(make_edge(u, w));
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };

  for (int s = 0; s < n; ++s) {
    if (disc[s] != -1 || g.degree(s) == 0) continue;
    pending.clear();
    dfs(s, -1);
    int total = size[s];
    for (const auto& p : pending) {
      bool useful = p.below >= 2 && total - p.below >= 2;
      out.bridges.push_back({p.e, useful ? BridgeKind::Useful : BridgeKind::Useless});
    }
  }
  std::sort(out.bridges.begin(), out.bridges.end(),
            [](const Bridge& a, const Bridge& b) { return a.edge < b.edge; });
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

std::vector<std::pair<Edge, Edge>> two_edge_cuts(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "two_edge_cuts needs a connected graph");
  std::set<Edge> bridges;
  for (const auto& b : bridges_and_blocks(g).bridges) bridges.insert(b.edge);
  std::set<std::pair<Edge, Edge>> cuts;
  for (const Edge& e : g.edges()) {
    if (bridges.count(e)) continue;
    Graph h = g;
    h.remove_edge(e.u, e.v);
    for (const auto& b : bridges_and_blocks(h).bridges) {
      if (bridges.count(b.edge)) continue;
      cuts.insert(std::minmax(e, b.edge));
    }
  }
  return {cuts.begin(), cuts.end()};
}

std::optional<VertexPath> shortest_path(const Graph& g, std::span<const int> sources,
                                        std::span<const int> targets,
                                        std::span<const int> forbidden) {
  const int n = g.n();
  std::vector<char> blocked(n, 0), is_target(n, 0);
  for (int f : forbidden) blocked[f] = 1;
  for (int t : targets) is_target[t] = 1;
  std::vector<int> parent(n, -2);
  std::deque<int> queue;
  std::vector<int> srcs(sources.begin(), sources.end());
  std::sort(srcs.begin(), srcs.end());
  for (int s : srcs) {
    if (blocked[s] || parent[s] != -2) continue;
    parent[s] = -1;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (is_target[x]) {
      VertexPath p;
      for (int y = x; y != -1; y = parent[y]) p.push_back(y);
      std::reverse(p.begin(), p.end());
      return p;
    }
    for (int y : g.neighbors(x)) {
      if (blocked[y] || parent[y] != -2) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

VertexCycle cycle_through_pair(const Graph& g, int u, int v) {
  if (u == v) throw Error(ErrorKind::InvalidArgument, "cycle_through_pair needs u != v");
  const int n = g.n();
  // Node 2x is x_in, 2x+1 is x_out; internal vertices have unit capacity.
  struct Arc {
    int to, cap, rev;
  };
  std::vector<std::vector<Arc>> net(2 * n);
  auto add = [&](int a, int b, int cap) {
    net[a].push_back({b, cap, static_cast<int>(net[b].size())});
    net[b].push_back({a, 0, static_cast<int>(net[a].size()) - 1});
  };
  for (int x = 0; x < n; ++x) add(2 * x, 2 * x + 1, (x == u || x == v) ? 2 : 1);
  for (const Edge& e : g.edges()) {
    add(2 * e.u + 1, 2 * e.v, 1);
    add(2 * e.v + 1, 2 * e.u, 1);
  }
  const int source = 2 * u + 1, sink = 2 * v;
  int flow = 0;
  while (flow < 2) {
    std::vector<std::pair<int, int>> prev(2 * n, {-1, -1});
    std::deque<int> q{source};
    prev[source] = {source, -1};
    while (!q.empty() && prev[sink].first == -1) {
      int x = q.front();
      q.pop_front();
      for (int i = 0; i < static_cast<int>(net[x].size()); ++i) {
        const Arc& a = net[x][i];
        if (a.cap > 0 && prev[a.to].first == -1) {
          prev[a.to] = {x, i};
          q.push_back(a.to);
        }
      }
    }
    if (prev[sink].first == -1) break;
    for (int y = sink; y != source;) {
      auto [x, i] = prev[y];
      net[x][i].cap -= 1;
      net[y][net[x][i].rev].cap += 1;
      y = x;
    }
    ++flow;
  }
  if (flow < 2) throw Error(ErrorKind::NotTwoConnected, "fewer than two disjoint paths");

  // Net flow on vertex-to-vertex arcs.
  std::map<std::pair<int, int>, int> net_flow;
  for (const Edge& e : g.edges()) {
    auto used = [&](int a, int b) {
      for (const Arc& arc : net[2 * a + 1])
        if (arc.to == 2 * b) return arc.cap == 0 ? 1 : 0;
      return 0;
    };
    int f = used(e.u, e.v) - used(e.v, e.u);
    if (f > 0) net_flow[{e.u, e.v}] = 1;
    if (f < 0) net_flow[{e.v, e.u}] = 1;
  }
  std::vector<VertexPath> paths;
  for (int k = 0; k < 2; ++k) {
    VertexPath p{u};
    int x = u;
    while (x != v) {
      auto it = std::find_if(net_flow.begin(), net_flow.end(),
                             [&](const auto& kv) { return kv.first.first == x && kv.second > 0; });
      if (it == net_flow.end()) throw Error(ErrorKind::UnreachableCase, "flow decomposition failed");
      it->second = 0;
      x = it->first.second;
      p.push_back(x);
    }
    paths.push_back(std::move(p));
  }
  VertexCycle c = paths[0];
  for (int i = static_cast<int>(paths[1].size()) - 2; i >= 1; --i) c.push_back(paths[1][i]);
  if (c.size() < 3) throw Error(ErrorKind::NotTwoConnected, "degenerate cycle");
  return c;
}

std::vector<VertexCycle> euler_cycle_partition(const Graph& g) {
  for (int x = 0; x < g.n(); ++x)
    if (g.degree(x) % 2 != 0)
      throw Error(ErrorKind::OddVertex, "vertex " + std::to_string(x) + " has odd degree");
  Graph rest = g;
  std::vector<VertexCycle> out;
  std::vector<int> pos(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    while (rest.degree(s) > 0) {
      std::vector<int> walk{s};
      pos[s] = 0;
      int x = s;
      while (true) {
        int y = rest.neighbors(x).front();
        rest.remove_edge(x, y);
        if (pos[y] != -1) {
          VertexCycle c(walk.begin() + pos[y], walk.end());
          for (size_t i = pos[y] + 1; i < walk.size(); ++i) pos[walk[i]] = -1;
          walk.resize(pos[y] + 1);
          out.push_back(std::move(c));
        } else {
          pos[y] = static_cast<int>(walk.size());
          walk.push_back(y);
        }
        x = y;
        if (rest.degree(x) == 0) break;
      }
      for (int w : walk) pos[w] = -1;
    }
  }
  return out;
}

std::optional<int> girth(const Graph& g) {
  int best = -1;
  const int n = g.n();
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : g.neighbors(x)) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push_back(y);
        } else if (parent[x] != y) {
          int len = dist[x] + dist[y] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

const char* to_string(SpecialGraph s) {
  switch (s) {
    case SpecialGraph::None: return "None";
    case SpecialGraph::K3: return "K3";
    case SpecialGraph::K5: return "K5";
    case SpecialGraph::K5minus: return "K5minus";
    case SpecialGraph::K44MinusPM: return "K44_minus_PM";
    case SpecialGraph::QuasiComplete: return "QuasiComplete";
  }
  return "None";
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

Graph k5_minus() {
  Graph g = complete_graph(5);
  g.remove_edge(0, 1);
  return g;
}

Graph k44_minus_pm() {
  // a_i = i, b_j = 4 + j, a_i ~ b_j iff i != j.
  Graph g(8);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) g.add_edge(i, 4 + j);
  return g;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& pattern, const Graph& host) {
  Subgraph h = compact(host);
  const Graph& hg = h.graph;
  const int n = pattern.n();
  if (hg.n() != n || hg.m() != pattern.m()) return std::nullopt;
  std::vector<int> pd, hd;
  for (int v = 0; v < n; ++v) {
    pd.push_back(pattern.degree(v));
    hd.push_back(hg.degree(v));
  }
  std::sort(pd.begin(), pd.end());
  std::sort(hd.begin(), hd.end());
  if (pd != hd) return std::nullopt;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int i) {
    if (i == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c] || hg.degree(c) != pattern.degree(i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = pattern.has_edge(i, j) == hg.has_edge(c, map[j]);
      if (!ok) continue;
      map[i] = c;
      used[c] = 1;
      if (extend(i + 1)) return true;
      used[c] = 0;
    }
    map[i] = -1;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  for (int& v : map) v = h.to_host[v];
  return map;
}

SpecialGraph recognize_special(const Graph& g) {
  const int n = g.non_isolated();
  if (n == 3 && find_isomorphism(complete_graph(3), g)) return SpecialGraph::K3;
  if (n == 5 && find_isomorphism(complete_graph(5), g)) return SpecialGraph::K5;
  if (n == 5 && find_isomorphism(k5_minus(), g)) return SpecialGraph::K5minus;
  if (n == 8 && find_isomorphism(k44_minus_pm(), g)) return SpecialGraph::K44MinusPM;
  if (n % 2 == 1 && g.m() > (n / 2) * (n - 1)) return SpecialGraph::QuasiComplete;
  return SpecialGraph::None;
}

namespace {

// Walks the unique trail through a graph whose degrees are all <= 2.
std::vector<int> walk_from(const Graph& g, int start) {
  std::vector<int> seq{start};
  int prev = -1, x = start;
  while (true) {
    int next = -1;
    for (int y : g.neighbors(x))
      if (y != prev) {
        next = y;
        break;
      }
    if (next == -1 || next == start) break;
    seq.push_back(next);
    prev = x;
    x = next;
  }
  return seq;
}

}  // namespace

std::optional<VertexPath> as_path(const Graph& g) {
  if (g.m() == 0) return std::nullopt;
  if (!is_connected(g) || g.max_degree() > 2) return std::nullopt;
  int start = -1;
  for (int v = 0; v < g.n() && start == -1; ++v)
    if (g.degree(v) == 1) start = v;
  if (start == -1) return std::nullopt;
  VertexPath p = walk_from(g, start);
  if (static_cast<int>(p.size()) != g.m() + 1) return std::nullopt;
  return p;
}

std::optional<VertexCycle> as_cycle(const Graph& g) {
  if (g.m() < 3 || !is_connected(g)) return std::nullopt;
  int start = -1;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) != 0 && g.degree(v) != 2) return std::nullopt;
    if (g.degree(v) == 2 && start == -1) start = v;
  }
  VertexCycle c = walk_from(g, start);
  if (static_cast<int>(c.size()) != g.m()) return std::nullopt;
  return c;
}

}  // namespace gd
