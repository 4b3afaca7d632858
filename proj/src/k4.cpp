#include "gd/k4.hpp"

#include <algorithm>
#include <set>

#include "gd/error.hpp"

namespace gd {

int K4Subdivision::pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  if (i < 0 || j > 3 || i == j) throw Error(ErrorKind::InvalidArgument, "bad branch pair");
  return table[i][j];
}

VertexPath K4Subdivision::path(int i, int j) const {
  VertexPath p = paths[pair_index(i, j)];
  if (i > j) std::reverse(p.begin(), p.end());
  return p;
}

int K4Subdivision::edge_count() const {
  int total = 0;
  for (const auto& p : paths) total += static_cast<int>(p.size()) - 1;
  return total;
}

Graph K4Subdivision::graph(int n) const {
  Graph h(n);
  for (const auto& p : paths)
    for (size_t i = 0; i + 1 < p.size(); ++i) h.add_edge(p[i], p[i + 1]);
  return h;
}

std::vector<int> K4Subdivision::internal_vertices() const {
  std::vector<int> out;
  for (const auto& p : paths) out.insert(out.end(), p.begin() + 1, p.end() - 1);
  return out;
}

K4Subdivision K4Subdivision::relabeled(const std::array<int, 4>& perm) const {
  K4Subdivision out;
  for (int i = 0; i < 4; ++i) out.branch[perm[i]] = branch[i];
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      int a = perm[i], b = perm[j];
      VertexPath p = path(i, j);
      if (a > b) std::reverse(p.begin(), p.end());
      out.paths[pair_index(a, b)] = std::move(p);
    }
  return out;
}

bool K4Subdivision::valid_in(const Graph& g) const {
  std::set<int> seen(branch.begin(), branch.end());
  if (seen.size() != 4) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const VertexPath& p = paths[pair_index(i, j)];
      if (p.size() < 2 || p.front() != branch[i] || p.back() != branch[j]) return false;
      for (size_t k = 0; k + 1 < p.size(); ++k)
        if (!g.has_edge(p[k], p[k + 1])) return false;
      for (size_t k = 1; k + 1 < p.size(); ++k)
        if (!seen.insert(p[k]).second) return false;
    }
  return true;
}

namespace {

// Series-parallel reduction: deletes vertices of degree <= 1 and suppresses
// degree-2 vertices. Anything left has minimum degree 3 and so a K4 minor.
bool reduces_to_nothing(const Graph& g) {
  const int n = g.n();
  std::vector<std::set<int>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (adj[v].size() <= 2) stack.push_back(v);
  std::vector<char> gone(n, 0);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (gone[v] || adj[v].size() > 2) continue;
    gone[v] = 1;
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    for (int x : nb) adj[x].erase(v);
    adj[v].clear();
    if (nb.size() == 2) {
      adj[nb[0]].insert(nb[1]);
      adj[nb[1]].insert(nb[0]);
    }
    for (int x : nb)
      if (adj[x].size() <= 2) stack.push_back(x);
  }
  for (int v = 0; v < n; ++v)
    if (!gone[v]) return false;
  return true;
}

struct Chain {
  int a = 0, b = 0;
  VertexPath walk;  // a ... b
};

// Removes vertices of degree one until none remain.
Graph prune_pendants(Graph u) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < u.n(); ++v)
      if (u.degree(v) == 1) {
        u.isolate(v);
        changed = true;
      }
  }
  return u;
}

std::vector<Chain> chains_of(const Graph& u) {
  std::vector<Chain> out;
  std::set<Edge> used;
  for (int a = 0; a < u.n(); ++a) {
    if (u.degree(a) < 3) continue;
    for (int first : u.neighbors(a)) {
      if (used.count(make_edge(a, first))) continue;
      VertexPath walk{a};
      int prev = a, cur = first;
      while (true) {
        walk.push_back(cur);
        used.insert(make_edge(prev, cur));
        if (u.degree(cur) != 2) break;
        int next = u.neighbors(cur)[0] == prev ? u.neighbors(cur)[1] : u.neighbors(cur)[0];
        prev = cur;
        cur = next;
      }
      if (walk.back() != a) out.push_back({a, walk.back(), walk});
    }
  }
  return out;
}

}  // namespace

bool has_k4_subdivision(const Graph& g) { return !reduces_to_nothing(g); }

std::optional<K4Subdivision> as_k4_subdivision(const Graph& h) {
  std::vector<int> branch;
  for (int v = 0; v < h.n(); ++v) {
    int d = h.degree(v);
    if (d == 3)
      branch.push_back(v);
    else if (d != 0 && d != 2)
      return std::nullopt;
  }
  if (branch.size() != 4) return std::nullopt;
  K4Subdivision k;
  for (int i = 0; i < 4; ++i) k.branch[i] = branch[i];
  std::array<bool, 6> filled{};
  int traced = 0;
  for (int i = 0; i < 4; ++i) {
    for (int first : h.neighbors(branch[i])) {
      VertexPath walk{branch[i]};
      int prev = branch[i], cur = first;
      while (h.degree(cur) == 2) {
        walk.push_back(cur);
        int next = h.neighbors(cur)[0] == prev ? h.neighbors(cur)[1] : h.neighbors(cur)[0];
        prev = cur;
        cur = next;
      }
      walk.push_back(cur);
      int j = static_cast<int>(std::find(branch.begin(), branch.end(), cur) - branch.begin());
      if (j == i) return std::nullopt;
      if (j < i) continue;
      int idx = K4Subdivision::pair_index(i, j);
      if (filled[idx]) return std::nullopt;
      filled[idx] = true;
      traced += static_cast<int>(walk.size()) - 1;
      k.paths[idx] = std::move(walk);
    }
  }
  for (bool f : filled)
    if (!f) return std::nullopt;
  // A stray cycle of degree-2 vertices would not have been traced.
  if (traced != h.m()) return std::nullopt;
  return k;
}

std::optional<K4Subdivision> improve_once(const Graph& g, const K4Subdivision& h) {
  Graph u = h.graph(g.n());
  for (int x : h.branch)
    for (int y : g.neighbors(x))
      if (!u.has_edge(x, y)) u.add_edge(x, y);
  u = prune_pendants(u);
  auto chains = chains_of(u);
  const int c = static_cast<int>(chains.size());

  int best = h.edge_count();
  std::vector<int> best_set;
  std::vector<int> chosen;
  std::vector<int> deg(g.n(), 0);
  int deg3 = 0, length = 0;

  auto dfs = [&](auto&& self, int i) -> void {
    if (length >= best) return;
    if (i == c) {
      if (deg3 != 4) return;
      // Touched nodes other than the branch vertices must have degree 2.
      for (int k : chosen)
        for (int end : {chains[k].a, chains[k].b})
          if (deg[end] != 2 && deg[end] != 3) return;
      Graph cand(g.n());
      for (int k : chosen)
        for (size_t s = 0; s + 1 < chains[k].walk.size(); ++s)
          cand.add_edge(chains[k].walk[s], chains[k].walk[s + 1]);
      if (as_k4_subdivision(cand)) {
        best = length;
        best_set = chosen;
      }
      return;
    }
    // Skip chain i.
    self(self, i + 1);
    const Chain& ch = chains[i];
    if (deg[ch.a] >= 3 || deg[ch.b] >= 3) return;
    int before = (deg[ch.a] == 3) + (deg[ch.b] == 3);
    ++deg[ch.a];
    ++deg[ch.b];
    int after = (deg[ch.a] == 3) + (deg[ch.b] == 3);
    deg3 += after - before;
    int len = static_cast<int>(ch.walk.size()) - 1;
    length += len;
    chosen.push_back(i);
    if (deg3 <= 4) self(self, i + 1);
    chosen.pop_back();
    length -= len;
    deg3 -= after - before;
    --deg[ch.a];
    --deg[ch.b];
  };
  dfs(dfs, 0);
  if (best_set.empty()) return std::nullopt;
  Graph cand(g.n());
  for (int k : best_set)
    for (size_t s = 0; s + 1 < chains[k].walk.size(); ++s)
      cand.add_edge(chains[k].walk[s], chains[k].walk[s + 1]);
  return as_k4_subdivision(cand);
}

std::optional<K4Subdivision> find_k4_subdivision(const Graph& g) {
  if (!has_k4_subdivision(g)) return std::nullopt;
  Graph h = g;
  for (const Edge& e : g.edges()) {
    h.remove_edge(e.u, e.v);
    if (!has_k4_subdivision(h)) h.add_edge(e.u, e.v);
  }
  auto k = as_k4_subdivision(h);
  if (!k) throw Error(ErrorKind::UnreachableCase, "edge-minimal K4 minor is not a subdivision", edge_list_dump(g));
  while (auto better = improve_once(g, *k)) k = better;
  return k;
}

}  // namespace gd
