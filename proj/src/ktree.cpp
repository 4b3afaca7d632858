#include "gd/ktree.hpp"

#include <algorithm>
#include <functional>

#include "gd/error.hpp"

namespace gd {

namespace {

// Working graph for the reduction rules: adjacency matrix plus degrees.
class Reducer {
 public:
  explicit Reducer(const Graph& g) : n_(g.n()), adj_(n_, std::vector<char>(n_, 0)), deg_(n_, 0), alive_(n_, 1) {
    for (const Edge& e : g.edges()) {
      adj_[e.u][e.v] = adj_[e.v][e.u] = 1;
      ++deg_[e.u];
      ++deg_[e.v];
    }
    remaining_ = n_;
  }

  std::vector<int> nbrs(int v) const {
    std::vector<int> out;
    for (int w = 0; w < n_; ++w)
      if (alive_[w] && adj_[v][w]) out.push_back(w);
    return out;
  }

  void eliminate(int v, std::vector<Elimination>& record) {
    std::vector<int> nb = nbrs(v);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) connect(nb[i], nb[j]);
    for (int w : nb) {
      adj_[v][w] = adj_[w][v] = 0;
      --deg_[w];
    }
    deg_[v] = 0;
    alive_[v] = 0;
    --remaining_;
    record.push_back({v, nb});
  }

  // One rule application; false when no rule applies.
  bool step(std::vector<Elimination>& record) {
    for (int v = 0; v < n_; ++v)
      if (alive_[v] && deg_[v] <= 2) {
        eliminate(v, record);
        return true;
      }
    for (int v = 0; v < n_; ++v)
      if (alive_[v] && deg_[v] == 3 && !independent(nbrs(v))) {
        eliminate(v, record);
        return true;
      }
    // Two degree-3 vertices sharing an independent neighborhood.
    for (int v = 0; v < n_; ++v) {
      if (!alive_[v] || deg_[v] != 3) continue;
      auto nv = nbrs(v);
      for (int w = v + 1; w < n_; ++w)
        if (alive_[w] && deg_[w] == 3 && nbrs(w) == nv) {
          eliminate(v, record);
          eliminate(w, record);
          return true;
        }
    }
    // Cube configuration: v with neighbors w1..w3 of degree 3, where
    // N(w_i) - v are the three two-element subsets of {x1, x2, x3}.
    for (int v = 0; v < n_; ++v) {
      if (!alive_[v] || deg_[v] != 3) continue;
      auto ws = nbrs(v);
      if (!std::all_of(ws.begin(), ws.end(), [&](int w) { return deg_[w] == 3; })) continue;
      std::vector<int> xs;
      bool ok = true;
      for (int w : ws) {
        auto nw = nbrs(w);
        nw.erase(std::find(nw.begin(), nw.end(), v));
        for (int x : nw) {
          if (x == v || std::find(ws.begin(), ws.end(), x) != ws.end()) ok = false;
          xs.push_back(x);
        }
      }
      if (!ok) continue;
      std::sort(xs.begin(), xs.end());
      if (xs.size() != 6 || xs[0] != xs[1] || xs[2] != xs[3] || xs[4] != xs[5] || xs[1] == xs[2] ||
          xs[3] == xs[4])
        continue;
      bool pairs_distinct = true;
      for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = i + 1; j < ws.size(); ++j)
          if (nbrs(ws[i]) == nbrs(ws[j])) pairs_distinct = false;
      if (!pairs_distinct) continue;
      for (int w : ws) eliminate(w, record);
      eliminate(v, record);
      return true;
    }
    return false;
  }

  int remaining() const { return remaining_; }

 private:
  void connect(int a, int b) {
    if (adj_[a][b]) return;
    adj_[a][b] = adj_[b][a] = 1;
    ++deg_[a];
    ++deg_[b];
  }

  bool independent(const std::vector<int>& vs) const {
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j)
        if (adj_[vs[i]][vs[j]]) return false;
    return true;
  }

  int n_;
  std::vector<std::vector<char>> adj_;
  std::vector<int> deg_;
  std::vector<char> alive_;
  int remaining_ = 0;
};

Graph rebuild(int n, const std::vector<Elimination>& record) {
  Graph t(n);
  std::vector<int> placed;
  for (auto it = record.rbegin(); it != record.rend(); ++it) {
    const int x = it->vertex;
    std::vector<int> clique;
    if (placed.size() < 3) {
      clique = placed;
    } else {
      std::vector<int> nb = it->neighborhood;
      std::sort(placed.begin(), placed.end());
      // Extend nb greedily to a triangle of t; every clique of size <= 3 in a
      // 3-tree lies in one.
      std::function<bool(std::vector<int>&)> grow = [&](std::vector<int>& cur) {
        if (cur.size() == 3) return true;
        for (int w : placed) {
          if (std::find(cur.begin(), cur.end(), w) != cur.end()) continue;
          if (!std::all_of(cur.begin(), cur.end(), [&](int c) { return t.has_edge(c, w); })) continue;
          cur.push_back(w);
          if (grow(cur)) return true;
          cur.pop_back();
        }
        return false;
      };
      if (!grow(nb)) throw Error(ErrorKind::UnreachableCase, "3-tree rebuild found no triangle");
      clique = nb;
    }
    for (int c : clique) t.add_edge(x, c);
    placed.push_back(x);
  }
  return t;
}

}  // namespace

Graph UnderlyingKTree::tree() const {
  Graph t = base;
  for (const Edge& e : fill) t.add_edge(e.u, e.v);
  return t;
}

std::optional<UnderlyingKTree> embed_partial_3tree(const Graph& g) {
  if (g.n() < 3) return std::nullopt;
  Reducer red(g);
  UnderlyingKTree out;
  out.base = g;
  while (red.remaining() > 0)
    if (!red.step(out.elimination)) return std::nullopt;
  Graph t = rebuild(g.n(), out.elimination);
  for (const Edge& e : t.edges())
    if (!g.has_edge(e.u, e.v)) out.fill.push_back(e);
  return out;
}

std::vector<int> terminals(const UnderlyingKTree& t) {
  Graph tree = t.tree();
  std::vector<int> out;
  for (int v = 0; v < tree.n(); ++v)
    if (tree.degree(v) == 3 || tree.n() == 3) out.push_back(v);
  return out;
}

std::optional<DoubleCenteredForm> double_centered_form(const Graph& g3) {
  const int n = g3.n();
  for (const Edge& e : g3.edges()) {
    bool dominating = true;
    for (int x = 0; x < n && dominating; ++x)
      if (x != e.u && x != e.v) dominating = g3.has_edge(x, e.u) && g3.has_edge(x, e.v);
    if (!dominating) continue;
    Graph spine = g3;
    spine.isolate(e.u);
    spine.isolate(e.v);
    int rest = n - 2;
    bool tree = spine.m() == rest - 1 && (rest == 1 || (spine.non_isolated() == rest && is_connected(spine)));
    if (tree) return DoubleCenteredForm{e.u, e.v, std::move(spine)};
  }
  return std::nullopt;
}

bool is_three_tree(const Graph& g) {
  const int n = g.n();
  if (n < 3) return false;
  if (g.m() != 3 * n - 6) return false;
  Graph h = g;
  std::vector<char> alive(n, 1);
  int left = n;
  while (left > 3) {
    int pick = -1;
    for (int v = 0; v < n && pick == -1; ++v) {
      if (!alive[v] || h.degree(v) != 3) continue;
      const auto& nb = h.neighbors(v);
      if (h.has_edge(nb[0], nb[1]) && h.has_edge(nb[0], nb[2]) && h.has_edge(nb[1], nb[2])) pick = v;
    }
    if (pick == -1) return false;
    h.isolate(pick);
    alive[pick] = 0;
    --left;
  }
  return h.m() == 3;
}

}  // namespace gd
